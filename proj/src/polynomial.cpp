#include "hypersum/polynomial.hpp"

#include "hypersum/eval.hpp"

#include <sstream>
#include <utility>

namespace hypersum {

std::string_view to_string(PolyFormat f) {
    switch (f) {
        case PolyFormat::plain: return "plain";
        case PolyFormat::latex: return "latex";
        case PolyFormat::csv: return "csv";
    }
    return "?";
}

std::optional<PolyFormat> parse_poly_format(std::string_view name) {
    if (name == "plain") return PolyFormat::plain;
    if (name == "latex") return PolyFormat::latex;
    if (name == "csv") return PolyFormat::csv;
    return std::nullopt;
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational RationalPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational() : coeffs_.back();
}

RationalPolynomial closed_form_poly(const Natural& m, const Natural& k) {
    if (k.is_zero()) {
        throw std::invalid_argument("closed_form_poly: k must be >= 1");
    }
    const std::uint64_t degree_wanted =
        static_cast<std::uint64_t>(m.to_index()) + k.to_index();
    if (degree_wanted > (1u << 20)) {
        throw std::domain_error("closed_form_poly: degree m+k too large to interpolate");
    }
    const std::uint32_t d = static_cast<std::uint32_t>(degree_wanted);  // target degree

    EvalSession session;
    auto value_at = [&](std::uint32_t n) {
        return session.closed(HypersumQuery(Natural(n), m, k));
    };

    // Master polynomial M(x) = prod_{i=0..d} (x - i), integer coefficients.
    std::vector<BigInt> master{1};
    for (std::uint32_t i = 0; i <= d; ++i) {
        master.insert(master.begin(), 0);  // multiply by x
        for (std::size_t c = 0; c + 1 < master.size(); ++c) {
            master[c] -= BigInt(i) * master[c + 1];  // subtract i * (shifted)
        }
    }

    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational());
    for (std::uint32_t j = 0; j <= d; ++j) {
        Natural y = value_at(j);
        if (y.is_zero()) {
            continue;  // node contributes nothing (always the case at j = 0)
        }
        // Synthetic division: Q_j = M / (x - j), exact by construction.
        std::vector<BigInt> q(static_cast<std::size_t>(d) + 1);
        q[d] = master[d + 1];
        for (std::int64_t i = static_cast<std::int64_t>(d) - 1; i >= 0; --i) {
            q[i] = master[i + 1] + BigInt(j) * q[i + 1];
        }
        // Barycentric weight prod_{i != j} (j - i) = (-1)^(d-j) * j! * (d-j)!.
        BigInt w = factorial(Natural(j)).value() * factorial(Natural(d - j)).value();
        if ((d - j) % 2 == 1) {
            w = -w;
        }
        for (std::uint32_t i = 0; i <= d; ++i) {
            coeffs[i] += Rational(Integer(BigInt(y.value() * q[i])), Integer(w));
        }
    }

    RationalPolynomial poly(std::move(coeffs));

    if (poly.degree() != d) {
        throw PolynomialConstructionError(
            "interpolated polynomial for (m=" + m.str() + ", k=" + k.str() +
            ") has degree " + std::to_string(poly.degree()) + ", expected " +
            std::to_string(d));
    }
    if (!poly.coefficient(0).is_zero()) {
        throw PolynomialConstructionError("nonzero constant term for (m=" + m.str() +
                                          ", k=" + k.str() + ")");
    }
    // Control points beyond the interpolation nodes.
    for (std::uint32_t n = d + 1; n <= 2 * d + 1; ++n) {
        if (poly_eval(poly, Natural(n)) != Rational(value_at(n))) {
            throw PolynomialConstructionError(
                "interpolated polynomial disagrees with the closed form at n=" +
                std::to_string(n));
        }
    }
    return poly;
}

Rational poly_eval(const RationalPolynomial& p, const Natural& n) {
    Rational acc;
    const auto& coeffs = p.coefficients();
    Rational x{Integer(n)};
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
    }
    return acc;
}

namespace {

std::string plain_term(const Rational& abs_coeff, std::size_t power) {
    std::string var = power == 0 ? "" : power == 1 ? "n" : "n^" + std::to_string(power);
    if (var.empty()) {
        return abs_coeff.str();
    }
    if (abs_coeff == Rational(1)) {
        return var;
    }
    return abs_coeff.str() + "*" + var;
}

std::string latex_coeff(const Rational& abs_coeff) {
    if (abs_coeff.is_integral()) {
        return abs_coeff.str();
    }
    return "\\frac{" + abs_coeff.numerator().str() + "}{" + abs_coeff.denominator().str() + "}";
}

std::string latex_term(const Rational& abs_coeff, std::size_t power) {
    std::string var = power == 0 ? "" : power == 1 ? "n" : "n^{" + std::to_string(power) + "}";
    if (var.empty()) {
        return latex_coeff(abs_coeff);
    }
    if (abs_coeff == Rational(1)) {
        return var;
    }
    return latex_coeff(abs_coeff) + var;
}

template <typename TermFn>
std::string render_sum(const RationalPolynomial& p, TermFn&& term) {
    std::string out;
    const auto& coeffs = p.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) {
            continue;
        }
        bool negative = coeffs[i].numerator().is_negative();
        Rational abs_coeff = negative ? -coeffs[i] : coeffs[i];
        if (out.empty()) {
            out = negative ? "-" + term(abs_coeff, i) : term(abs_coeff, i);
        } else {
            out += (negative ? " - " : " + ") + term(abs_coeff, i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string poly_render(const RationalPolynomial& p, PolyFormat format) {
    switch (format) {
        case PolyFormat::plain:
            return render_sum(p, plain_term);
        case PolyFormat::latex:
            return render_sum(p, latex_term);
        case PolyFormat::csv: {
            std::ostringstream out;
            out << "power,coefficient\n";
            if (p.is_zero()) {
                out << "0,0\n";
            } else {
                for (std::size_t i = 0; i <= p.degree(); ++i) {
                    out << i << ',' << p.coefficient(i).str() << '\n';
                }
            }
            return out.str();
        }
    }
    throw std::logic_error("unreachable: unknown PolyFormat");
}

}  // namespace hypersum
