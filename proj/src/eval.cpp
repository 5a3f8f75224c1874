#include "hypersum/eval.hpp"

#include "hypersum/polynomial.hpp"

#include <utility>

namespace hypersum {

std::string_view to_string(EvalMethod m) {
    switch (m) {
        case EvalMethod::direct: return "direct";
        case EvalMethod::closed: return "closed";
        case EvalMethod::theorem: return "theorem";
        case EvalMethod::cereceda: return "cereceda";
        case EvalMethod::polynomial: return "polynomial";
    }
    return "?";
}

std::optional<EvalMethod> parse_method(std::string_view name) {
    for (EvalMethod m : kAllMethods) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

HypersumQuery::HypersumQuery(Natural n, Natural m, Natural k)
    : n_(std::move(n)), m_(std::move(m)), k_(std::move(k)) {
    if (k_.is_zero()) {
        throw std::invalid_argument("HypersumQuery: k must be >= 1");
    }
}

Natural f_base_m0(const Natural& n, const Natural& k) {
    if (k.is_zero()) {
        throw std::invalid_argument("f_base_m0: k must be >= 1");
    }
    // n + k - 1 >= 0 since k >= 1.
    return binom(Natural(BigInt(n.value() + k.value() - 1)), k);
}

bool kernel_check(const Natural& n, const Natural& k, const Natural& r) {
    if (k.is_zero() || r.is_zero() || r > n) {
        throw std::invalid_argument("kernel_check: requires 1 <= r <= n and k >= 1");
    }
    Natural a(BigInt(n.value() - r.value() + k.value() - 1));
    Natural k_minus_1(BigInt(k.value() - 1));
    Integer lhs = Integer(n) * Integer(binom(a, k_minus_1)) - Integer(k) * Integer(binom(a, k));
    Integer rhs = Integer(r) * Integer(binom(a, k_minus_1));
    return lhs == rhs;
}

EvalSession::EvalSession() = default;
EvalSession::~EvalSession() = default;
EvalSession::EvalSession(EvalSession&&) noexcept = default;
EvalSession& EvalSession::operator=(EvalSession&&) noexcept = default;

Natural EvalSession::direct(const HypersumQuery& q) {
    const std::uint32_t n = q.n().to_index();
    const std::uint32_t m = q.m().to_index();
    const std::uint32_t k = q.k().to_index();

    auto& rows = direct_tables_[m];

    // Widen existing rows to n+1 columns. Row 0 holds F(t,m,1); row j is the
    // running prefix sum of row j-1, so widening must go bottom-up.
    const std::size_t want_cols = static_cast<std::size_t>(n) + 1;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        auto& row = rows[j];
        while (row.size() < want_cols) {
            std::uint32_t t = static_cast<std::uint32_t>(row.size());
            Natural term = j == 0 ? ipow(Natural(t), q.m()) : rows[j - 1][t];
            row.push_back(row.back() + term);
        }
    }
    // Add rows for deeper nesting levels.
    while (rows.size() < k) {
        std::vector<Natural> row;
        row.reserve(want_cols);
        row.emplace_back(0);  // F(0,m,*) = 0, empty sum
        for (std::uint32_t t = 1; t < want_cols; ++t) {
            Natural term = rows.empty() ? ipow(Natural(t), q.m()) : rows.back()[t];
            row.push_back(row.back() + term);
        }
        rows.push_back(std::move(row));
    }
    return rows[k - 1][n];
}

Natural EvalSession::closed(const HypersumQuery& q) { return f_closed(q); }

Natural f_closed(const HypersumQuery& q) {
    const std::uint32_t n = q.n().to_index();
    Natural k_minus_1(BigInt(q.k().value() - 1));
    BigInt acc = 0;
    for (std::uint32_t r = 1; r <= n; ++r) {
        Natural weight = binom(Natural(BigInt(q.n().value() - r + k_minus_1.value())),
                               k_minus_1);
        acc += weight.value() * ipow(Natural(r), q.m()).value();
    }
    return Natural(std::move(acc));
}

Natural EvalSession::theorem(const HypersumQuery& q) {
    return theorem_rec(q.n().to_index(), q.m().to_index(), q.k().to_index());
}

Natural EvalSession::theorem_rec(std::uint32_t n, std::uint32_t m, std::uint32_t k) {
    if (n == 0) {
        return Natural(0);
    }
    if (m == 0) {
        return f_base_m0(Natural(n), Natural(k));
    }
    const std::array<std::uint32_t, 3> key{n, m, k};
    if (auto it = theorem_memo_.find(key); it != theorem_memo_.end()) {
        return it->second;
    }
    Integer value = Integer(Natural(n)) * Integer(theorem_rec(n, m - 1, k)) -
                    Integer(Natural(k)) * Integer(theorem_rec(n - 1, m - 1, k + 1));
    if (value.is_negative()) {
        throw InternalNegativeError("theorem recurrence went negative at (" +
                                    std::to_string(n) + "," + std::to_string(m) + "," +
                                    std::to_string(k) + ")");
    }
    Natural result = value.to_natural();
    theorem_memo_.emplace(key, result);
    return result;
}

Natural EvalSession::cereceda(const HypersumQuery& q) {
    return cereceda_rec(q.n().to_index(), q.m().to_index(), q.k().to_index());
}

Natural EvalSession::cereceda_rec(std::uint32_t n, std::uint32_t m, std::uint32_t k) {
    if (n == 0) {
        return Natural(0);
    }
    if (m == 0) {
        return f_base_m0(Natural(n), Natural(k));
    }
    const std::array<std::uint32_t, 3> key{n, m, k};
    if (auto it = cereceda_memo_.find(key); it != cereceda_memo_.end()) {
        return it->second;
    }
    Integer value =
        Integer(Natural(static_cast<std::uint64_t>(n) + k)) * Integer(cereceda_rec(n, m - 1, k)) -
        Integer(Natural(k)) * Integer(cereceda_rec(n, m - 1, k + 1));
    if (value.is_negative()) {
        throw InternalNegativeError("depth-raising recurrence went negative at (" +
                                    std::to_string(n) + "," + std::to_string(m) + "," +
                                    std::to_string(k) + ")");
    }
    Natural result = value.to_natural();
    cereceda_memo_.emplace(key, result);
    return result;
}

Natural EvalSession::polynomial(const HypersumQuery& q) {
    const std::pair<std::uint32_t, std::uint32_t> key{q.m().to_index(), q.k().to_index()};
    auto it = poly_cache_.find(key);
    if (it == poly_cache_.end()) {
        auto poly = std::make_unique<const RationalPolynomial>(closed_form_poly(q.m(), q.k()));
        it = poly_cache_.emplace(key, std::move(poly)).first;
    }
    Rational value = poly_eval(*it->second, q.n());
    if (!value.is_integral()) {
        throw std::logic_error("closed-form polynomial evaluated to a non-integer at n=" +
                               q.n().str());
    }
    if (value.numerator().is_negative()) {
        throw InternalNegativeError("closed-form polynomial evaluated negative at n=" +
                                    q.n().str());
    }
    return value.numerator().to_natural();
}

Natural EvalSession::eval(const HypersumQuery& q, EvalMethod method) {
    switch (method) {
        case EvalMethod::direct: return direct(q);
        case EvalMethod::closed: return closed(q);
        case EvalMethod::theorem: return theorem(q);
        case EvalMethod::cereceda: return cereceda(q);
        case EvalMethod::polynomial: return polynomial(q);
    }
    throw std::logic_error("unreachable: unknown EvalMethod");
}

Natural f_direct(const HypersumQuery& q) { return EvalSession().direct(q); }
Natural f_theorem(const HypersumQuery& q) { return EvalSession().theorem(q); }
Natural f_cereceda(const HypersumQuery& q) { return EvalSession().cereceda(q); }
Natural f_dispatch(const HypersumQuery& q, EvalMethod method) {
    return EvalSession().eval(q, method);
}

}  // namespace hypersum
