#pragma once

#include "hypersum/exact_arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypersum {

enum class PolyFormat { plain, latex, csv };

std::string_view to_string(PolyFormat f);
std::optional<PolyFormat> parse_poly_format(std::string_view name);

/// Dense polynomial over exact rationals; coeffs[i] multiplies n^i.
/// Trailing zero coefficients are trimmed on construction, so degree() is the
/// highest index with a nonzero coefficient (0 for the zero polynomial).
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t power) const;
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Rational leading_coefficient() const;
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// A post-construction assertion on the interpolated polynomial failed
/// (degree not m+k, nonzero constant term, or disagreement with the closed
/// form at a control point).
class PolynomialConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The unique polynomial of degree <= m+k through F(n,m,k) at n = 0..m+k,
/// built by Lagrange interpolation in exact rational arithmetic. Before
/// returning, the construction asserts degree m+k, zero constant term, and
/// agreement with the closed form at m+k+1 further points. Requires k >= 1.
RationalPolynomial closed_form_poly(const Natural& m, const Natural& k);

/// Exact Horner evaluation at a natural point.
Rational poly_eval(const RationalPolynomial& p, const Natural& n);

/// Deterministic ascending-power rendering; rationals appear as "a/b" in
/// lowest terms. csv emits a dense power,coefficient table including zeros.
std::string poly_render(const RationalPolynomial& p, PolyFormat format);

}  // namespace hypersum
