#pragma once

#include "hypersum/exact_arith.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace hypersum {

class RationalPolynomial;

/// F(n,m,k) is the k-fold nested sum of m-th powers:
///   F(n,m,1) = sum_{i=1..n} i^m,   F(n,m,k) = sum_{t=1..n} F(t,m,k-1)
/// with the empty-sum convention F(0,m,k) = 0. Five independent strategies
/// compute it; on any valid query they agree exactly.
enum class EvalMethod { direct, closed, theorem, cereceda, polynomial };

inline constexpr std::array<EvalMethod, 5> kAllMethods = {
    EvalMethod::direct, EvalMethod::closed, EvalMethod::theorem,
    EvalMethod::cereceda, EvalMethod::polynomial};

std::string_view to_string(EvalMethod m);
std::optional<EvalMethod> parse_method(std::string_view name);

/// Validated (n, m, k) triple: n >= 0, m >= 0, k >= 1.
class HypersumQuery {
public:
    /// Throws std::invalid_argument when k = 0.
    HypersumQuery(Natural n, Natural m, Natural k);

    const Natural& n() const { return n_; }
    const Natural& m() const { return m_; }
    const Natural& k() const { return k_; }

    friend bool operator==(const HypersumQuery&, const HypersumQuery&) = default;

private:
    Natural n_, m_, k_;
};

/// A recurrence produced a negative intermediate where none is possible.
/// Signals an implementation bug, never a property of the input.
class InternalNegativeError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// F(n,0,k) = C(n+k-1, k), the m=0 boundary value. Requires k >= 1.
Natural f_base_m0(const Natural& n, const Natural& k);

/// Per-term kernel of the power-reduction recurrence: with a = n-r+k-1,
/// checks n*C(a,k-1) - k*C(a,k) = r*C(a,k-1) exactly over Integers.
/// Requires 1 <= r <= n and k >= 1.
bool kernel_check(const Natural& n, const Natural& k, const Natural& r);

/// One evaluation session: owns memo caches shared across queries. Caches are
/// transparent (results are bit-identical with and without them) and private
/// to the session; a session is single-threaded, but distinct sessions may
/// run concurrently, and the one-shot f_* wrappers below are pure functions.
class EvalSession {
public:
    EvalSession();
    ~EvalSession();
    EvalSession(EvalSession&&) noexcept;
    EvalSession& operator=(EvalSession&&) noexcept;

    /// Recursive definition, evaluated bottom-up over the (n,k) table for the
    /// query's m.
    Natural direct(const HypersumQuery& q);

    /// Single summation over r of C(n-r+k-1, k-1) * r^m.
    Natural closed(const HypersumQuery& q);

    /// Power-reduction recurrence F(n,m,k) = n*F(n,m-1,k) - k*F(n-1,m-1,k+1),
    /// recursing on m down to the m=0 boundary. Memoized on (n,m,k).
    Natural theorem(const HypersumQuery& q);

    /// Depth-raising recurrence in cleared-denominator form,
    /// F(n,m,k) = (n+k)*F(n,m-1,k) - k*F(n,m-1,k+1), recursing on m down to
    /// the m=0 boundary. Division-free; memoized on (n,m,k).
    Natural cereceda(const HypersumQuery& q);

    /// Evaluates the interpolated closed-form polynomial in n. Polynomials
    /// are cached per (m,k); n itself may be arbitrarily large.
    Natural polynomial(const HypersumQuery& q);

    Natural eval(const HypersumQuery& q, EvalMethod method);

private:
    Natural theorem_rec(std::uint32_t n, std::uint32_t m, std::uint32_t k);
    Natural cereceda_rec(std::uint32_t n, std::uint32_t m, std::uint32_t k);

    // m -> rows[j][t] = F(t, m, j+1); rows grow on demand, width first.
    std::map<std::uint32_t, std::vector<std::vector<Natural>>> direct_tables_;
    std::map<std::array<std::uint32_t, 3>, Natural> theorem_memo_;
    std::map<std::array<std::uint32_t, 3>, Natural> cereceda_memo_;
    std::map<std::pair<std::uint32_t, std::uint32_t>,
             std::unique_ptr<const RationalPolynomial>>
        poly_cache_;
};

// One-shot evaluation with a fresh session per call.
Natural f_direct(const HypersumQuery& q);
Natural f_closed(const HypersumQuery& q);
Natural f_theorem(const HypersumQuery& q);
Natural f_cereceda(const HypersumQuery& q);
Natural f_dispatch(const HypersumQuery& q, EvalMethod method);

}  // namespace hypersum
