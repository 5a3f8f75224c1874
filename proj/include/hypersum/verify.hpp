#pragma once

#include "hypersum/eval.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypersum {

/// One tag per verifiable identity.
///   theorem1          F(n,m,k) = n*F(n,m-1,k) - k*F(n-1,m-1,k+1)
///   cereceda_rational F(n,m,k) = k/(n+k)*F(n,m,k+1) + 1/(n+k)*F(n,m+1,k),
///                     checked verbatim in exact rational arithmetic
///   cereceda_integer  the cleared form (n+k)*F(n,m,k) = k*F(n,m,k+1) + F(n,m+1,k)
///   difference        F(n,m,k) - F(n-1,m,k) = F(n,m,k-1); at k=1 the right
///                     side is the internal extension F(n,m,0) = n^m
///   m0_recurrence     F(n,0,k) = F(n-1,0,k) + F(n,0,k-1) over the boundary values
///   m0_hockey_stick   sum_{r<=n} C(n-r+k-1,k-1) = C(n+k-1,k)
///   kernel            n*C(a,k-1) - k*C(a,k) = r*C(a,k-1), a = n-r+k-1
///   cross_method      all evaluation strategies agree with the closed form
enum class IdentityId {
    theorem1,
    cereceda_rational,
    cereceda_integer,
    difference,
    m0_recurrence,
    m0_hockey_stick,
    kernel,
    cross_method,
};

inline constexpr std::array<IdentityId, 8> kAllIdentities = {
    IdentityId::theorem1,       IdentityId::cereceda_rational,
    IdentityId::cereceda_integer, IdentityId::difference,
    IdentityId::m0_recurrence,  IdentityId::m0_hockey_stick,
    IdentityId::kernel,         IdentityId::cross_method,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

/// Inclusive grid bounds. Identities apply their own domain restrictions
/// (see expected_case_count); n ranges over 1..n_max (0..n_max for
/// cross_method), m over 0..m_max or 1..m_max, k over 1..k_max.
class GridSpec {
public:
    /// Throws std::invalid_argument unless n_max >= 1 and k_max >= 1.
    GridSpec(std::uint32_t n_max, std::uint32_t m_max, std::uint32_t k_max);

    std::uint32_t n_max() const { return n_max_; }
    std::uint32_t m_max() const { return m_max_; }
    std::uint32_t k_max() const { return k_max_; }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::uint32_t n_max_, m_max_, k_max_;
};

/// Number of cases run_identity(id, g) produces; a pure function of the grid.
std::uint64_t expected_case_count(IdentityId id, const GridSpec& g);

struct CaseResult {
    IdentityId identity;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    std::optional<std::uint32_t> r;         // kernel cases only
    std::optional<EvalMethod> method;       // cross_method cases only
    std::string lhs;                        // exact value, decimal or "a/b"
    std::string rhs;
    bool pass = true;
};

struct IdentitySummary {
    IdentityId identity;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    double elapsed_seconds = 0.0;
};

class VerificationReport {
public:
    explicit VerificationReport(GridSpec grid) : grid_(grid) {}

    const GridSpec& grid() const { return grid_; }
    const std::vector<IdentitySummary>& summaries() const { return summaries_; }
    const std::vector<CaseResult>& cases() const { return cases_; }

    std::uint64_t total_cases() const;
    std::uint64_t total_failures() const;
    bool all_passed() const { return total_failures() == 0; }
    std::vector<const CaseResult*> failures() const;

    /// Single JSON document; see docs/output-schemas.md. When
    /// include_passing_cases is false only failing cases are listed (the
    /// summaries always carry full counts).
    nlohmann::json to_json(bool include_passing_cases = true) const;
    std::string summary_text() const;

    void append(IdentitySummary summary, std::vector<CaseResult> cases);

private:
    GridSpec grid_;
    std::vector<IdentitySummary> summaries_;
    std::vector<CaseResult> cases_;
};

/// Evaluates one identity at every applicable grid point, in lexicographic
/// order. Failures never abort the sweep: every counterexample is recorded.
VerificationReport run_identity(IdentityId id, const GridSpec& g);

/// All identities in declaration order, one shared evaluation session.
VerificationReport run_all(const GridSpec& g);

}  // namespace hypersum
