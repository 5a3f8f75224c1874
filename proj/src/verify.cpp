#include "hypersum/verify.hpp"

#include <chrono>
#include <sstream>

namespace hypersum {

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::theorem1: return "theorem1";
        case IdentityId::cereceda_rational: return "cereceda_rational";
        case IdentityId::cereceda_integer: return "cereceda_integer";
        case IdentityId::difference: return "difference";
        case IdentityId::m0_recurrence: return "m0_recurrence";
        case IdentityId::m0_hockey_stick: return "m0_hockey_stick";
        case IdentityId::kernel: return "kernel";
        case IdentityId::cross_method: return "cross_method";
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
    for (IdentityId id : kAllIdentities) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

GridSpec::GridSpec(std::uint32_t n_max, std::uint32_t m_max, std::uint32_t k_max)
    : n_max_(n_max), m_max_(m_max), k_max_(k_max) {
    if (n_max_ < 1 || k_max_ < 1) {
        throw std::invalid_argument("GridSpec: n_max and k_max must be >= 1");
    }
}

std::uint64_t expected_case_count(IdentityId id, const GridSpec& g) {
    const std::uint64_t n = g.n_max();
    const std::uint64_t m = g.m_max();
    const std::uint64_t k = g.k_max();
    switch (id) {
        case IdentityId::theorem1:
            return n * m * k;  // n,m,k >= 1
        case IdentityId::cereceda_rational:
        case IdentityId::cereceda_integer:
        case IdentityId::difference:
            return n * (m + 1) * k;  // n,k >= 1, m >= 0
        case IdentityId::m0_recurrence:
        case IdentityId::m0_hockey_stick:
            return n * k;  // m fixed at 0
        case IdentityId::kernel:
            return k * n * (n + 1) / 2;  // 1 <= r <= n
        case IdentityId::cross_method:
            return 4 * (n + 1) * (m + 1) * k;  // four strategies vs the closed form
    }
    throw std::logic_error("unreachable: unknown IdentityId");
}

namespace {

using Cases = std::vector<CaseResult>;

CaseResult make_case(IdentityId id, std::uint32_t n, std::uint32_t m, std::uint32_t k,
                     std::string lhs, std::string rhs) {
    CaseResult c;
    c.identity = id;
    c.n = n;
    c.m = m;
    c.k = k;
    c.pass = lhs == rhs;
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

Natural closed_at(EvalSession& s, std::uint32_t n, std::uint32_t m, std::uint32_t k) {
    return s.closed(HypersumQuery(Natural(n), Natural(m), Natural(k)));
}

Cases check_theorem1(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t m = 1; m <= g.m_max(); ++m) {
            for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
                Natural lhs = closed_at(s, n, m, k);
                Integer rhs = Integer(Natural(n)) * Integer(closed_at(s, n, m - 1, k)) -
                              Integer(Natural(k)) * Integer(closed_at(s, n - 1, m - 1, k + 1));
                cases.push_back(make_case(IdentityId::theorem1, n, m, k,
                                          lhs.str(), rhs.str()));
            }
        }
    }
    return cases;
}

// Verbatim rational form, including the 1/(n+k) factors.
Cases check_cereceda_rational(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t m = 0; m <= g.m_max(); ++m) {
            for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
                Integer n_plus_k{Natural(static_cast<std::uint64_t>(n) + k)};
                Rational lhs{closed_at(s, n, m, k)};
                Rational rhs = Rational(Integer(Natural(k)), n_plus_k) *
                                   Rational(closed_at(s, n, m, k + 1)) +
                               Rational(Integer(1), n_plus_k) *
                                   Rational(closed_at(s, n, m + 1, k));
                CaseResult c = make_case(IdentityId::cereceda_rational, n, m, k,
                                         lhs.str(), rhs.str());
                c.pass = lhs == rhs;
                cases.push_back(std::move(c));
            }
        }
    }
    return cases;
}

Cases check_cereceda_integer(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t m = 0; m <= g.m_max(); ++m) {
            for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
                Natural lhs = Natural(static_cast<std::uint64_t>(n) + k) * closed_at(s, n, m, k);
                Natural rhs = Natural(k) * closed_at(s, n, m, k + 1) +
                              closed_at(s, n, m + 1, k);
                cases.push_back(make_case(IdentityId::cereceda_integer, n, m, k,
                                          lhs.str(), rhs.str()));
            }
        }
    }
    return cases;
}

Cases check_difference(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t m = 0; m <= g.m_max(); ++m) {
            for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
                Integer lhs = Integer(closed_at(s, n, m, k)) -
                              Integer(closed_at(s, n - 1, m, k));
                // k = 1 uses the internal depth-0 extension F(n,m,0) = n^m.
                Natural rhs = k >= 2 ? closed_at(s, n, m, k - 1)
                                     : ipow(Natural(n), Natural(m));
                cases.push_back(make_case(IdentityId::difference, n, m, k,
                                          lhs.str(), rhs.str()));
            }
        }
    }
    return cases;
}

Cases check_m0_recurrence(const GridSpec& g, EvalSession&) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
            Natural lhs = f_base_m0(Natural(n), Natural(k));
            Natural rhs = f_base_m0(Natural(n - 1), Natural(k)) +
                          (k >= 2 ? f_base_m0(Natural(n), Natural(k - 1)) : Natural(1));
            cases.push_back(make_case(IdentityId::m0_recurrence, n, 0, k,
                                      lhs.str(), rhs.str()));
        }
    }
    return cases;
}

Cases check_m0_hockey_stick(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
            Natural lhs = closed_at(s, n, 0, k);  // the summation side
            Natural rhs = f_base_m0(Natural(n), Natural(k));
            cases.push_back(make_case(IdentityId::m0_hockey_stick, n, 0, k,
                                      lhs.str(), rhs.str()));
        }
    }
    return cases;
}

Cases check_kernel(const GridSpec& g, EvalSession&) {
    Cases cases;
    for (std::uint32_t n = 1; n <= g.n_max(); ++n) {
        for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
            for (std::uint32_t r = 1; r <= n; ++r) {
                Natural a(static_cast<std::uint64_t>(n) - r + k - 1);
                Integer lhs = Integer(Natural(n)) * Integer(binom(a, Natural(k - 1))) -
                              Integer(Natural(k)) * Integer(binom(a, Natural(k)));
                Integer rhs = Integer(Natural(r)) * Integer(binom(a, Natural(k - 1)));
                CaseResult c = make_case(IdentityId::kernel, n, 0, k, lhs.str(), rhs.str());
                c.r = r;
                cases.push_back(std::move(c));
            }
        }
    }
    return cases;
}

Cases check_cross_method(const GridSpec& g, EvalSession& s) {
    Cases cases;
    for (std::uint32_t n = 0; n <= g.n_max(); ++n) {
        for (std::uint32_t m = 0; m <= g.m_max(); ++m) {
            for (std::uint32_t k = 1; k <= g.k_max(); ++k) {
                HypersumQuery q{Natural(n), Natural(m), Natural(k)};
                Natural reference = s.closed(q);
                for (EvalMethod method : kAllMethods) {
                    if (method == EvalMethod::closed) {
                        continue;
                    }
                    Natural value = s.eval(q, method);
                    CaseResult c = make_case(IdentityId::cross_method, n, m, k,
                                             reference.str(), value.str());
                    c.method = method;
                    cases.push_back(std::move(c));
                }
            }
        }
    }
    return cases;
}

Cases run_checker(IdentityId id, const GridSpec& g, EvalSession& s) {
    switch (id) {
        case IdentityId::theorem1: return check_theorem1(g, s);
        case IdentityId::cereceda_rational: return check_cereceda_rational(g, s);
        case IdentityId::cereceda_integer: return check_cereceda_integer(g, s);
        case IdentityId::difference: return check_difference(g, s);
        case IdentityId::m0_recurrence: return check_m0_recurrence(g, s);
        case IdentityId::m0_hockey_stick: return check_m0_hockey_stick(g, s);
        case IdentityId::kernel: return check_kernel(g, s);
        case IdentityId::cross_method: return check_cross_method(g, s);
    }
    throw std::logic_error("unreachable: unknown IdentityId");
}

void run_into(VerificationReport& report, IdentityId id, const GridSpec& g,
              EvalSession& session) {
    auto start = std::chrono::steady_clock::now();
    Cases cases = run_checker(id, g, session);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    IdentitySummary summary;
    summary.identity = id;
    summary.cases = cases.size();
    for (const CaseResult& c : cases) {
        summary.failures += c.pass ? 0 : 1;
    }
    summary.elapsed_seconds = elapsed.count();
    report.append(summary, std::move(cases));
}

}  // namespace

std::uint64_t VerificationReport::total_cases() const {
    std::uint64_t total = 0;
    for (const auto& s : summaries_) {
        total += s.cases;
    }
    return total;
}

std::uint64_t VerificationReport::total_failures() const {
    std::uint64_t total = 0;
    for (const auto& s : summaries_) {
        total += s.failures;
    }
    return total;
}

std::vector<const CaseResult*> VerificationReport::failures() const {
    std::vector<const CaseResult*> out;
    for (const CaseResult& c : cases_) {
        if (!c.pass) {
            out.push_back(&c);
        }
    }
    return out;
}

void VerificationReport::append(IdentitySummary summary, std::vector<CaseResult> cases) {
    summaries_.push_back(summary);
    cases_.insert(cases_.end(), std::make_move_iterator(cases.begin()),
                  std::make_move_iterator(cases.end()));
}

nlohmann::json VerificationReport::to_json(bool include_passing_cases) const {
    nlohmann::json doc;
    doc["grid"] = {{"n_max", grid_.n_max()},
                   {"m_max", grid_.m_max()},
                   {"k_max", grid_.k_max()}};
    doc["total_cases"] = total_cases();
    doc["total_failures"] = total_failures();
    doc["identities"] = nlohmann::json::array();
    for (const auto& s : summaries_) {
        doc["identities"].push_back({{"identity", to_string(s.identity)},
                                     {"cases", s.cases},
                                     {"failures", s.failures},
                                     {"elapsed_seconds", s.elapsed_seconds}});
    }
    doc["cases"] = nlohmann::json::array();
    for (const CaseResult& c : cases_) {
        if (!include_passing_cases && c.pass) {
            continue;
        }
        nlohmann::json jc = {{"identity", to_string(c.identity)}, {"n", c.n},
                             {"m", c.m},                          {"k", c.k},
                             {"lhs", c.lhs},                      {"rhs", c.rhs},
                             {"pass", c.pass}};
        if (c.r) {
            jc["r"] = *c.r;
        }
        if (c.method) {
            jc["method"] = to_string(*c.method);
        }
        doc["cases"].push_back(std::move(jc));
    }
    return doc;
}

std::string VerificationReport::summary_text() const {
    std::ostringstream out;
    for (const auto& s : summaries_) {
        out << to_string(s.identity) << ": " << (s.cases - s.failures) << "/" << s.cases
            << " passed";
        if (s.failures > 0) {
            out << " (" << s.failures << " FAILED)";
        }
        out << " [" << s.elapsed_seconds << "s]\n";
    }
    out << "total: " << (total_cases() - total_failures()) << "/" << total_cases()
        << " passed\n";
    return out.str();
}

VerificationReport run_identity(IdentityId id, const GridSpec& g) {
    VerificationReport report(g);
    EvalSession session;
    run_into(report, id, g, session);
    return report;
}

VerificationReport run_all(const GridSpec& g) {
    VerificationReport report(g);
    EvalSession session;
    for (IdentityId id : kAllIdentities) {
        run_into(report, id, g, session);
    }
    return report;
}

}  // namespace hypersum
