#include "hypersum/bench.hpp"
#include "hypersum/eval.hpp"
#include "hypersum/oeis.hpp"
#include "hypersum/polynomial.hpp"
#include "hypersum/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace hypersum;

// Exit codes: 0 success/consensus, 1 verification or comparison failure,
// 2 usage error, 3 external-data error.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kData = 3;

enum class Format { text, json, csv };

struct CommonOpts {
    std::string format = "text";
    bool quiet = false;

    Format fmt() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::text;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_flag("--quiet", opts.quiet, "Minimal output");
}

std::string seconds_str(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << s;
    return out.str();
}

// ---------------------------------------------------------------- eval

struct EvalOpts {
    CommonOpts common;
    std::string n, m, k;
    std::string method = "closed";
};

int run_eval(const EvalOpts& o) {
    std::vector<EvalMethod> methods;
    bool all = o.method == "all";
    if (all) {
        methods.assign(kAllMethods.begin(), kAllMethods.end());
    } else if (auto m = parse_method(o.method)) {
        methods.push_back(*m);
    } else {
        std::cerr << "error: unknown method '" << o.method << "'\n";
        return kUsage;
    }

    HypersumQuery query(Natural(o.n), Natural(o.m), Natural(o.k));
    EvalSession session;
    std::vector<std::pair<EvalMethod, Natural>> results;
    for (EvalMethod m : methods) {
        results.emplace_back(m, session.eval(query, m));
    }
    bool consensus = true;
    for (const auto& [m, v] : results) {
        consensus = consensus && v == results.front().second;
    }

    switch (o.common.fmt()) {
        case Format::text:
            if (!all) {
                std::cout << results.front().second.str() << "\n";
            } else if (o.common.quiet) {
                std::cout << "consensus " << (consensus ? "true" : "false") << "\n";
            } else {
                for (const auto& [m, v] : results) {
                    std::cout << to_string(m) << " " << v.str() << "\n";
                }
                std::cout << "consensus " << (consensus ? "true" : "false") << "\n";
            }
            break;
        case Format::json: {
            json doc;
            doc["query"] = {{"n", o.n}, {"m", o.m}, {"k", o.k}};
            doc["results"] = json::array();
            for (const auto& [m, v] : results) {
                doc["results"].push_back({{"method", to_string(m)}, {"value", v.str()}});
            }
            doc["consensus"] = consensus;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "method,value\n";
            for (const auto& [m, v] : results) {
                std::cout << to_string(m) << "," << v.str() << "\n";
            }
            std::cout << "consensus," << (consensus ? "true" : "false") << "\n";
            break;
    }
    return consensus ? kOk : kFailure;
}

// ---------------------------------------------------------------- poly

struct PolyOpts {
    CommonOpts common;
    std::string m, k;
    bool latex = false;
};

int run_poly(const PolyOpts& o) {
    RationalPolynomial poly = closed_form_poly(Natural(o.m), Natural(o.k));

    switch (o.common.fmt()) {
        case Format::text:
            std::cout << poly_render(poly, o.latex ? PolyFormat::latex : PolyFormat::plain)
                      << "\n";
            if (!o.common.quiet) {
                std::cout << "degree " << poly.degree() << "\n";
                std::cout << "leading " << poly.leading_coefficient().str() << "\n";
            }
            break;
        case Format::json: {
            json doc;
            doc["m"] = o.m;
            doc["k"] = o.k;
            doc["degree"] = poly.degree();
            doc["leading"] = poly.leading_coefficient().str();
            doc["coefficients"] = json::array();
            for (std::size_t i = 0; i <= poly.degree(); ++i) {
                doc["coefficients"].push_back(poly.coefficient(i).str());
            }
            doc["plain"] = poly_render(poly, PolyFormat::plain);
            doc["latex"] = poly_render(poly, PolyFormat::latex);
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << poly_render(poly, PolyFormat::csv);
            break;
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    CommonOpts common;
    std::uint32_t n_max = 30;
    std::uint32_t m_max = 8;
    std::uint32_t k_max = 6;
    std::vector<std::string> identities;
};

void print_case_csv(std::ostream& out, const CaseResult& c) {
    out << to_string(c.identity) << "," << c.n << "," << c.m << "," << c.k << ",";
    if (c.r) {
        out << *c.r;
    }
    out << ",";
    if (c.method) {
        out << to_string(*c.method);
    }
    out << "," << c.lhs << "," << c.rhs << "," << (c.pass ? "true" : "false") << "\n";
}

int run_verify(const VerifyOpts& o) {
    std::vector<IdentityId> requested;
    if (o.identities.empty()) {
        requested.assign(kAllIdentities.begin(), kAllIdentities.end());
    } else {
        for (const std::string& name : o.identities) {
            auto id = parse_identity(name);
            if (!id) {
                std::cerr << "error: unknown identity '" << name << "'\n";
                return kUsage;
            }
            requested.push_back(*id);
        }
    }
    // Report order is the declaration order, whatever the flag order was.
    std::vector<IdentityId> selected;
    for (IdentityId id : kAllIdentities) {
        if (std::find(requested.begin(), requested.end(), id) != requested.end()) {
            selected.push_back(id);
        }
    }

    GridSpec grid(o.n_max, o.m_max, o.k_max);
    VerificationReport report(grid);
    if (selected.size() == kAllIdentities.size()) {
        report = run_all(grid);
    } else {
        for (IdentityId id : selected) {
            VerificationReport one = run_identity(id, grid);
            report.append(one.summaries().front(), {one.cases().begin(), one.cases().end()});
        }
    }

    switch (o.common.fmt()) {
        case Format::text:
            if (!o.common.quiet) {
                for (const CaseResult* c : report.failures()) {
                    std::cout << "FAIL " << to_string(c->identity) << " n=" << c->n
                              << " m=" << c->m << " k=" << c->k;
                    if (c->r) {
                        std::cout << " r=" << *c->r;
                    }
                    if (c->method) {
                        std::cout << " method=" << to_string(*c->method);
                    }
                    std::cout << " lhs=" << c->lhs << " rhs=" << c->rhs << "\n";
                }
                std::cout << report.summary_text();
            } else {
                std::cout << "total: " << (report.total_cases() - report.total_failures())
                          << "/" << report.total_cases() << " passed\n";
            }
            break;
        case Format::json:
            std::cout << report.to_json(!o.common.quiet).dump(2) << "\n";
            break;
        case Format::csv:
            std::cout << "identity,n,m,k,r,method,lhs,rhs,pass\n";
            for (const CaseResult& c : report.cases()) {
                if (o.common.quiet && c.pass) {
                    continue;
                }
                print_case_csv(std::cout, c);
            }
            break;
    }
    return report.all_passed() ? kOk : kFailure;
}

// ---------------------------------------------------------------- oeis-check

struct OeisOpts {
    CommonOpts common;
    std::vector<std::string> sequences;
    std::string count = "20";
    std::string source = "fixture";
    std::string fixture_dir;
    std::string base_url;
};

int run_oeis_check(const OeisOpts& o) {
    std::vector<oeis::SequenceBinding> selected;
    if (o.sequences.empty()) {
        selected = oeis::builtin_bindings();
    } else {
        for (const std::string& id : o.sequences) {
            bool found = false;
            for (const oeis::SequenceBinding& b : oeis::builtin_bindings()) {
                if (b.sequence_id == id) {
                    selected.push_back(b);
                    found = true;
                }
            }
            if (!found) {
                std::cerr << "error: no binding for sequence '" << id << "'\n";
                return kUsage;
            }
        }
    }

    oeis::FetchSource source =
        o.source == "remote" ? oeis::FetchSource::remote : oeis::FetchSource::fixture_dir;
    oeis::FetchOptions fetch_opts;
    if (!o.fixture_dir.empty()) {
        fetch_opts.fixture_dir = o.fixture_dir;
    }
    if (!o.base_url.empty()) {
        fetch_opts.base_url = o.base_url;
    }

    Natural count(o.count);
    std::vector<oeis::ComparisonReport> reports;
    for (const oeis::SequenceBinding& b : selected) {
        oeis::BFile file = oeis::fetch_bfile(b.sequence_id, source, fetch_opts);
        reports.push_back(oeis::compare_sequence(b, file, count));
    }

    std::uint64_t mismatches = 0;
    for (const auto& r : reports) {
        mismatches += r.mismatches;
    }

    switch (o.common.fmt()) {
        case Format::text:
            for (const auto& r : reports) {
                if (!o.common.quiet) {
                    for (const auto& t : r.terms) {
                        if (!t.match) {
                            std::cout << "MISMATCH " << r.binding.sequence_id << " n=" << t.n
                                      << " index=" << t.oeis_index.str()
                                      << " oeis=" << t.oeis_value
                                      << " computed=" << t.computed << "\n";
                        }
                    }
                }
                std::cout << r.binding.sequence_id << " F(n,m=" << r.binding.m.str()
                          << ",k=" << r.binding.k.str() << ") offset=" << r.binding.offset.str()
                          << ": " << (r.terms.size() - r.mismatches) << "/" << r.terms.size()
                          << " match\n";
            }
            break;
        case Format::json: {
            json doc;
            doc["count"] = o.count;
            doc["source"] = o.source;
            doc["sequences"] = json::array();
            for (const auto& r : reports) {
                json seq = {{"sequence", r.binding.sequence_id},
                            {"m", r.binding.m.str()},
                            {"k", r.binding.k.str()},
                            {"offset", r.binding.offset.str()},
                            {"mismatches", r.mismatches},
                            {"pass", r.pass()}};
                seq["terms"] = json::array();
                for (const auto& t : r.terms) {
                    if (o.common.quiet && t.match) {
                        continue;
                    }
                    seq["terms"].push_back({{"n", t.n},
                                            {"oeis_index", t.oeis_index.str()},
                                            {"oeis_value", t.oeis_value},
                                            {"computed", t.computed},
                                            {"match", t.match}});
                }
                doc["sequences"].push_back(std::move(seq));
            }
            doc["pass"] = mismatches == 0;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "sequence,n,oeis_index,oeis_value,computed,match\n";
            for (const auto& r : reports) {
                for (const auto& t : r.terms) {
                    if (o.common.quiet && t.match) {
                        continue;
                    }
                    std::cout << r.binding.sequence_id << "," << t.n << ","
                              << t.oeis_index.str() << "," << t.oeis_value << ","
                              << t.computed << "," << (t.match ? "true" : "false") << "\n";
                }
            }
            break;
    }
    return mismatches == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------- bench

struct BenchOpts {
    CommonOpts common;
    std::uint32_t n_max = 30;
    std::uint32_t m_max = 8;
    std::uint32_t k_max = 6;
    std::vector<std::string> methods;
    std::uint32_t repetitions = 1;
};

int run_bench_cmd(const BenchOpts& o) {
    BenchSpec spec{GridSpec(o.n_max, o.m_max, o.k_max), {}, o.repetitions};
    if (o.methods.empty()) {
        spec.methods.assign(kAllMethods.begin(), kAllMethods.end());
    } else {
        for (const std::string& name : o.methods) {
            auto m = parse_method(name);
            if (!m) {
                std::cerr << "error: unknown method '" << name << "'\n";
                return kUsage;
            }
            spec.methods.push_back(*m);
        }
    }

    BenchReport report = run_bench(spec);

    // Correctness before speed: timings are withheld unless every method
    // produced the same value stream.
    switch (o.common.fmt()) {
        case Format::text:
            for (const BenchResult& r : report.results) {
                std::cout << to_string(r.method) << " evaluations=" << r.evaluations;
                if (report.hashes_agree) {
                    std::cout << " best_seconds=" << seconds_str(r.best_seconds)
                              << " repetitions=" << report.repetitions;
                }
                std::cout << " hash=" << r.values_hash << "\n";
            }
            std::cout << (report.hashes_agree ? "hashes agree"
                                              : "HASH MISMATCH: timings withheld")
                      << "\n";
            break;
        case Format::json: {
            json doc;
            doc["grid"] = {{"n_max", report.grid.n_max()},
                           {"m_max", report.grid.m_max()},
                           {"k_max", report.grid.k_max()}};
            doc["repetitions"] = report.repetitions;
            doc["evaluations"] = report.evaluations;
            doc["hashes_agree"] = report.hashes_agree;
            doc["results"] = json::array();
            for (const BenchResult& r : report.results) {
                json row = {{"method", to_string(r.method)},
                            {"evaluations", r.evaluations},
                            {"values_hash", r.values_hash}};
                if (report.hashes_agree) {
                    row["best_seconds"] = r.best_seconds;
                    row["rep_seconds"] = r.rep_seconds;
                }
                doc["results"].push_back(std::move(row));
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv:
            if (report.hashes_agree) {
                std::cout << "method,evaluations,best_seconds,values_hash\n";
                for (const BenchResult& r : report.results) {
                    std::cout << to_string(r.method) << "," << r.evaluations << ","
                              << seconds_str(r.best_seconds) << "," << r.values_hash << "\n";
                }
            } else {
                std::cout << "method,evaluations,values_hash\n";
                for (const BenchResult& r : report.results) {
                    std::cout << to_string(r.method) << "," << r.evaluations << ","
                              << r.values_hash << "\n";
                }
            }
            break;
    }
    return report.hashes_agree ? kOk : kFailure;
}

template <typename Fn>
int guarded(Fn&& fn, bool data_errors_are_exit_3 = false) {
    try {
        return fn();
    } catch (const oeis::NotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data_errors_are_exit_3 ? kData : kFailure;
    } catch (const oeis::NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data_errors_are_exit_3 ? kData : kFailure;
    } catch (const oeis::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data_errors_are_exit_3 ? kData : kFailure;
    } catch (const oeis::InsufficientTermsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return data_errors_are_exit_3 ? kData : kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and cross-verification of k-fold nested power sums "
                 "F(n,m,k)"};
    app.require_subcommand(1);

    EvalOpts eval_opts;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate F(n,m,k) by one strategy or all of them");
    eval_cmd->add_option("--n", eval_opts.n, "Upper summation limit (>= 0)")->required();
    eval_cmd->add_option("--m", eval_opts.m, "Power (>= 0)")->required();
    eval_cmd->add_option("--k", eval_opts.k, "Nesting depth (>= 1)")->required();
    eval_cmd->add_option("--method", eval_opts.method, "Evaluation strategy")
        ->check(CLI::IsMember(
            {"direct", "closed", "theorem", "cereceda", "polynomial", "all"}))
        ->capture_default_str();
    add_common(eval_cmd, eval_opts.common);

    PolyOpts poly_opts;
    CLI::App* poly_cmd =
        app.add_subcommand("poly", "Closed-form polynomial of F(.,m,k) in n");
    poly_cmd->add_option("--m", poly_opts.m, "Power (>= 0)")->required();
    poly_cmd->add_option("--k", poly_opts.k, "Nesting depth (>= 1)")->required();
    poly_cmd->add_flag("--latex", poly_opts.latex, "Render LaTeX instead of plain text");
    add_common(poly_cmd, poly_opts.common);

    VerifyOpts verify_opts;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Check identities exactly over a parameter grid");
    verify_cmd->add_option("--n-max", verify_opts.n_max, "Grid bound for n (>= 1)")
        ->capture_default_str();
    verify_cmd->add_option("--m-max", verify_opts.m_max, "Grid bound for m (>= 0)")
        ->capture_default_str();
    verify_cmd->add_option("--k-max", verify_opts.k_max, "Grid bound for k (>= 1)")
        ->capture_default_str();
    verify_cmd
        ->add_option("--identity", verify_opts.identities,
                     "Identity filter (repeatable; default: all)")
        ->delimiter(',');
    add_common(verify_cmd, verify_opts.common);

    OeisOpts oeis_opts;
    CLI::App* oeis_cmd = app.add_subcommand(
        "oeis-check", "Compare computed sequences against OEIS b-files");
    oeis_cmd
        ->add_option("--sequence", oeis_opts.sequences,
                     "Sequence filter (repeatable; default: all bindings)")
        ->delimiter(',');
    oeis_cmd->add_option("--count", oeis_opts.count, "Terms to compare, from n=1")
        ->capture_default_str();
    oeis_cmd->add_option("--source", oeis_opts.source, "Where to load b-files from")
        ->check(CLI::IsMember({"fixture", "remote"}))
        ->capture_default_str();
    oeis_cmd->add_option("--fixture-dir", oeis_opts.fixture_dir,
                         "Fixture directory (default: $OEIS_FIXTURE_DIR or data/oeis)");
    oeis_cmd->add_option("--base-url", oeis_opts.base_url,
                         "Remote base URL (default: $OEIS_BASE_URL or https://oeis.org)");
    add_common(oeis_cmd, oeis_opts.common);

    BenchOpts bench_opts;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Time each strategy over a grid; hashes gate the timings");
    bench_cmd->add_option("--n-max", bench_opts.n_max, "Grid bound for n (>= 1)")
        ->capture_default_str();
    bench_cmd->add_option("--m-max", bench_opts.m_max, "Grid bound for m (>= 0)")
        ->capture_default_str();
    bench_cmd->add_option("--k-max", bench_opts.k_max, "Grid bound for k (>= 1)")
        ->capture_default_str();
    bench_cmd
        ->add_option("--methods", bench_opts.methods,
                     "Strategies to time (comma separated; default: all)")
        ->delimiter(',');
    bench_cmd
        ->add_option("--repetitions", bench_opts.repetitions, "Sweeps per method (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(bench_cmd, bench_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (eval_cmd->parsed()) {
        return guarded([&] { return run_eval(eval_opts); });
    }
    if (poly_cmd->parsed()) {
        return guarded([&] { return run_poly(poly_opts); });
    }
    if (verify_cmd->parsed()) {
        return guarded([&] { return run_verify(verify_opts); });
    }
    if (oeis_cmd->parsed()) {
        return guarded([&] { return run_oeis_check(oeis_opts); }, true);
    }
    if (bench_cmd->parsed()) {
        return guarded([&] { return run_bench_cmd(bench_opts); });
    }
    return kUsage;
}
