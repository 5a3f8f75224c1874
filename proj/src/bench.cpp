#include "hypersum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace hypersum {

namespace {

class Fnv1a64 {
public:
    void feed(std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash_ ^= c;
            hash_ *= 0x100000001b3ULL;
        }
    }
    std::string hex() const {
        std::ostringstream out;
        out << std::hex << std::setw(16) << std::setfill('0') << hash_;
        return out.str();
    }

private:
    std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::uint64_t bench_grid_points(const GridSpec& g) {
    return static_cast<std::uint64_t>(g.n_max() + 1) * (g.m_max() + 1) * g.k_max();
}

BenchReport run_bench(const BenchSpec& spec) {
    if (spec.repetitions < 1) {
        throw std::invalid_argument("run_bench: repetitions must be >= 1");
    }
    if (spec.methods.empty()) {
        throw std::invalid_argument("run_bench: no methods selected");
    }

    BenchReport report{spec.grid, spec.repetitions, bench_grid_points(spec.grid), {}, false};

    for (EvalMethod method : kAllMethods) {  // enum order, independent of selection order
        if (std::find(spec.methods.begin(), spec.methods.end(), method) ==
            spec.methods.end()) {
            continue;
        }
        BenchResult row;
        row.method = method;
        row.evaluations = report.evaluations;

        for (std::uint32_t rep = 0; rep < spec.repetitions; ++rep) {
            EvalSession session;  // cold per repetition
            Fnv1a64 hash;
            auto start = std::chrono::steady_clock::now();
            for (std::uint32_t n = 0; n <= spec.grid.n_max(); ++n) {
                for (std::uint32_t m = 0; m <= spec.grid.m_max(); ++m) {
                    for (std::uint32_t k = 1; k <= spec.grid.k_max(); ++k) {
                        Natural value = session.eval(
                            HypersumQuery(Natural(n), Natural(m), Natural(k)), method);
                        hash.feed(value.str());
                        hash.feed("\n");
                    }
                }
            }
            std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            row.rep_seconds.push_back(elapsed.count());
            std::string digest = hash.hex();
            if (rep == 0) {
                row.values_hash = digest;
            } else if (row.values_hash != digest) {
                throw std::logic_error("nondeterministic values across repetitions for " +
                                       std::string(to_string(method)));
            }
        }
        row.best_seconds = *std::min_element(row.rep_seconds.begin(), row.rep_seconds.end());
        report.results.push_back(std::move(row));
    }

    report.hashes_agree =
        std::all_of(report.results.begin(), report.results.end(),
                    [&](const BenchResult& r) {
                        return r.values_hash == report.results.front().values_hash;
                    });
    return report;
}

}  // namespace hypersum
