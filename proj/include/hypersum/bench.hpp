#pragma once

#include "hypersum/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hypersum {

/// Timed sweep of each selected method over the grid n=0..n_max, m=0..m_max,
/// k=1..k_max in lexicographic (n,m,k) order. Each repetition starts a fresh
/// evaluation session; reported time is the best repetition. A 64-bit FNV-1a
/// hash over the decimal value stream is the correctness gate: timings are
/// only meaningful when every method hashed identically.
struct BenchSpec {
    GridSpec grid;
    std::vector<EvalMethod> methods;  // deduplicated, reported in enum order
    std::uint32_t repetitions = 1;
};

struct BenchResult {
    EvalMethod method;
    std::uint64_t evaluations = 0;
    std::string values_hash;            // 16 hex digits
    double best_seconds = 0.0;
    std::vector<double> rep_seconds;
};

struct BenchReport {
    GridSpec grid;
    std::uint32_t repetitions = 1;
    std::uint64_t evaluations = 0;  // grid points per method
    std::vector<BenchResult> results;
    bool hashes_agree = false;
};

std::uint64_t bench_grid_points(const GridSpec& g);

/// Throws std::invalid_argument for zero repetitions or an empty method list.
BenchReport run_bench(const BenchSpec& spec);

}  // namespace hypersum
