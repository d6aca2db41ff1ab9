#pragma once

#include <optional>
#include <string>

#include "qstring/ledger.hpp"
#include "qstring/rng.hpp"
#include "qstring/text.hpp"

namespace qs {

// One algorithm invocation with its outcome and cost snapshot.
struct RunRecord {
    std::string problem;
    std::string algo;
    size_t n = 0;
    std::optional<double> epsilon;
    double answer = 0.0;
    double oracle_answer = 0.0;
    bool success = false;
    QueryLedger ledger;
    uint64_t seed = 0;
    double wall_ms = 0.0;

    std::string to_json() const;
};

// Least-squares fit of log(cost) against log(x); the smallest grid point is
// excluded to damp polylog contamination.
struct SlopeFit {
    std::vector<std::pair<double, double>> points; // (log2 x, log2 cost)
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::string window; // which grid points entered the fit

    std::string to_json() const;
};

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& x_cost,
                   bool exclude_smallest = true);

// Aggregated benchmark point (one CSV row).
struct BenchRow {
    std::string problem;
    std::string algo;
    size_t n = 0;
    size_t d = 0;
    std::optional<double> epsilon;
    size_t trials = 0;
    double success_rate = 0.0;
    double mean_charged_cost = 0.0;
    double mean_sim_reads = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    SlopeFit fit;
};

// Known regimes:
//   problem=lcs:  algo small-d (fixed d=16, n sweep), large-d (fixed d=64,
//                 n sweep), large-d-dsweep (fixed n=4096, grid holds d),
//                 walk-approx (d=ceil(sqrt n), eps=0.5, n sweep)
//   problem=lps:  algo quantum (d = n/4, n sweep)
//   problem=ulam: algo quantum (planted distance ~ sqrt(n)/2, eps=0.3)
// grid entries are n values (d values for large-d-dsweep). Per-trial RNG
// streams derive from (seed, point, trial), so output is reproducible.
BenchResult run_bench(const std::string& problem, const std::string& algo,
                      const std::vector<size_t>& grid, size_t trials,
                      uint64_t seed);

// Fixed-precision CSV with the stable column set
// problem,algo,n,d,epsilon,trials,success_rate,mean_charged_cost,
// mean_sim_reads,slope_window. Byte-identical for identical inputs.
std::string bench_csv(const BenchResult& r);

// Planted-instance helpers (also used by the acceptance tests).
std::pair<Text, Text> make_planted_lcs(size_t n, size_t d, uint32_t sigma,
                                       RandomStream& rng);
Text make_planted_palindrome(size_t n, size_t d, uint32_t sigma,
                             RandomStream& rng);
std::pair<Text, Text> make_planted_perm_pair(size_t n, size_t d,
                                             RandomStream& rng);
// Permutation pair at Ulam distance about 2*moves.
std::pair<Text, Text> make_planted_ulam(size_t n, size_t moves,
                                        RandomStream& rng);

} // namespace qs
