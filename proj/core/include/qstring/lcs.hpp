#pragma once

#include <optional>

#include "qstring/qsim.hpp"

namespace qs {

// Sampled pattern/window pair: P = A[p_start, p_start+p_len-1] with
// p_len = 2*floor(d/3), S = B[s_start, s_start+d-1].
struct GoodPair {
    size_t p_start = 0, p_len = 0;
    size_t s_start = 0, s_len = 0;
};

// Exhaustive goodness test (test support, O(n^2 d)): the pair is good if some
// solution (i, j) satisfies i <= p_start < i + floor(d/3) and the copy of P
// shifted onto B lies inside S.
bool is_good_pair(const Text& a, const Text& b, size_t d, const GoodPair& g);

// Lemma-style decision procedures. All witnesses are verified by
// construction; none ever returns a false witness.
std::optional<MatchWitness> decide_small_d(const Text& a, const Text& b, size_t d,
                                           QueryLedger& led, RandomStream& rng);

std::optional<MatchWitness> decide_large_d(const Text& a, const Text& b, size_t d,
                                           QueryLedger& led, RandomStream& rng);

// Reconstruction from a sampled pair: occurrence search, then either direct
// two-sided extension (few occurrences) or the periodic-run three-case
// analysis. Returns a witness of length >= d or nothing.
std::optional<MatchWitness> reconstruct_from_pair(const Text& a, const Text& b,
                                                  size_t p_start, size_t s_start,
                                                  size_t d, QueryLedger& led,
                                                  RandomStream& rng);

// Block sampling sets for the approximate small-d procedure. Positions are
// 0-based window starts for windows of length ceil((1-eps)*d).
struct BlockSets {
    size_t k = 1;
    std::vector<size_t> set_a, set_b;
};
BlockSets build_block_sets(size_t n, size_t d, double eps);

std::optional<MatchWitness> approx_small_d(const Text& a, const Text& b, size_t d,
                                           double eps, QueryLedger& led,
                                           RandomStream& rng);

// Binary-search drivers.
MatchWitness lcs_exact(const Text& a, const Text& b, QueryLedger& led,
                       RandomStream& rng);
MatchWitness lcs_approx(const Text& a, const Text& b, double eps,
                        QueryLedger& led, RandomStream& rng);

// --- Non-repetitive inputs (quantum-walk branch) ---------------------------

struct WalkParams {
    size_t r = 1;          // subset size
    double delta = 1.0;    // marked-fraction floor handed to the walk
    uint64_t alpha = 1;    // 54 ln n, rounded up
    uint64_t collision_cap = 1; // condition (ii) threshold
    size_t prefix_len = 1; // d (exact) or ceil((1-eps)*d) (approx)
};
// eps empty = exact mode.
WalkParams make_walk_params(size_t n, size_t d, std::optional<double> eps);

std::optional<MatchWitness> nonrep_walk_decide(const Text& a, const Text& b,
                                               size_t d, std::optional<double> eps,
                                               QueryLedger& led, RandomStream& rng);

MatchWitness nonrep_lcs_exact(const Text& a, const Text& b, QueryLedger& led,
                              RandomStream& rng);
MatchWitness nonrep_lcs_approx(const Text& a, const Text& b, double eps,
                               QueryLedger& led, RandomStream& rng);

} // namespace qs
