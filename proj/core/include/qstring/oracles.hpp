#pragma once

#include "qstring/text.hpp"

namespace qs {

// Exact classical ground truth. These never touch a ledger; they exist to
// check answers and to serve as simulation side-channels.

// Longest common substring via suffix automaton of `a`, O(n).
MatchWitness lcs_oracle(const Text& a, const Text& b);

// Longest palindromic substring via Manacher, O(n).
MatchWitness lps_oracle(const Text& a);

// Ulam distance 2*(n - LCS-subsequence) for equal-length non-repetitive
// inputs, via LIS after relabeling b by positions in a. Symbols absent from
// the other string count as deletions. Throws if a flag is missing.
uint64_t ulam_oracle(const Text& a, const Text& b);

} // namespace qs
