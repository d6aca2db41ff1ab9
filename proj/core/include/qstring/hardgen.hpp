#pragma once

#include <string>

#include "qstring/rng.hpp"
#include "qstring/text.hpp"

#include <json.hpp>

namespace qs {

// Adversarial fixture realizing one of the lower-bound reductions. The
// planted answer is certified against the exact oracle at generation time.
struct HardInstance {
    std::vector<Text> texts;
    uint64_t planted_answer = 0;
    std::string regime;
    std::string generator;
    nlohmann::json params;
    uint64_t seed = 0;
    uint64_t resamples = 0; // rejected draws before certification
};

// Shuffle of 2n characters split into two non-repetitive halves; with
// collide, exactly one duplicated character straddling the split (resampled
// until it does). Answer: LCS length 0 or 1.
HardInstance gen_ed_to_lcs(size_t n, bool collide, uint64_t seed);

// Binary encoding of the above with random s-bit codewords, s = ceil(d_alpha
// * log2 n); resamples until every pair of distinct codewords has common
// substring at most (c/3)s and the full-string gap holds (zero regime
// < c*s, one regime >= s).
HardInstance gen_binary_lcs(size_t n, double c, bool collide, uint64_t seed,
                            uint64_t d_alpha = 12);

// Palindrome gap fixture: k = ceil(3/c), blocks x^1..x^k with each 0 -> 0^k
// and each 1 -> 1^i 0^(k-i); all-zero regime has LPS = n = k^2 m, weight-one
// keeps every palindrome below c*n.
HardInstance gen_lps_hard(size_t m, double c, uint64_t seed, bool weight_one);

// Identity permutation vs. the same with positions ell, ell+1 (1-based)
// swapped; ell = 0 keeps the strings equal. Answer: Ulam distance 0 or 2.
HardInstance gen_ulam_swap(size_t n, size_t ell, uint64_t seed);

} // namespace qs
