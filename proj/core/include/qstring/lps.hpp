#pragma once

#include <optional>

#include "qstring/qsim.hpp"

namespace qs {

// Occurrences of the reversed-half pattern P inside the window
// S = A[r, r+d-1]; derived from the two rightmost occurrences. q = 0 means
// fewer than two occurrences.
struct OccurrenceSet {
    std::vector<size_t> members; // 0-based starts within S, ascending
    size_t q = 0;                // occurrence spacing (pattern period)
};

// Computes the occurrence set via rightmost / second-rightmost pattern
// matching. Window position r is 0-based.
OccurrenceSet occurrence_set(const Text& a, size_t r, size_t d,
                             QueryLedger& led, RandomStream& rng);

// Candidate solution centers as doubled 0-based positions: a palindrome
// [l, l+d-1] has doubled center 2l+d-1. Occurrence e maps to 2r+e+|P|-1.
std::vector<size_t> candidate_centers(size_t r, size_t d,
                                      const OccurrenceSet& occ);

// Is position r in the left half of some length-d palindrome? Returns a
// verified palindrome witness of length >= d, or nothing. Never returns a
// false witness.
std::optional<MatchWitness> check_marked(const Text& a, size_t r, size_t d,
                                         QueryLedger& led, RandomStream& rng);

// Grover over positions with the marked predicate (threshold floor(d/2)).
std::optional<MatchWitness> lps_decide(const Text& a, size_t d,
                                       QueryLedger& led, RandomStream& rng);

// Binary-search driver probing both parities at every step.
MatchWitness lps(const Text& a, QueryLedger& led, RandomStream& rng);

} // namespace qs
