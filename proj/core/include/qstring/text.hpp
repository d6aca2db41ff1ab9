#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstring/ledger.hpp"

namespace qs {

// Immutable input string over an integer alphabet. Positions are 0-based
// internally; everything user-facing (witnesses, CLI output) is 1-based.
struct Text {
    std::vector<uint32_t> chars;
    uint32_t alphabet_size = 0;
    bool non_repetitive = false;

    size_t size() const { return chars.size(); }
};

// Builds a Text, validating the invariants: non-empty, all symbols below the
// alphabet size, and (if requested) all symbols distinct.
Text make_text(std::vector<uint32_t> chars, uint32_t alphabet_size,
               bool non_repetitive = false);

// Convenience for tests: bytes of `s` become symbols over alphabet 256.
Text make_text(const std::string& s);

// Identity permutation 0..n-1 (non-repetitive by construction).
Text make_identity_perm(size_t n);

// Counting view of a Text: every character access costs one simulation read.
struct QueryReader {
    const Text* text = nullptr;
    QueryLedger* ledger = nullptr;

    uint32_t operator[](size_t i) const {
        ledger->sim_reads++;
        return text->chars[i];
    }
    size_t size() const { return text->size(); }
};

enum class WitnessKind { common_substring, palindrome, ulam_estimate };

// A verified answer. pos_a/pos_b are 0-based here; add 1 when reporting.
struct MatchWitness {
    WitnessKind kind = WitnessKind::common_substring;
    size_t pos_a = 0;
    size_t pos_b = 0;   // unused for palindrome witnesses
    size_t length = 0;
    double value = 0.0; // ulam_estimate only

    bool empty() const { return length == 0 && kind != WitnessKind::ulam_estimate; }
};

// Direct re-verification of a witness against the raw texts (no ledger).
bool verify_witness(const MatchWitness& w, const Text& a, const Text& b);
bool verify_witness(const MatchWitness& w, const Text& a);

} // namespace qs
