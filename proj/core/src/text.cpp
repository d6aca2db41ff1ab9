#include "qstring/text.hpp"

#include <unordered_set>

namespace qs {

Text make_text(std::vector<uint32_t> chars, uint32_t alphabet_size,
               bool non_repetitive) {
    if (chars.empty()) throw std::invalid_argument("empty text rejected");
    if (alphabet_size == 0) throw std::invalid_argument("alphabet_size must be positive");
    for (uint32_t c : chars)
        if (c >= alphabet_size)
            throw std::invalid_argument("symbol " + std::to_string(c) +
                                        " outside alphabet of size " +
                                        std::to_string(alphabet_size));
    if (non_repetitive) {
        std::unordered_set<uint32_t> seen;
        for (uint32_t c : chars)
            if (!seen.insert(c).second)
                throw std::invalid_argument("repeated symbol in non-repetitive text");
    }
    Text t;
    t.chars = std::move(chars);
    t.alphabet_size = alphabet_size;
    t.non_repetitive = non_repetitive;
    return t;
}

Text make_text(const std::string& s) {
    std::vector<uint32_t> v;
    v.reserve(s.size());
    for (unsigned char c : s) v.push_back(c);
    return make_text(std::move(v), 256, false);
}

Text make_identity_perm(size_t n) {
    std::vector<uint32_t> v(n);
    for (size_t i = 0; i < n; i++) v[i] = static_cast<uint32_t>(i);
    return make_text(std::move(v), static_cast<uint32_t>(n), true);
}

bool verify_witness(const MatchWitness& w, const Text& a, const Text& b) {
    if (w.kind != WitnessKind::common_substring) return false;
    if (w.length == 0) return true;
    if (w.pos_a + w.length > a.size() || w.pos_b + w.length > b.size()) return false;
    for (size_t i = 0; i < w.length; i++)
        if (a.chars[w.pos_a + i] != b.chars[w.pos_b + i]) return false;
    return true;
}

bool verify_witness(const MatchWitness& w, const Text& a) {
    if (w.kind != WitnessKind::palindrome) return false;
    if (w.length == 0) return true;
    if (w.pos_a + w.length > a.size()) return false;
    for (size_t i = 0, j = w.length - 1; i < j; i++, j--)
        if (a.chars[w.pos_a + i] != a.chars[w.pos_a + j]) return false;
    return true;
}

} // namespace qs
