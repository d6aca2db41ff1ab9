#include "qstring/oracles.hpp"

#include <algorithm>
#include <unordered_map>

namespace qs {
namespace {

// Suffix automaton over uint32 symbols with hashed transitions.
struct SuffixAutomaton {
    struct State {
        int len = 0, link = -1;
        int firstpos = -1; // end index (0-based) of first occurrence
        std::unordered_map<uint32_t, int> next;
    };
    std::vector<State> st;
    int last = 0;

    explicit SuffixAutomaton(const std::vector<uint32_t>& s) {
        st.reserve(2 * s.size() + 2);
        st.emplace_back(); // root
        for (size_t i = 0; i < s.size(); i++) extend(s[i], static_cast<int>(i));
    }

    void extend(uint32_t c, int pos) {
        int cur = static_cast<int>(st.size());
        st.emplace_back();
        st[cur].len = st[last].len + 1;
        st[cur].firstpos = pos;
        int p = last;
        while (p != -1 && !st[p].next.count(c)) {
            st[p].next[c] = cur;
            p = st[p].link;
        }
        if (p == -1) {
            st[cur].link = 0;
        } else {
            int q = st[p].next[c];
            if (st[p].len + 1 == st[q].len) {
                st[cur].link = q;
            } else {
                int clone = static_cast<int>(st.size());
                st.push_back(st[q]);
                st[clone].len = st[p].len + 1;
                while (p != -1 && st[p].next.count(c) && st[p].next[c] == q) {
                    st[p].next[c] = clone;
                    p = st[p].link;
                }
                st[q].link = st[cur].link = clone;
            }
        }
        last = cur;
    }
};

} // namespace

MatchWitness lcs_oracle(const Text& a, const Text& b) {
    SuffixAutomaton sa(a.chars);
    MatchWitness best;
    best.kind = WitnessKind::common_substring;
    int v = 0, l = 0;
    for (size_t i = 0; i < b.size(); i++) {
        uint32_t c = b.chars[i];
        while (v != 0 && !sa.st[v].next.count(c)) {
            v = sa.st[v].link;
            l = sa.st[v].len;
        }
        if (sa.st[v].next.count(c)) {
            v = sa.st[v].next[c];
            l++;
        }
        if (static_cast<size_t>(l) > best.length) {
            best.length = l;
            best.pos_a = sa.st[v].firstpos - l + 1;
            best.pos_b = i - l + 1;
        }
    }
    return best;
}

MatchWitness lps_oracle(const Text& a) {
    // Manacher over the interleaved sequence with sentinels.
    size_t n = a.size();
    std::vector<int64_t> t(2 * n + 1, -1); // -1 = gap; symbols stored as >= 0
    for (size_t i = 0; i < n; i++) t[2 * i + 1] = a.chars[i];
    size_t m = t.size();
    std::vector<size_t> rad(m, 0);
    size_t center = 0, right = 0;
    for (size_t i = 0; i < m; i++) {
        if (i < right) rad[i] = std::min(right - i, rad[2 * center - i]);
        while (i >= rad[i] + 1 && i + rad[i] + 1 < m &&
               t[i - rad[i] - 1] == t[i + rad[i] + 1])
            rad[i]++;
        if (i + rad[i] > right) {
            center = i;
            right = i + rad[i];
        }
    }
    MatchWitness best;
    best.kind = WitnessKind::palindrome;
    for (size_t i = 0; i < m; i++) {
        size_t len = rad[i]; // palindrome length in original string
        if (len > best.length) {
            best.length = len;
            best.pos_a = (i - rad[i]) / 2;
        }
    }
    if (best.length == 0 && n >= 1) { // all-distinct neighbors: single char
        best.length = 1;
        best.pos_a = 0;
    }
    return best;
}

uint64_t ulam_oracle(const Text& a, const Text& b) {
    if (!a.non_repetitive || !b.non_repetitive)
        throw std::invalid_argument("ulam_oracle requires non-repetitive inputs");
    if (a.size() != b.size())
        throw std::invalid_argument("ulam_oracle requires equal lengths");
    size_t n = a.size();
    std::unordered_map<uint32_t, size_t> pos_in_a;
    pos_in_a.reserve(n * 2);
    for (size_t i = 0; i < n; i++) pos_in_a[a.chars[i]] = i;
    std::vector<size_t> seq;
    seq.reserve(n);
    for (size_t j = 0; j < n; j++) {
        auto it = pos_in_a.find(b.chars[j]);
        if (it != pos_in_a.end()) seq.push_back(it->second);
    }
    // LIS via patience sorting; its length is the LCS-subsequence length.
    std::vector<size_t> tails;
    for (size_t x : seq) {
        auto it = std::lower_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return 2 * (n - tails.size());
}

} // namespace qs
