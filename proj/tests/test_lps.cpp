#include <doctest.h>

#include <algorithm>

#include "qstring/bench.hpp"
#include "qstring/lps.hpp"
#include "qstring/oracles.hpp"

using namespace qs;

namespace {

Text random_text(size_t n, uint32_t sigma, RandomStream& rng) {
    std::vector<uint32_t> v(n);
    for (auto& c : v) c = uint32_t(rng.below(sigma));
    return make_text(std::move(v), sigma, false);
}

// Naive occurrence list of P = reverse(A[r .. r+ceil(d/2)-1]) inside
// S = A[r .. r+d-1], as 0-based starts within S.
std::vector<size_t> naive_occurrences(const Text& a, size_t r, size_t d) {
    size_t plen = (d + 1) / 2;
    std::vector<uint32_t> pat(plen);
    for (size_t i = 0; i < plen; i++) pat[i] = a.chars[r + plen - 1 - i];
    std::vector<size_t> out;
    for (size_t e = 0; e + plen <= d; e++) {
        bool eq = true;
        for (size_t k = 0; k < plen && eq; k++)
            eq = a.chars[r + e + k] == pat[k];
        if (eq) out.push_back(e);
    }
    return out;
}

// Detection is guaranteed when some palindrome [l, l+len-1] (len >= d)
// contains r and mirrors the probe segment back into the window, i.e. the
// mirrored occurrence start e = 2l+len-2r-plen lies in [0, d-plen].
bool position_is_covered(const Text& a, size_t r, size_t d) {
    size_t n = a.size();
    size_t plen = (d + 1) / 2;
    for (size_t l = 0; l <= r; l++) {
        for (size_t len = d; l + len <= n; len++) {
            int64_t e = int64_t(2 * l + len) - int64_t(2 * r) - int64_t(plen);
            if (e < 0 || e > int64_t(d - plen)) continue;
            bool pal = true;
            for (size_t x = 0, y = len - 1; x < y && pal; x++, y--)
                pal = a.chars[l + x] == a.chars[l + y];
            if (pal) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("occurrence_set equals the naive occurrence list") {
    RandomStream rng(31);
    QueryLedger led;
    std::vector<Text> pool;
    for (int t = 0; t < 60; t++)
        pool.push_back(random_text(16 + rng.below(64), 2, rng));
    // Highly periodic strings exercise the progression-truncation path.
    for (int t = 0; t < 40; t++) {
        size_t q = 1 + rng.below(4), n = 24 + rng.below(48);
        std::vector<uint32_t> v(n);
        for (size_t i = 0; i < n; i++) v[i] = uint32_t((i % q) % 2);
        for (int fl = 0; fl < 3; fl++) v[rng.below(n)] ^= 1;
        pool.push_back(make_text(std::move(v), 2, false));
    }
    for (const Text& a : pool) {
        size_t n = a.size();
        for (size_t d = 4; d <= std::min<size_t>(n, 24); d += 3) {
            for (size_t r = 0; r + d <= n; r++) {
                OccurrenceSet occ = occurrence_set(a, r, d, led, rng);
                CHECK(occ.members == naive_occurrences(a, r, d));
            }
        }
    }
}

TEST_CASE("candidate centers map occurrences to doubled centers") {
    OccurrenceSet occ;
    occ.members = {0, 2, 4};
    occ.q = 2;
    auto cc = candidate_centers(5, 7, occ); // r=5, d=7, |P|=4
    REQUIRE(cc.size() == 3);
    CHECK(cc[0] == 2 * 5 + 0 + 4 - 1);
    CHECK(cc[2] == 2 * 5 + 4 + 4 - 1);
}

TEST_CASE("check_marked finds the planted palindrome") {
    Text a = make_text("abacaba");
    QueryLedger led;
    RandomStream rng(32);
    auto w = check_marked(a, 0, 7, led, rng);
    REQUIRE(w.has_value());
    CHECK(w->length >= 7);
    CHECK(verify_witness(*w, a));
}

TEST_CASE("check_marked soundness and completeness on random inputs") {
    RandomStream rng(33);
    QueryLedger led;
    for (int t = 0; t < 250; t++) {
        Text a = random_text(20 + rng.below(60), 2, rng);
        size_t d = 4 + rng.below(12);
        if (d > a.size()) continue;
        size_t r = rng.below(a.size() - d + 1);
        auto w = check_marked(a, r, d, led, rng);
        if (w) {
            // Soundness is unconditional: every witness is a real palindrome.
            CHECK(w->length >= d);
            CHECK(verify_witness(*w, a));
        } else {
            CHECK_FALSE(position_is_covered(a, r, d));
        }
    }
}

TEST_CASE("lps_decide on a planted palindrome") {
    RandomStream rng(34);
    QueryLedger led;
    Text a = make_planted_palindrome(200, 50, 4, rng);
    std::optional<MatchWitness> w;
    for (int t = 0; t < 5 && !w; t++) w = lps_decide(a, 50, led, rng);
    REQUIRE(w.has_value());
    CHECK(w->length >= 50);
    CHECK(verify_witness(*w, a));
}

TEST_CASE("lps driver matches the oracle") {
    RandomStream rng(35);
    int good = 0;
    const int total = 60;
    for (int t = 0; t < total; t++) {
        Text a = t % 3 == 2
                     ? make_planted_palindrome(64 + rng.below(192),
                                               20 + rng.below(40), 3, rng)
                     : random_text(16 + rng.below(240),
                                   2 + uint32_t(rng.below(3)), rng);
        QueryLedger led;
        MatchWitness w = lps(a, led, rng);
        REQUIRE(w.length >= 1);
        REQUIRE(verify_witness(w, a)); // hard: no false witnesses, ever
        if (w.length == lps_oracle(a).length) good++;
    }
    CHECK(good >= 59);
}

TEST_CASE("lps edge cases") {
    QueryLedger led;
    RandomStream rng(36);
    Text same = make_text({1, 1, 1, 1, 1, 1}, 2, false);
    CHECK(lps(same, led, rng).length == 6);
    Text inc = make_text({0, 1, 2, 3, 4}, 5, true);
    CHECK(lps(inc, led, rng).length == 1);
    Text single = make_text({0}, 2, false);
    CHECK(lps(single, led, rng).length == 1);
}
