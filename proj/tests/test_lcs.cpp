#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qstring/bench.hpp"
#include "qstring/lcs.hpp"
#include "qstring/oracles.hpp"

using namespace qs;

namespace {

Text random_text(size_t n, uint32_t sigma, RandomStream& rng) {
    std::vector<uint32_t> v(n);
    for (auto& c : v) c = uint32_t(rng.below(sigma));
    return make_text(std::move(v), sigma, false);
}

// Retry wrapper: the deciders are randomized one-sided procedures.
template <typename F>
std::optional<MatchWitness> with_retries(F&& f, int tries = 5) {
    for (int t = 0; t < tries; t++) {
        auto w = f();
        if (w) return w;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("decide_small_d frozen example") {
    Text a = make_text("ababc"), b = make_text("abcba");
    QueryLedger led;
    RandomStream rng(21);
    auto w = with_retries(
        [&] { return decide_small_d(a, b, 3, led, rng); });
    REQUIRE(w.has_value());
    CHECK(w->length >= 3);
    CHECK(verify_witness(*w, a, b));
    // LCS is 3, so the d=4 decision must stay silent (one-sided soundness).
    for (int t = 0; t < 10; t++)
        CHECK_FALSE(decide_small_d(a, b, 4, led, rng).has_value());
}

TEST_CASE("decide deciders are sound on random inputs") {
    RandomStream rng(22);
    QueryLedger led;
    for (int t = 0; t < 40; t++) {
        Text a = random_text(24 + rng.below(40), 2, rng);
        Text b = random_text(24 + rng.below(40), 2, rng);
        size_t opt = lcs_oracle(a, b).length;
        size_t d = opt + 1 + rng.below(4);
        if (d > std::min(a.size(), b.size())) continue;
        auto w = decide_small_d(a, b, d, led, rng);
        CHECK_FALSE(w.has_value());
        auto w2 = decide_large_d(a, b, d, led, rng);
        CHECK_FALSE(w2.has_value());
    }
}

TEST_CASE("reconstruct_from_pair and is_good_pair on constructed good pairs") {
    RandomStream rng(23);
    QueryLedger led;
    int built = 0;
    while (built < 120) {
        size_t n = 48 + rng.below(60);
        size_t d = 9 + rng.below(18);
        auto [a, b] = make_planted_lcs(n, d, 3, rng);
        MatchWitness opt = lcs_oracle(a, b);
        if (opt.length < d) continue;
        size_t i = opt.pos_a, j = opt.pos_b;
        size_t p_len = 2 * (d / 3);
        size_t p_start = i + rng.below(d / 3);
        size_t shifted = j + (p_start - i); // copy of P inside b
        if (shifted + p_len > b.size()) continue;
        // S must contain the shifted copy: s_start <= shifted and
        // shifted + p_len <= s_start + d.
        size_t lo = shifted + p_len >= d ? shifted + p_len - d : 0;
        size_t hi = std::min(shifted, b.size() - d);
        if (lo > hi) continue;
        size_t s_start = lo + rng.below(hi - lo + 1);
        GoodPair g{p_start, p_len, s_start, d};
        CHECK(is_good_pair(a, b, d, g));
        auto w = with_retries([&] {
            return reconstruct_from_pair(a, b, p_start, s_start, d, led, rng);
        });
        REQUIRE(w.has_value());
        CHECK(w->length >= d);
        CHECK(verify_witness(*w, a, b));
        built++;
    }
}

TEST_CASE("block sampling sets cover every alignment") {
    RandomStream rng(24);
    for (int t = 0; t < 30; t++) {
        size_t n = 40 + rng.below(120);
        size_t d = 8 + rng.below(24);
        if (d > n) continue;
        double eps = rng.bernoulli(0.5) ? 0.2 : 0.5;
        size_t wlen = size_t(std::ceil((1.0 - eps) * double(d)));
        BlockSets bs = build_block_sets(n, d, eps);
        size_t max_shift = d - wlen;
        auto shifts = [&](const std::vector<size_t>& set, size_t start) {
            uint64_t mask = 0;
            for (size_t pos : set)
                if (pos >= start && pos - start <= max_shift)
                    mask |= uint64_t(1) << (pos - start);
            return mask;
        };
        for (size_t i = 0; i + d <= n; i++)
            for (size_t j = 0; j + d <= n; j++) {
                uint64_t inter = shifts(bs.set_a, i) & shifts(bs.set_b, j);
                CHECK(inter != 0);
            }
    }
}

TEST_CASE("build_block_sets degenerate k") {
    BlockSets bs = build_block_sets(32, 4, 0.5);
    CHECK(bs.k >= 1);
    CHECK_FALSE(bs.set_a.empty());
    CHECK_FALSE(bs.set_b.empty());
}

TEST_CASE("lcs_exact matches the oracle on random inputs") {
    RandomStream rng(25);
    int good = 0;
    const int total = 50;
    for (int t = 0; t < total; t++) {
        uint32_t sigma = t % 2 == 0 ? 2 : 26;
        Text a = random_text(16 + rng.below(112), sigma, rng);
        Text b = random_text(16 + rng.below(112), sigma, rng);
        QueryLedger led;
        MatchWitness w = lcs_exact(a, b, led, rng);
        REQUIRE(verify_witness(w, a, b));
        if (w.length == lcs_oracle(a, b).length) good++;
    }
    CHECK(good >= 48);
}

TEST_CASE("lcs_approx meets the ratio guarantee") {
    RandomStream rng(26);
    const double eps = 0.25;
    int good = 0;
    const int total = 50;
    for (int t = 0; t < total; t++) {
        size_t n = 32 + rng.below(96);
        size_t d = 8 + rng.below(16);
        auto [a, b] = make_planted_lcs(n, d, t % 2 == 0 ? 2 : 4, rng);
        QueryLedger led;
        MatchWitness w = lcs_approx(a, b, eps, led, rng);
        REQUIRE(verify_witness(w, a, b));
        double opt = double(lcs_oracle(a, b).length);
        if (double(w.length) >= (1.0 - eps) * opt) good++;
    }
    CHECK(good >= 48);
}

TEST_CASE("walk parameters are sane") {
    WalkParams wp = make_walk_params(1024, 32, std::nullopt);
    CHECK(wp.r >= 1);
    CHECK(wp.delta > 0.0);
    CHECK(wp.delta <= 1.0);
    CHECK(wp.prefix_len == 32);
    CHECK(wp.collision_cap >= 1);
    WalkParams wa = make_walk_params(1024, 32, 0.5);
    CHECK(wa.prefix_len == size_t(std::ceil(0.5 * 32)));
}

TEST_CASE("nonrep walk decision on planted permutation pairs") {
    RandomStream rng(27);
    QueryLedger led;
    int good = 0;
    const int total = 20;
    for (int t = 0; t < total; t++) {
        size_t n = 128, d = 20;
        auto [a, b] = make_planted_perm_pair(n, d, rng);
        size_t opt = lcs_oracle(a, b).length;
        REQUIRE(opt >= d);
        auto w = with_retries(
            [&] { return nonrep_walk_decide(a, b, d, std::nullopt, led, rng); });
        if (w && w->length >= d && verify_witness(*w, a, b)) good++;
    }
    CHECK(good >= 19);
}

TEST_CASE("nonrep exact driver matches the oracle") {
    RandomStream rng(28);
    int good = 0;
    const int total = 20;
    for (int t = 0; t < total; t++) {
        size_t n = 128;
        auto [a, b] = make_planted_perm_pair(n, 12 + rng.below(20), rng);
        QueryLedger led;
        MatchWitness w = nonrep_lcs_exact(a, b, led, rng);
        REQUIRE(verify_witness(w, a, b));
        if (w.length == lcs_oracle(a, b).length) good++;
    }
    CHECK(good >= 19);
}
