// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All tolerances are pinned here as named constants.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "qstring/bench.hpp"
#include "qstring/hardgen.hpp"
#include "qstring/lcs.hpp"
#include "qstring/lps.hpp"
#include "qstring/oracles.hpp"
#include "qstring/ulam.hpp"

using namespace qs;

namespace {

constexpr uint64_t kSeed = 20240917;

Text random_text(size_t n, uint32_t sigma, RandomStream& rng) {
    std::vector<uint32_t> v(n);
    for (auto& c : v) c = uint32_t(rng.below(sigma));
    return make_text(std::move(v), sigma, false);
}

void detail(const char* fmt, ...) {
    va_list ap;
    va_start(ap, fmt);
    std::fprintf(stderr, "  ");
    std::vfprintf(stderr, fmt, ap);
    std::fprintf(stderr, "\n");
    va_end(ap);
}

// ---- shared corpora --------------------------------------------------------

struct LcsCorpus {
    std::vector<std::pair<Text, Text>> instances;
};

LcsCorpus make_lcs_corpus() {
    LcsCorpus c;
    RandomStream rng(kSeed, 1);
    const uint32_t sigmas[3] = {2, 4, 26};
    for (int t = 0; t < 500; t++) {
        size_t n = 16 + rng.below(497);
        uint32_t sigma = sigmas[t % 3];
        c.instances.emplace_back(random_text(n, sigma, rng),
                                 random_text(n, sigma, rng));
    }
    for (int t = 0; t < 100; t++) {
        size_t n = 64 + rng.below(449);
        size_t d = 8 + rng.below(n / 4);
        c.instances.push_back(make_planted_lcs(n, d, sigmas[t % 3], rng));
    }
    return c;
}

std::vector<Text> make_lps_corpus() {
    std::vector<Text> out;
    RandomStream rng(kSeed, 2);
    for (int t = 0; t < 500; t++) {
        size_t n = 16 + rng.below(1009);
        out.push_back(random_text(n, 2 + uint32_t(rng.below(3)), rng));
    }
    for (int t = 0; t < 100; t++) {
        // Adversarial: near-periodic binary strings with a few defects.
        size_t q = 1 + rng.below(6);
        size_t n = 64 + rng.below(961);
        std::vector<uint32_t> base(q);
        for (auto& c : base) c = uint32_t(rng.below(2));
        std::vector<uint32_t> v(n);
        for (size_t i = 0; i < n; i++) v[i] = base[i % q];
        size_t flips = rng.below(4);
        for (size_t f = 0; f < flips; f++) v[rng.below(n)] ^= 1;
        out.push_back(make_text(std::move(v), 2, false));
    }
    return out;
}

std::vector<size_t> grid_n() {
    return {1u << 10, 1u << 11, 1u << 12, 1u << 13, 1u << 14, 1u << 15, 1u << 16};
}

// ---- criteria --------------------------------------------------------------

bool criterion1(const LcsCorpus& c) {
    RandomStream rng(kSeed, 11);
    size_t ok = 0;
    for (auto& [a, b] : c.instances) {
        QueryLedger led;
        MatchWitness w = lcs_exact(a, b, led, rng);
        if (!verify_witness(w, a, b)) {
            detail("criterion 1: unverified witness");
            return false;
        }
        if (w.length == lcs_oracle(a, b).length) ok++;
    }
    double rate = double(ok) / double(c.instances.size());
    if (rate < 0.99) detail("criterion 1: exact agreement %.4f < 0.99", rate);
    return rate >= 0.99;
}

bool criterion2(const LcsCorpus& c) {
    RandomStream rng(kSeed, 12);
    for (double eps : {0.1, 0.25}) {
        size_t ok = 0;
        for (auto& [a, b] : c.instances) {
            QueryLedger led;
            MatchWitness w = lcs_approx(a, b, eps, led, rng);
            if (!verify_witness(w, a, b)) {
                detail("criterion 2: unverified witness");
                return false;
            }
            double opt = double(lcs_oracle(a, b).length);
            if (double(w.length) >= (1.0 - eps) * opt - 1e-9) ok++;
        }
        double rate = double(ok) / double(c.instances.size());
        if (rate < 0.99) {
            detail("criterion 2: eps=%.2f ratio compliance %.4f < 0.99", eps, rate);
            return false;
        }
    }
    return true;
}

bool criterion3() {
    RandomStream rng(kSeed, 13);
    size_t ok = 0;
    const size_t total = 200;
    for (size_t t = 0; t < total; t++) {
        size_t n = 32 + rng.below(225);
        size_t d = 8 + rng.below(std::max<size_t>(2, n / 4));
        auto [a, b] = make_planted_perm_pair(n, d, rng);
        QueryLedger led;
        double opt = double(lcs_oracle(a, b).length);
        if (t % 2 == 0) {
            MatchWitness w = nonrep_lcs_exact(a, b, led, rng);
            if (!verify_witness(w, a, b)) {
                detail("criterion 3: unverified witness");
                return false;
            }
            if (double(w.length) == opt) ok++;
        } else {
            const double eps = 0.25;
            MatchWitness w = nonrep_lcs_approx(a, b, eps, led, rng);
            if (!verify_witness(w, a, b)) {
                detail("criterion 3: unverified witness");
                return false;
            }
            if (double(w.length) >= (1.0 - eps) * opt - 1e-9) ok++;
        }
    }
    double rate = double(ok) / double(total);
    if (rate < 0.99) detail("criterion 3: agreement %.4f < 0.99", rate);
    return rate >= 0.99;
}

bool criterion4(const std::vector<Text>& corpus) {
    RandomStream rng(kSeed, 14);
    size_t ok = 0;
    for (const Text& a : corpus) {
        QueryLedger led;
        MatchWitness w = lps(a, led, rng);
        if (!verify_witness(w, a)) { // hard assert: zero false witnesses
            detail("criterion 4: false witness (n=%zu)", a.size());
            return false;
        }
        if (w.length == lps_oracle(a).length) ok++;
    }
    double rate = double(ok) / double(corpus.size());
    if (rate < 0.99) detail("criterion 4: agreement %.4f < 0.99", rate);
    return rate >= 0.99;
}

bool criterion5() {
    RandomStream rng(kSeed, 15);
    const size_t ns[5] = {256, 512, 1024, 2048, 4096};
    const size_t uds[4] = {2, 8, 32, 128};
    const double eps = 0.3;
    size_t ok = 0, errors = 0, total = 0;
    for (size_t ni = 0; ni < 5; ni++)
        for (size_t ui = 0; ui < 4; ui++)
            for (int rep = 0; rep < 10; rep++) {
                size_t n = ns[ni];
                auto [a, b] = make_planted_ulam(n, uds[ui] / 2, rng);
                double ud = double(ulam_oracle(a, b));
                QueryLedger led;
                UlamResult r = ulam_approx(a, b, eps, led, rng);
                total++;
                if (r.error_event) errors++;
                if (r.value >= (1.0 - eps) * ud - 1e-9 &&
                    r.value <= (1.0 + eps) * ud + 1e-9)
                    ok++;
            }
    double rate = double(ok) / double(total);
    double err = double(errors) / double(total);
    if (rate < 0.95) detail("criterion 5: ratio compliance %.4f < 0.95", rate);
    if (err > 0.02) detail("criterion 5: error rate %.4f > 0.02", err);
    return rate >= 0.95 && err <= 0.02;
}

bool criterion6() {
    struct Sweep {
        const char* problem;
        const char* algo;
        std::vector<size_t> grid;
        double lo, hi;
    };
    std::vector<Sweep> sweeps = {
        {"lcs", "small-d", grid_n(), 0.667 - 0.12, 0.667 + 0.12},
        {"lcs", "large-d", grid_n(), 1.0 - 0.15, 1.0 + 0.15},
        {"lcs", "large-d-dsweep", {64, 128, 256, 512, 1024}, -0.5 - 0.15, -0.5 + 0.15},
        {"lps", "quantum", grid_n(), 0.5 - 0.15, 0.5 + 0.15},
        {"ulam", "quantum", grid_n(), 0.5 - 0.15, 0.5 + 0.15},
        {"lcs", "walk-approx", grid_n(), -10.0, 0.72},
    };
    bool all = true;
    for (auto& s : sweeps) {
        BenchResult r = run_bench(s.problem, s.algo, s.grid, 30, kSeed);
        double worst_rate = 1.0;
        for (auto& row : r.rows) worst_rate = std::min(worst_rate, row.success_rate);
        bool pass = r.fit.slope >= s.lo && r.fit.slope <= s.hi;
        if (!pass || worst_rate < 0.8)
            detail("criterion 6: %s/%s slope %.3f (want [%.3f, %.3f]), min success %.2f",
                   s.problem, s.algo, r.fit.slope, s.lo, s.hi, worst_rate);
        all = all && pass;
    }
    return all;
}

bool criterion7() {
    // Constant check 2*pi/20 + pi^2/400 < 1/2 from the qtest calibration.
    if (!(2.0 * M_PI / 20.0 + M_PI * M_PI / 400.0 < 0.5)) {
        detail("criterion 7: constant assertion failed");
        return false;
    }
    RandomStream rng(kSeed, 17);
    const double kMinRate = 8.0 / (M_PI * M_PI) - 0.02;
    const int trials = 5000;
    const double qs_[2] = {0.04, 0.01}, etas[2] = {0.2, 0.1};
    for (int i = 0; i < 2; i++) {
        double q = qs_[i], eta = etas[i];
        BernoulliSource at, below;
        at.true_p = q;
        below.true_p = (1.0 - eta) * q;
        at.run_cost = below.run_cost = 1.0;
        int large_ok = 0, small_ok = 0;
        QueryLedger led;
        for (int t = 0; t < trials; t++) {
            if (qtest_single(at, q, eta, led, rng).large) large_ok++;
            if (!qtest_single(below, q, eta, led, rng).large) small_ok++;
        }
        double lr = double(large_ok) / trials, sr = double(small_ok) / trials;
        if (lr < kMinRate || sr < kMinRate) {
            detail("criterion 7: q=%.2f eta=%.1f rates %.4f / %.4f < %.4f", q, eta,
                   lr, sr, kMinRate);
            return false;
        }
    }
    return true;
}

bool criterion8() {
    RandomStream rng(kSeed, 18);
    const int draws = 10000;
    const double kMinFrac = 0.81 - 0.02;
    for (double p : {0.1, 0.25, 0.5}) {
        for (uint64_t k : {8ull, 32ull, 128ull}) {
            AmplitudeLaw law(p, k);
            if (std::fabs(law.raw_mass() - 1.0) > 1e-9) {
                detail("criterion 8: raw mass error %.2e > 1e-9",
                       std::fabs(law.raw_mass() - 1.0));
                return false;
            }
            double bound = 2.0 * M_PI * std::sqrt(p * (1.0 - p)) / double(k) +
                           M_PI * M_PI / double(k * k);
            int inside = 0;
            for (int t = 0; t < draws; t++)
                if (std::fabs(law.sample(rng) - p) <= bound) inside++;
            double frac = double(inside) / draws;
            if (frac < kMinFrac) {
                detail("criterion 8: p=%.2f k=%llu fraction %.4f < %.4f", p,
                       (unsigned long long)k, frac, kMinFrac);
                return false;
            }
        }
    }
    return true;
}

bool criterion9() {
    RandomStream rng(kSeed, 19);
    const size_t n = 100, r = 20;
    const int samples = 100000;
    const double c1 = 0.25, eps = 0.5;
    for (size_t d : {size_t(4), size_t(16)}) {
        auto [a, b] = make_planted_perm_pair(n, d, rng);
        size_t a_starts = n - d + 1, b_starts = n - d + 1;
        // match[i] = j with A[i..i+len) == B[j..j+len), or npos (unique for
        // permutations).
        auto match_map = [&](size_t len) {
            std::map<std::vector<uint32_t>, size_t> where;
            for (size_t j = 0; j + len <= n; j++)
                where[{b.chars.begin() + j, b.chars.begin() + j + len}] = j;
            std::vector<size_t> match(a_starts, size_t(-1));
            for (size_t i = 0; i + len <= n && i < a_starts; i++) {
                auto it = where.find(
                    {a.chars.begin() + i, a.chars.begin() + i + len});
                if (it != where.end()) match[i] = it->second;
            }
            return match;
        };
        size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
        std::vector<size_t> match_exact = match_map(d), match_approx = match_map(m);
        // First-character collision pairs, for condition (ii).
        std::vector<size_t> pin(a_starts, size_t(-1));
        {
            std::unordered_map<uint32_t, size_t> posb;
            for (size_t j = 0; j < b_starts; j++) posb[b.chars[j]] = j;
            for (size_t i = 0; i < a_starts; i++) {
                auto it = posb.find(a.chars[i]);
                if (it != posb.end()) pin[i] = it->second;
            }
        }
        double alpha = std::ceil(54.0 * std::log(double(n)));
        uint64_t cap_exact = uint64_t(
            std::ceil(alpha * (double(r) * double(r) / double(n) + 1.0)));
        uint64_t cap_approx = uint64_t(
            std::ceil(alpha * double(r) * double(r) / double(n)));

        int exact_marked = 0, approx_marked = 0, violations = 0;
        std::vector<char> in2(b_starts);
        std::vector<size_t> r1, r2;
        auto sample_subset = [&](size_t starts, std::vector<size_t>& out) {
            out.clear();
            std::unordered_map<size_t, char> seen;
            while (out.size() < r) {
                size_t v = rng.below(starts);
                if (seen.emplace(v, 1).second) out.push_back(v);
            }
        };
        for (int t = 0; t < samples; t++) {
            sample_subset(a_starts, r1);
            sample_subset(b_starts, r2);
            std::fill(in2.begin(), in2.end(), 0);
            for (size_t j : r2) in2[j] = 1;
            bool me = false, ma = false;
            uint64_t pairs = 0;
            for (size_t i : r1) {
                if (match_exact[i] != size_t(-1) && in2[match_exact[i]]) me = true;
                if (match_approx[i] != size_t(-1) && in2[match_approx[i]]) ma = true;
                if (pin[i] != size_t(-1) && in2[pin[i]]) pairs++;
            }
            if (me) exact_marked++;
            if (ma) approx_marked++;
            if (pairs > std::min(cap_exact, cap_approx)) violations++;
        }
        double fe = double(exact_marked) / samples;
        double fa = double(approx_marked) / samples;
        double fv = double(violations) / samples;
        double thresh_exact =
            double(r) * double(r - 1) / (double(n) * double(n - 1)) - 1e-2;
        double thresh_approx =
            c1 * double(d) * double(r) * double(r) / (double(n) * double(n));
        if (fe < thresh_exact || fa < thresh_approx || fv > 1e-2) {
            detail("criterion 9: d=%zu exact %.4f (>= %.4f), approx %.4f (>= %.4f), "
                   "violations %.4f",
                   d, fe, thresh_exact, fa, thresh_approx, fv);
            return false;
        }
    }
    return true;
}

bool criterion10() {
    for (double eps : {0.2, 0.5}) {
        for (size_t d = 1; d <= 64; d++) {
            size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
            size_t span = d - m; // largest window shift inside the solution
            for (size_t n = d; n <= 200; n++) {
                BlockSets bs = build_block_sets(n, d, eps);
                std::vector<char> ina(n, 0), inb(n, 0);
                for (size_t p : bs.set_a) ina[p] = 1;
                for (size_t p : bs.set_b) inb[p] = 1;
                std::vector<uint64_t> masks_a, masks_b;
                for (size_t i = 0; i + d <= n; i++) {
                    uint64_t ma = 0, mb = 0;
                    for (size_t s = 0; s <= span; s++) {
                        if (ina[i + s]) ma |= uint64_t(1) << s;
                        if (inb[i + s]) mb |= uint64_t(1) << s;
                    }
                    masks_a.push_back(ma);
                    masks_b.push_back(mb);
                }
                std::sort(masks_a.begin(), masks_a.end());
                masks_a.erase(std::unique(masks_a.begin(), masks_a.end()),
                              masks_a.end());
                std::sort(masks_b.begin(), masks_b.end());
                masks_b.erase(std::unique(masks_b.begin(), masks_b.end()),
                              masks_b.end());
                for (uint64_t ma : masks_a)
                    for (uint64_t mb : masks_b)
                        if ((ma & mb) == 0) {
                            detail("criterion 10: gap at n=%zu d=%zu eps=%.1f", n,
                                   d, eps);
                            return false;
                        }
            }
        }
    }
    return true;
}

bool criterion11(const std::vector<Text>& corpus) {
    RandomStream rng(kSeed, 21);
    QueryLedger led;
    for (const Text& a : corpus) {
        size_t n = a.size();
        for (size_t d : {size_t(5), size_t(16), size_t(49)}) {
            if (d > n) continue;
            size_t plen = (d + 1) / 2;
            size_t starts = n - d + 1;
            size_t probes = std::min<size_t>(starts, 40);
            for (size_t t = 0; t < probes; t++) {
                size_t r = starts <= 40 ? t : rng.below(starts);
                OccurrenceSet occ = occurrence_set(a, r, d, led, rng);
                std::vector<size_t> naive;
                for (size_t e = 0; e + plen <= d; e++) {
                    bool eq = true;
                    for (size_t k = 0; k < plen && eq; k++)
                        eq = a.chars[r + e + k] == a.chars[r + plen - 1 - k];
                    if (eq) naive.push_back(e);
                }
                if (occ.members != naive) {
                    detail("criterion 11: mismatch at n=%zu r=%zu d=%zu", n, r, d);
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion12() {
    size_t bin_resamples = 0, bin_draws = 0;
    for (uint64_t seed = 1; seed <= 100; seed++) {
        bool flip = seed % 2 == 0;
        HardInstance e = gen_ed_to_lcs(48, flip, seed);
        if (lcs_oracle(e.texts[0], e.texts[1]).length != e.planted_answer) {
            detail("criterion 12: ed-lcs mismatch at seed %llu",
                   (unsigned long long)seed);
            return false;
        }
        HardInstance b = gen_binary_lcs(512, 1.0, flip, seed, 12);
        bin_resamples += b.resamples;
        bin_draws++;
        if (lcs_oracle(b.texts[0], b.texts[1]).length != b.planted_answer) {
            detail("criterion 12: bin-lcs mismatch at seed %llu",
                   (unsigned long long)seed);
            return false;
        }
        HardInstance l = gen_lps_hard(9, 0.5, seed, flip);
        if (lps_oracle(l.texts[0]).length != l.planted_answer) {
            detail("criterion 12: lps-hard mismatch at seed %llu",
                   (unsigned long long)seed);
            return false;
        }
        HardInstance u = gen_ulam_swap(64, seed % 64, seed);
        if (ulam_oracle(u.texts[0], u.texts[1]) != u.planted_answer) {
            detail("criterion 12: ulam-swap mismatch at seed %llu",
                   (unsigned long long)seed);
            return false;
        }
    }
    double rate = double(bin_resamples) / double(bin_draws);
    if (rate > 0.1) {
        detail("criterion 12: bin-lcs resample rate %.3f > 0.1", rate);
        return false;
    }
    return true;
}

bool criterion13() {
    std::vector<size_t> grid = {256, 512, 1024};
    BenchResult r1 = run_bench("lps", "quantum", grid, 10, 777);
    BenchResult r2 = run_bench("lps", "quantum", grid, 10, 777);
    std::string c1 = bench_csv(r1), c2 = bench_csv(r2);
    if (c1 != c2) {
        detail("criterion 13: CSV outputs differ");
        return false;
    }
    return true;
}

} // namespace

int main() {
    LcsCorpus lcs_corpus = make_lcs_corpus();
    std::vector<Text> lps_corpus = make_lps_corpus();

    struct Entry {
        int id;
        bool pass;
    };
    std::vector<Entry> results;
    results.push_back({1, criterion1(lcs_corpus)});
    results.push_back({2, criterion2(lcs_corpus)});
    results.push_back({3, criterion3()});
    results.push_back({4, criterion4(lps_corpus)});
    results.push_back({5, criterion5()});
    results.push_back({6, criterion6()});
    results.push_back({7, criterion7()});
    results.push_back({8, criterion8()});
    results.push_back({9, criterion9()});
    results.push_back({10, criterion10()});
    results.push_back({11, criterion11(lps_corpus)});
    results.push_back({12, criterion12()});
    results.push_back({13, criterion13()});

    int failures = 0;
    for (auto& e : results) {
        std::printf("criterion %d: %s\n", e.id, e.pass ? "PASS" : "FAIL");
        if (!e.pass) failures++;
    }
    return failures == 0 ? 0 : 1;
}
