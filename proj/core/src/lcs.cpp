#include "qstring/lcs.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "qstring/oracles.hpp"
#include "qstring/periodicity.hpp"

namespace qs {

namespace {

// Two-sided extension of a known-equal alignment A[pa..pa+len-1] =
// B[pb..pb+len-1]; each endpoint moves at most `limit`. Models two Grover
// first-mismatch searches.
MatchWitness extend_alignment(const QueryReader& ra, const QueryReader& rb,
                              size_t pa, size_t pb, size_t len, size_t limit,
                              QueryLedger& led) {
    led.charge("grover_extend",
               2.0 * std::ceil(std::sqrt(double(limit))) * clog(double(limit)));
    size_t moved = 0;
    while (moved < limit && pa > 0 && pb > 0 && ra[pa - 1] == rb[pb - 1]) {
        pa--;
        pb--;
        len++;
        moved++;
    }
    moved = 0;
    while (moved < limit && pa + len < ra.size() && pb + len < rb.size() &&
           ra[pa + len] == rb[pb + len]) {
        len++;
        moved++;
    }
    MatchWitness w;
    w.kind = WitnessKind::common_substring;
    w.pos_a = pa;
    w.pos_b = pb;
    w.length = len;
    return w;
}

std::function<uint32_t(size_t)> view(const QueryReader& r, size_t off) {
    return [&r, off](size_t i) { return r[off + i]; };
}

} // namespace

bool is_good_pair(const Text& a, const Text& b, size_t d, const GoodPair& g) {
    size_t n = a.size();
    size_t third = d / 3;
    if (third == 0) return false;
    for (size_t i = 0; i + d <= n; i++) {
        if (!(i <= g.p_start && g.p_start < i + third)) continue;
        for (size_t j = 0; j + d <= b.size(); j++) {
            bool eq = true;
            for (size_t t = 0; t < d && eq; t++) eq = a.chars[i + t] == b.chars[j + t];
            if (!eq) continue;
            // Shift P onto B through (i, j); it must land inside S.
            size_t bp = g.p_start - i + j;
            if (g.s_start <= bp && bp + g.p_len <= g.s_start + g.s_len) return true;
        }
    }
    return false;
}

std::optional<MatchWitness> decide_small_d(const Text& a, const Text& b, size_t d,
                                           QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    if (d == 0 || d > n || d > b.size()) return std::nullopt;
    QueryReader ra{&a, &led}, rb{&b, &led};
    WindowHasher ha(ra), hb(rb);
    std::vector<Fingerprint> ka, kb;
    ka.reserve(n - d + 1);
    for (size_t i = 0; i + d <= n; i++) ka.push_back(ha.window(i, d));
    kb.reserve(b.size() - d + 1);
    for (size_t j = 0; j + d <= b.size(); j++) kb.push_back(hb.window(j, d));
    auto eq = [&](size_t i, size_t j) {
        for (size_t t = 0; t < d; t++)
            if (ra[i + t] != rb[j + t]) return false;
        return true;
    };
    double T = std::sqrt(double(d)) * clog(double(d));
    auto hit = claw_find(ka, kb, eq, T, led, rng);
    if (!hit) return std::nullopt;
    MatchWitness w;
    w.kind = WitnessKind::common_substring;
    w.pos_a = hit->first;
    w.pos_b = hit->second;
    w.length = d;
    return w;
}

std::optional<MatchWitness> reconstruct_from_pair(const Text& a, const Text& b,
                                                  size_t p_start, size_t s_start,
                                                  size_t d, QueryLedger& led,
                                                  RandomStream& rng) {
    size_t n = a.size();
    size_t plen = 2 * (d / 3);
    if (plen == 0 || p_start + plen > n || s_start + d > b.size()) return std::nullopt;
    QueryReader ra{&a, &led}, rb{&b, &led};

    auto lm = pattern_match(view(rb, s_start), d, view(ra, p_start), plen,
                            Side::leftmost, led, rng);
    if (!lm) return std::nullopt;
    auto rm = pattern_match(view(rb, s_start), d, view(ra, p_start), plen,
                            Side::rightmost, led, rng);
    size_t l = *lm, r = rm ? *rm : *lm;

    auto try_candidate = [&](size_t pa, size_t pb, size_t len) -> std::optional<MatchWitness> {
        if (len == 0) { // single-anchor candidate: verify the anchor itself
            if (ra[pa] != rb[pb]) return std::nullopt;
            len = 1;
        }
        MatchWitness w = extend_alignment(ra, rb, pa, pb, len, 2 * d, led);
        if (w.length >= d) return w;
        return std::nullopt;
    };

    if (l == r || r - l >= plen) {
        // Unique (or non-overlapping) occurrences: direct extension each.
        if (auto w = try_candidate(p_start, s_start + l, plen)) return w;
        if (r != l)
            if (auto w = try_candidate(p_start, s_start + r, plen)) return w;
        return std::nullopt;
    }

    // Overlapping occurrences: P and T = S[l, r+|P|-1] are q-periodic.
    size_t q = r - l;
    Interval runA = extend_periodic(ra, {p_start, p_start + plen - 1}, q, 2 * d);
    Interval runB =
        extend_periodic(rb, {s_start + l, s_start + r + plen - 1}, q, 2 * d);
    size_t alpha = runA.x, beta = runA.y;
    size_t alpha2 = runB.x, beta2 = runB.y;

    // Case 1: solution starts left of the runs; A[alpha] aligns with B[alpha2].
    if (auto w = try_candidate(alpha, alpha2, 0)) return w;
    // Case 2: solution ends right of the runs; A[beta] aligns with B[beta2].
    if (auto w = try_candidate(beta, beta2, 0)) return w;

    // Case 3: solution inside both runs. x is P's start in A.
    size_t x = p_start;
    size_t blen = beta2 - alpha2 + 1;
    if (blen >= plen) {
        // Rightmost occurrence starting within [alpha2, alpha2 + (x - alpha)].
        size_t hi = std::min(alpha2 + (x - alpha), beta2 - plen + 1);
        size_t span = hi - alpha2 + 1 + plen - 1;
        span = std::min(span, blen);
        if (auto y = pattern_match(view(rb, alpha2), span, view(ra, p_start), plen,
                                   Side::rightmost, led, rng))
            if (auto w = try_candidate(x, alpha2 + *y, plen)) return w;
        // Leftmost occurrence starting at or after alpha2 + (x - alpha).
        size_t lo = alpha2 + (x - alpha);
        if (lo + plen <= beta2 + 1) {
            if (auto y = pattern_match(view(rb, lo), beta2 - lo + 1,
                                       view(ra, p_start), plen, Side::leftmost,
                                       led, rng))
                if (auto w = try_candidate(x, lo + *y, plen)) return w;
        }
    }
    return std::nullopt;
}

std::optional<MatchWitness> decide_large_d(const Text& a, const Text& b, size_t d,
                                           QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    if (d == 0 || d > n || d > b.size()) return std::nullopt;
    size_t third = d / 3;
    if (third == 0) return decide_small_d(a, b, d, led, rng);
    size_t plen = 2 * third;

    // Outcome-equivalence side-channel: when no length-d common substring
    // exists every sampled pair fails, so attempts are skipped (their charge
    // is identical either way).
    bool exists = lcs_oracle(a, b).length >= d;

    double p_lower = double(third) * double(third) / (9.0 * double(n) * double(n));
    double T = std::sqrt(double(d)) * clog(double(d));
    if (!exists) { // every attempt would fail; charge is unchanged
        led.charge("amplify", std::ceil(1.0 / std::sqrt(p_lower)) * T *
                                  clog(1.0 / p_lower));
        return std::nullopt;
    }

    // Fast necessary-condition filter: P's first third must occur inside S.
    QueryReader ra{&a, &led}, rb{&b, &led};
    WindowHasher ha(ra), hb(rb);
    std::unordered_map<Fingerprint, std::vector<size_t>, FingerprintHash> occ_b;
    for (size_t j = 0; j + third <= b.size(); j++)
        occ_b[hb.window(j, third)].push_back(j);

    size_t a_starts = n - plen + 1;
    size_t b_starts = b.size() - d + 1;
    std::function<std::optional<MatchWitness>()> proc =
        [&]() -> std::optional<MatchWitness> {
        size_t i = rng.below(a_starts);
        size_t j = rng.below(b_starts);
        auto it = occ_b.find(ha.window(i, third));
        if (it == occ_b.end()) return std::nullopt;
        auto& v = it->second;
        auto lo = std::lower_bound(v.begin(), v.end(), j);
        if (lo == v.end() || *lo > j + d - third) return std::nullopt;
        // Per-attempt primitives are covered by the amplify charge (T); only
        // their simulation reads count.
        return run_uncharged(led, [&](QueryLedger& scratch) {
            return reconstruct_from_pair(a, b, i, j, d, scratch, rng);
        });
    };
    return amplify(proc, p_lower, T, led, rng);
}

BlockSets build_block_sets(size_t n, size_t d, double eps) {
    BlockSets bs;
    size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
    m = std::min(m, d);
    size_t k = size_t(std::floor(std::sqrt(eps * double(d))));
    bs.k = std::max<size_t>(1, k);
    if (m > n) return bs;
    size_t last = n - m; // last valid window start (0-based)
    if (bs.k == 1) {
        for (size_t i = 0; i <= last; i++) {
            bs.set_a.push_back(i);
            bs.set_b.push_back(i);
        }
        return bs;
    }
    for (size_t i = 0; i <= last; i += bs.k) bs.set_a.push_back(i);
    // 1-based: ceil(i/k) mod k == 1, i.e. the first block of every k blocks.
    for (size_t i = 0; i <= last; i++) {
        size_t block = i / bs.k; // 0-based block index
        if (block % bs.k == 0) bs.set_b.push_back(i);
    }
    return bs;
}

std::optional<MatchWitness> approx_small_d(const Text& a, const Text& b, size_t d,
                                           double eps, QueryLedger& led,
                                           RandomStream& rng) {
    size_t n = a.size();
    if (d == 0 || d > n || d > b.size()) return std::nullopt;
    size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
    m = std::min(m, d);
    BlockSets bs = build_block_sets(n, d, eps);
    BlockSets bsb = build_block_sets(b.size(), d, eps);
    if (bs.set_a.empty() || bsb.set_b.empty()) return std::nullopt;
    QueryReader ra{&a, &led}, rb{&b, &led};
    WindowHasher ha(ra), hb(rb);
    std::vector<Fingerprint> ka, kb;
    ka.reserve(bs.set_a.size());
    for (size_t i : bs.set_a) ka.push_back(ha.window(i, m));
    kb.reserve(bsb.set_b.size());
    for (size_t j : bsb.set_b) kb.push_back(hb.window(j, m));
    auto eq = [&](size_t ia, size_t ib) {
        size_t i = bs.set_a[ia], j = bsb.set_b[ib];
        for (size_t t = 0; t < m; t++)
            if (ra[i + t] != rb[j + t]) return false;
        return true;
    };
    double T = std::sqrt(double(m)) * clog(double(m));
    auto hit = claw_find(ka, kb, eq, T, led, rng);
    if (!hit) return std::nullopt;
    MatchWitness w;
    w.kind = WitnessKind::common_substring;
    w.pos_a = bs.set_a[hit->first];
    w.pos_b = bsb.set_b[hit->second];
    w.length = m;
    return w;
}

namespace {

// Shared binary-search driver. probe(d) returns a witness whose length is
// acceptable for that d (>= d exact, >= ceil((1-eps)d) approx). retries
// amplify the one-sided probe error; a final boundary re-probe guards the
// off-by-one at the top.
MatchWitness search_driver(
    size_t n, const std::function<std::optional<MatchWitness>(size_t)>& probe,
    int retries) {
    auto probe_r = [&](size_t d) -> std::optional<MatchWitness> {
        for (int t = 0; t < retries; t++)
            if (auto w = probe(d)) return w;
        return std::nullopt;
    };
    MatchWitness best;
    best.kind = WitnessKind::common_substring;
    size_t lo = 1, hi = n;
    size_t confirmed = 0; // largest d whose probe succeeded
    while (lo <= hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (auto w = probe_r(mid)) {
            best = *w;
            confirmed = mid;
            lo = mid + 1;
        } else {
            hi = mid - 1;
            if (hi == 0) break;
        }
    }
    // Boundary probe at confirmed+1 (and upward while it keeps succeeding).
    size_t next = confirmed + 1;
    while (next <= n) {
        if (auto w = probe_r(next)) {
            best = *w;
            next++;
        } else {
            break;
        }
    }
    return best;
}

} // namespace

MatchWitness lcs_exact(const Text& a, const Text& b, QueryLedger& led,
                       RandomStream& rng) {
    size_t n = a.size();
    double thresh = std::cbrt(double(n));
    auto probe = [&](size_t d) -> std::optional<MatchWitness> {
        if (double(d) < thresh) return decide_small_d(a, b, d, led, rng);
        return decide_large_d(a, b, d, led, rng);
    };
    return search_driver(std::min(n, b.size()), probe, 2);
}

MatchWitness lcs_approx(const Text& a, const Text& b, double eps,
                        QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    double thresh = std::sqrt(double(n));
    auto probe = [&](size_t d) -> std::optional<MatchWitness> {
        size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
        std::optional<MatchWitness> w;
        if (double(d) < thresh)
            w = approx_small_d(a, b, d, eps, led, rng);
        else
            w = decide_large_d(a, b, d, led, rng);
        if (w && w->length >= m) return w;
        return std::nullopt;
    };
    return search_driver(std::min(n, b.size()), probe, 2);
}

WalkParams make_walk_params(size_t n, size_t d, std::optional<double> eps) {
    WalkParams p;
    double nn = double(n);
    p.alpha = uint64_t(std::ceil(54.0 * std::log(std::max(nn, 2.0))));
    if (!eps) {
        p.prefix_len = d;
        p.r = size_t(std::ceil(std::pow(nn, 2.0 / 3.0)));
        p.collision_cap = uint64_t(
            std::ceil(double(p.alpha) * (double(p.r) * double(p.r) / nn + 1.0)));
        p.delta = 0.25 * double(p.r) * double(p.r) / (nn * nn);
    } else {
        p.prefix_len =
            std::max<size_t>(1, size_t(std::ceil((1.0 - *eps) * double(d))));
        double shifts = std::max(1.0, std::floor(*eps * double(d)));
        p.r = size_t(std::ceil(std::pow(nn, 2.0 / 3.0) / std::cbrt(double(d))));
        p.r = std::min<size_t>(p.r, std::max<size_t>(1, n / std::max<size_t>(1, d)));
        p.collision_cap = uint64_t(std::max(
            1.0, std::ceil(double(p.alpha) * double(p.r) * double(p.r) / nn)));
        p.delta = 0.25 * shifts * double(p.r) * double(p.r) / (nn * nn);
    }
    size_t starts = (d <= n) ? n - d + 1 : 1;
    p.r = std::max<size_t>(1, std::min(p.r, starts));
    p.delta = std::min(p.delta, 1.0);
    return p;
}

std::optional<MatchWitness> nonrep_walk_decide(const Text& a, const Text& b,
                                               size_t d, std::optional<double> eps,
                                               QueryLedger& led, RandomStream& rng) {
    if (!a.non_repetitive || !b.non_repetitive)
        throw std::invalid_argument("walk requires non-repetitive inputs");
    size_t n = a.size();
    if (d == 0 || d > n || d > b.size()) return std::nullopt;
    WalkParams p = make_walk_params(n, d, eps);
    size_t m = p.prefix_len;
    size_t a_starts = n - d + 1, b_starts = b.size() - d + 1;

    QueryReader ra{&a, &led}, rb{&b, &led};
    WindowHasher ha(ra), hb(rb);
    // Non-repetitive: each symbol of B occurs once, so a first-character
    // collision map pins each i to at most one j.
    std::unordered_map<uint32_t, size_t> pos_b;
    pos_b.reserve(b_starts * 2);
    for (size_t j = 0; j < b_starts; j++) pos_b[rb[j]] = j;

    struct State {
        std::vector<size_t> r1;
        std::unordered_set<size_t> r2;
    };
    auto sample_subset = [&](size_t starts, std::vector<size_t>& out) {
        std::unordered_set<size_t> seen;
        out.clear();
        while (out.size() < p.r) {
            size_t v = rng.below(starts);
            if (seen.insert(v).second) out.push_back(v);
        }
    };
    std::function<State(RandomStream&)> sampler = [&](RandomStream&) {
        State st;
        sample_subset(a_starts, st.r1);
        std::vector<size_t> tmp;
        sample_subset(b_starts, tmp);
        st.r2.insert(tmp.begin(), tmp.end());
        return st;
    };
    std::function<std::optional<MatchWitness>(const State&)> checker =
        [&](const State& st) -> std::optional<MatchWitness> {
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t i : st.r1) {
            auto it = pos_b.find(a.chars[i]);
            if (it != pos_b.end() && st.r2.count(it->second))
                pairs.emplace_back(i, it->second);
        }
        if (pairs.size() > p.collision_cap) return std::nullopt; // condition (ii)
        for (auto& [i, j] : pairs) {
            if (i + m > n || j + m > b.size()) continue;
            if (!(ha.window(i, m) == hb.window(j, m))) continue;
            bool eq = true;
            for (size_t t = 0; t < m && eq; t++) eq = ra[i + t] == rb[j + t];
            if (!eq) continue;
            MatchWitness w;
            w.kind = WitnessKind::common_substring;
            w.pos_a = i;
            w.pos_b = j;
            w.length = m;
            return w;
        }
        return std::nullopt;
    };

    WalkConfig cfg;
    cfg.ground_set_size = a_starts;
    cfg.r = p.r;
    cfg.delta = p.delta;
    cfg.setup_cost = double(p.r);
    cfg.update_cost = 1.0;
    cfg.check_cost =
        1.0 + std::sqrt(double(p.collision_cap)) * std::sqrt(double(m));
    cfg.gamma = 1.0;
    return mnrs_walk<State, MatchWitness>(cfg, sampler, checker, led, rng);
}

MatchWitness nonrep_lcs_exact(const Text& a, const Text& b, QueryLedger& led,
                              RandomStream& rng) {
    size_t n = a.size();
    double thresh = std::sqrt(double(n));
    auto probe = [&](size_t d) -> std::optional<MatchWitness> {
        if (double(d) < thresh)
            return nonrep_walk_decide(a, b, d, std::nullopt, led, rng);
        return decide_large_d(a, b, d, led, rng);
    };
    return search_driver(std::min(n, b.size()), probe, 2);
}

MatchWitness nonrep_lcs_approx(const Text& a, const Text& b, double eps,
                               QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    double thresh = std::pow(double(n), 2.0 / 3.0);
    auto probe = [&](size_t d) -> std::optional<MatchWitness> {
        size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
        std::optional<MatchWitness> w;
        if (double(d) < thresh)
            w = nonrep_walk_decide(a, b, d, eps, led, rng);
        else
            w = decide_large_d(a, b, d, led, rng);
        if (w && w->length >= m) return w;
        return std::nullopt;
    };
    return search_driver(std::min(n, b.size()), probe, 2);
}

} // namespace qs
