#include "qstring/lps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qstring/periodicity.hpp"

namespace qs {

namespace {

constexpr size_t kCenterCutoff = 8; // c2: direct-test bound on |C|

size_t half_up(size_t d) { return (d + 1) / 2; } // |P| = ceil(d/2)

// Maximal palindrome around a doubled center (2l+len-1 for [l, l+len-1]),
// each arm limited to `limit` expansions. Models a Grover first-mismatch
// search per arm.
std::optional<MatchWitness> test_center(const QueryReader& ra, size_t c2,
                                        size_t d, size_t limit,
                                        QueryLedger& led) {
    size_t n = ra.size();
    led.charge("grover_extend",
               2.0 * std::ceil(std::sqrt(double(limit))) * clog(double(limit)));
    size_t lo, hi;
    if (c2 % 2 == 0) { // odd length, single-character seed
        lo = hi = c2 / 2;
        if (lo >= n) return std::nullopt;
    } else { // even length, adjacent pair seed
        lo = (c2 - 1) / 2;
        hi = lo + 1;
        if (hi >= n || ra[lo] != ra[hi]) return std::nullopt;
    }
    size_t moved = 0;
    while (moved < limit && lo > 0 && hi + 1 < n && ra[lo - 1] == ra[hi + 1]) {
        lo--;
        hi++;
        moved++;
    }
    size_t len = hi - lo + 1;
    if (len < d) return std::nullopt;
    MatchWitness w;
    w.kind = WitnessKind::palindrome;
    w.pos_a = lo;
    w.length = len;
    return w;
}

// Direct palindromicity scan used to confirm arithmetically-constructed
// intervals before they are returned as witnesses.
bool confirm_palindrome(const QueryReader& ra, size_t lo, size_t len,
                        QueryLedger& led) {
    if (len == 0 || lo + len > ra.size()) return false;
    led.charge("grover_extend",
               std::ceil(std::sqrt(double(len))) * clog(double(len)));
    for (size_t i = 0, j = len - 1; i < j; i++, j--)
        if (ra[lo + i] != ra[lo + j]) return false;
    return true;
}

} // namespace

OccurrenceSet occurrence_set(const Text& a, size_t r, size_t d,
                             QueryLedger& led, RandomStream& rng) {
    OccurrenceSet occ;
    size_t n = a.size();
    size_t plen = half_up(d);
    if (d == 0 || r + d > n) return occ;
    QueryReader ra{&a, &led};
    auto stext = [&ra, r](size_t i) { return ra[r + i]; };
    auto pat = [&ra, r, plen](size_t i) { return ra[r + plen - 1 - i]; };

    auto o_r = pattern_match(stext, d, pat, plen, Side::rightmost, led, rng);
    if (!o_r) return occ;
    std::optional<size_t> o;
    if (*o_r >= 1) {
        // Second-rightmost: rightmost within the prefix that can host a start
        // strictly left of o_r.
        o = pattern_match(stext, *o_r + plen - 1, pat, plen, Side::rightmost,
                          led, rng);
    }
    if (!o) {
        occ.members.push_back(*o_r);
        return occ;
    }
    occ.q = *o_r - *o;
    if (occ.q >= plen) { // non-overlapping special case: exactly two members
        occ.members = {*o, *o_r};
        return occ;
    }
    // Overlapping occurrences: S[o, o_r+|P|-1] is q-periodic; members are the
    // arithmetic progression down from o_r, truncated to the maximal periodic
    // run so every member is a genuine occurrence.
    Interval run = extend_periodic(ra, {r + *o, r + *o_r + plen - 1}, occ.q,
                                   2 * d);
    size_t run_lo = run.x < r ? 0 : run.x - r;
    for (size_t e = *o_r;; e -= occ.q) {
        if (e >= run_lo) occ.members.push_back(e);
        if (e < occ.q) break;
    }
    std::reverse(occ.members.begin(), occ.members.end());
    return occ;
}

std::vector<size_t> candidate_centers(size_t r, size_t d,
                                      const OccurrenceSet& occ) {
    // Doubled 0-based centers: occurrence e pins the solution center at
    // 2r + e + |P| - 1.
    size_t plen = half_up(d);
    std::vector<size_t> c;
    c.reserve(occ.members.size());
    for (size_t e : occ.members) c.push_back(2 * r + e + plen - 1);
    return c;
}

std::optional<MatchWitness> check_marked(const Text& a, size_t r, size_t d,
                                         QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    if (d == 0 || r + d > n) return std::nullopt;
    size_t plen = half_up(d);
    QueryReader ra{&a, &led};

    OccurrenceSet occ = occurrence_set(a, r, d, led, rng);
    if (occ.members.empty()) return std::nullopt;
    std::vector<size_t> centers = candidate_centers(r, d, occ);

    if (centers.size() <= kCenterCutoff) {
        for (size_t c2 : centers)
            if (auto w = test_center(ra, c2, d, d, led)) return w;
        return std::nullopt;
    }

    // Many candidates: occurrences overlap with period alpha = q, and the
    // periodic run around r confines the solution.
    size_t alpha = occ.q;
    size_t o_r = occ.members.back();
    Interval run = extend_periodic(
        ra, {r + occ.members.front(), r + o_r + plen - 1}, alpha, 2 * d);
    size_t x = run.x, y = run.y;
    size_t run_len = y - x + 1;

    if (run_len >= d + alpha && x <= r) {
        // Shift construction: the anchor palindrome [r, r+o_r+|P|-1] slides by
        // multiples of alpha inside the run until its slacks balance, then
        // both ends extend by the smaller slack.
        int64_t pal_lo = int64_t(r), pal_hi = int64_t(r + o_r + plen - 1);
        if (pal_hi <= int64_t(y)) {
            int64_t ls = pal_lo - int64_t(x);
            int64_t rs = int64_t(y) - pal_hi;
            int64_t ia = int64_t(alpha);
            int64_t t = std::llround(double(rs - ls) / (2.0 * double(ia)));
            t = std::max(t, -(ls / ia));
            t = std::min(t, rs / ia);
            int64_t ext = std::min(ls + t * ia, rs - t * ia);
            if (ext >= 0) {
                size_t lo = size_t(pal_lo + t * ia - ext);
                size_t len = size_t(pal_hi - pal_lo + 1 + 2 * ext);
                if (len >= d && confirm_palindrome(ra, lo, len, led)) {
                    MatchWitness w;
                    w.kind = WitnessKind::palindrome;
                    w.pos_a = lo;
                    w.length = len;
                    return w;
                }
            }
        }
    }

    // Few effective candidates: the solution center lies within 2*alpha of
    // the run midpoint, so only centers in that window (plus the nearest one
    // on each side) need testing.
    size_t mid2 = x + y; // doubled midpoint
    size_t window = 4 * alpha;
    std::optional<size_t> below, above;
    for (size_t c2 : centers) {
        size_t dist = c2 > mid2 ? c2 - mid2 : mid2 - c2;
        if (dist <= window) {
            if (auto w = test_center(ra, c2, d, d, led)) return w;
        } else if (c2 < mid2) {
            below = c2; // centers are ascending; keep the last one below
        } else if (!above) {
            above = c2;
        }
    }
    if (below)
        if (auto w = test_center(ra, *below, d, d, led)) return w;
    if (above)
        if (auto w = test_center(ra, *above, d, d, led)) return w;
    return std::nullopt;
}

std::optional<MatchWitness> lps_decide(const Text& a, size_t d,
                                       QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    if (d == 0 || d > n) return std::nullopt;
    size_t positions = n - d + 1;
    size_t m_thr = std::max<size_t>(1, d / 2);
    std::optional<MatchWitness> found;
    auto pred = [&](size_t r) {
        // check_marked's own primitives are covered by the threshold charge
        // (through T); only its simulation reads count.
        auto w = run_uncharged(led, [&](QueryLedger& scratch) {
            return check_marked(a, r, d, scratch, rng);
        });
        if (w) found = w;
        return bool(w);
    };
    double T = std::sqrt(double(d));
    bool ok = grover_threshold(positions, m_thr, pred, T, led, rng);
    return ok ? found : std::nullopt;
}

MatchWitness lps(const Text& a, QueryLedger& led, RandomStream& rng) {
    size_t n = a.size();
    constexpr int retries = 2;
    // Every single character is a palindrome.
    MatchWitness best;
    best.kind = WitnessKind::palindrome;
    best.pos_a = 0;
    best.length = 1;
    // Probe both parities: a solution longer than d guarantees a palindrome
    // of length d or d+1 even if none of length exactly d exists.
    auto probe = [&](size_t d) -> std::optional<MatchWitness> {
        for (int t = 0; t < retries; t++) {
            if (auto w = lps_decide(a, d, led, rng))
                if (w->length >= d) return w;
            if (d + 1 <= n)
                if (auto w = lps_decide(a, d + 1, led, rng))
                    if (w->length >= d) return w;
        }
        return std::nullopt;
    };
    size_t lo = 2, hi = n;
    size_t confirmed = 1;
    while (lo <= hi) {
        size_t mid = lo + (hi - lo) / 2;
        if (auto w = probe(mid)) {
            if (w->length > best.length) best = *w;
            confirmed = std::max(confirmed, mid);
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    size_t next = confirmed + 1;
    while (next <= n) { // boundary re-probe against one-sided probe misses
        if (auto w = probe(next)) {
            if (w->length > best.length) best = *w;
            next++;
        } else {
            break;
        }
    }
    return best;
}

} // namespace qs
