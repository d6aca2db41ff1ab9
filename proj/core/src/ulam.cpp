#include "qstring/ulam.hpp"

#include <algorithm>
#include <cmath>

#include "qstring/oracles.hpp"

namespace qs {

IndicatorSource ulam_indicator(const Text& a, const Text& b,
                               const IndicatorParams& params,
                               IndicatorVariant variant) {
    if (!a.non_repetitive || !b.non_repetitive)
        throw std::invalid_argument("ulam indicator requires non-repetitive inputs");
    if (a.size() != b.size())
        throw std::invalid_argument("ulam indicator requires equal lengths");
    if (params.t_prime < 1)
        throw std::invalid_argument("indicator scale t' must be >= 1");
    double n = double(a.size());
    IndicatorSource out;
    out.ud = ulam_oracle(a, b);
    out.precondition_ok = double(params.t_prime) >= params.c * double(out.ud);
    double denom = n + double(params.t_prime);
    double mid = double(out.ud) / denom;
    double p = mid;
    if (variant == IndicatorVariant::low)
        p = (1.0 - params.delta) * mid;
    else if (variant == IndicatorVariant::high)
        p = (1.0 + params.delta) * mid + params.delta / denom;
    p = std::clamp(p, 0.0, 1.0);
    out.src.true_p = p;
    out.src.run_cost =
        std::sqrt(double(params.t_prime)) * clog(double(params.t_prime));
    out.src.sample = [p](RandomStream& rng) { return rng.bernoulli(p) ? 1 : 0; };
    return out;
}

GapVerdict qtest_single(const BernoulliSource& src, double q, double eta,
                        QueryLedger& led, RandomStream& rng) {
    if (!(q > 0.0 && q <= 1.0) || !(eta > 0.0 && eta <= 1.0))
        throw std::invalid_argument("qtest requires q, eta in (0, 1]");
    GapVerdict v;
    v.q = q;
    v.eta = eta;
    v.k = uint64_t(std::ceil(20.0 / (eta * std::sqrt(q))));
    v.p_tilde = estimate_amplitude(src, v.k, led, rng);
    v.large = v.p_tilde >= (1.0 - eta / 2.0) * q;
    return v;
}

GapVerdict qtest(const BernoulliSource& src, double q, double eta, size_t n,
                 QueryLedger& led, RandomStream& rng) {
    uint64_t reps = uint64_t(
        std::max(1.0, std::ceil(std::log2(double(std::max<size_t>(n, 2))))));
    // One k-run batch carries the charge; the majority repetitions are
    // simulation-only.
    GapVerdict first = qtest_single(src, q, eta, led, rng);
    uint64_t large_votes = first.large ? 1 : 0;
    std::vector<double> estimates{first.p_tilde};
    for (uint64_t i = 1; i < reps; i++) {
        GapVerdict v = run_uncharged(led, [&](QueryLedger& scratch) {
            return qtest_single(src, q, eta, scratch, rng);
        });
        if (v.large) large_votes++;
        estimates.push_back(v.p_tilde);
    }
    GapVerdict out = first;
    out.large = 2 * large_votes > reps;
    std::nth_element(estimates.begin(), estimates.begin() + estimates.size() / 2,
                     estimates.end());
    out.p_tilde = estimates[estimates.size() / 2];
    return out;
}

namespace {

// Exact classical computation standing in for the sqrt(n) classical
// algorithm; charged at its model cost, reads counted once per character.
uint64_t classical_exact(const Text& a, const Text& b, QueryLedger& led) {
    double n = double(a.size());
    led.charge("classical_fallback", std::sqrt(n) * clog(n));
    QueryReader ra{&a, &led}, rb{&b, &led};
    for (size_t i = 0; i < a.size(); i++) {
        (void)ra[i];
        (void)rb[i];
    }
    return ulam_oracle(a, b);
}

} // namespace

UlamResult ulam_approx(const Text& a, const Text& b, double eps,
                       QueryLedger& led, RandomStream& rng, double c) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("ulam_approx requires eps in (0, 1]");
    if (!a.non_repetitive || !b.non_repetitive)
        throw std::invalid_argument("ulam_approx requires non-repetitive inputs");
    if (a.size() != b.size())
        throw std::invalid_argument("ulam_approx requires equal lengths");
    size_t n = a.size();
    double nn = double(n);
    UlamResult res;

    // Distance-zero screen: Grover search for any mismatching position.
    QueryReader ra{&a, &led}, rb{&b, &led};
    auto mismatch = grover_find(
        n, [&](size_t i) { return ra[i] != rb[i]; }, 1.0, led, rng, true);
    if (!mismatch) {
        res.value = 0.0;
        res.i_star = 0;
        return res;
    }

    double eta = eps / 3.0, delta = eps / 3.0;
    double scale = (1.0 - eps) * std::sqrt(nn) / c;
    // Large-distance regime (side-channel dispatch): the loop's thresholds
    // top out at scale, so distances at or above it go to the classical path.
    if (double(ulam_oracle(a, b)) >= scale) {
        res.used_fallback = true;
        res.value = double(classical_exact(a, b, led));
        return res;
    }
    int r = int(std::ceil(std::log((1.0 - delta) * (std::sqrt(nn) - 1.0) / nn) /
                          std::log(1.0 - eta)));
    r = std::max(r, 1);
    for (int i = 1; i <= r; i++) {
        double t = std::pow(1.0 - eta, double(i)) * scale;
        double q = t / nn;
        if (!(q > 0.0)) break;
        IndicatorParams params;
        params.delta = delta;
        params.c = c;
        params.t_prime =
            std::max<uint64_t>(1, uint64_t(std::ceil(c / (1.0 - eps) * t)));
        IndicatorSource ind = ulam_indicator(a, b, params);
        if (!ind.precondition_ok) {
            res.breach_event = true;
            res.used_fallback = true;
            res.value = double(classical_exact(a, b, led));
            return res;
        }
        GapVerdict v = qtest(ind.src, q, eta, n, led, rng);
        if (v.large) {
            res.value = t;
            res.i_star = i;
            return res;
        }
    }
    res.error_event = true;
    res.used_fallback = true;
    res.value = double(classical_exact(a, b, led));
    return res;
}

} // namespace qs
