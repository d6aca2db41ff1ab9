#pragma once

#include "qstring/qsim.hpp"

namespace qs {

// Parameters of the distance-indicator contract: a Bernoulli source whose
// success probability tracks ud/(n+t') within quality delta, valid whenever
// t' >= c * ud.
struct IndicatorParams {
    double delta = 0.1;
    uint64_t t_prime = 1;
    double c = 1.0; // contract constant, configurable
};

// Surrogate realizations: the midpoint of the contract interval, or either
// endpoint (adversarial robustness variants).
enum class IndicatorVariant { midpoint, low, high };

struct IndicatorSource {
    BernoulliSource src;
    uint64_t ud = 0;             // exact distance (simulation side-channel)
    bool precondition_ok = true; // t' >= c * ud
};

// Builds the indicator for equal-length non-repetitive inputs. Each sample
// costs sqrt(t')*clog(t') charged units. A t' < c*ud violation is reported
// through precondition_ok, never silently accepted.
IndicatorSource ulam_indicator(const Text& a, const Text& b,
                               const IndicatorParams& params,
                               IndicatorVariant variant = IndicatorVariant::midpoint);

struct GapVerdict {
    bool large = false; // LARGE <=> p_tilde >= (1 - eta/2) q
    double p_tilde = 0.0;
    double q = 0.0, eta = 0.0;
    uint64_t k = 0;
};

// One amplitude-estimation shot with k = ceil(20/(eta*sqrt(q))), thresholded
// at (1 - eta/2)q. Correct verdict probability >= 8/pi^2 at each gap boundary.
GapVerdict qtest_single(const BernoulliSource& src, double q, double eta,
                        QueryLedger& led, RandomStream& rng);

// Majority vote over ceil(log2 n) shots; one batch of k runs is charged, the
// repetitions count simulation reads only.
GapVerdict qtest(const BernoulliSource& src, double q, double eta, size_t n,
                 QueryLedger& led, RandomStream& rng);

struct UlamResult {
    double value = 0.0;
    bool used_fallback = false; // exact classical computation was used
    bool error_event = false;   // the loop exhausted all iterations
    bool breach_event = false;  // an indicator precondition violation
    int i_star = 0;             // accepting iteration (0 = none)
};

// The geometric-threshold driver: eta = delta = eps/3, iterations i = 1..r
// with t = (1-eta)^i (1-eps) sqrt(n) / c and q = t/n, returning t on the
// first LARGE. Distance zero is caught by a Grover equality check; the
// large-distance regime, loop exhaustion, and precondition breaches fall
// back to the exact classical value.
UlamResult ulam_approx(const Text& a, const Text& b, double eps,
                       QueryLedger& led, RandomStream& rng, double c = 1.0);

} // namespace qs
