#pragma once

#include <cmath>
#include <functional>
#include <optional>

#include "qstring/fingerprint.hpp"
#include "qstring/ledger.hpp"
#include "qstring/rng.hpp"
#include "qstring/text.hpp"

namespace qs {

// Global simulator switch. Ideal mode: every primitive honors its contract
// deterministically wherever possible. Noisy mode: primitives additionally
// fail with probability 1/10 at the contract floor.
enum class SimMode { ideal, noisy };
SimMode sim_mode();
void set_sim_mode(SimMode m);

// The fixed log convention: every primitive multiplies its charge by
// ceil(log2(relevant size)), floored at 1.
inline double clog(double x) { return std::max(1.0, std::ceil(std::log2(std::max(x, 2.0)))); }

// Runs fn against a scratch ledger and merges only sim_reads back into led.
// Used when a predicate handed to a primitive contains its own primitives:
// the outer call charges the predicate's cost through its T parameter, so
// inner charges must not double-count.
template <typename F>
auto run_uncharged(QueryLedger& led, F&& fn) {
    QueryLedger scratch;
    if constexpr (std::is_void_v<decltype(fn(scratch))>) {
        fn(scratch);
        led.sim_reads += scratch.sim_reads;
    } else {
        auto r = fn(scratch);
        led.sim_reads += scratch.sim_reads;
        return r;
    }
}

// --- Search primitives -----------------------------------------------------

// Finds a uniformly random index with pred(i) true, or nullopt if none.
// Charges ceil(sqrt(n/max(1,m)))*T*clog(n) with m the actual marked count
// (strict=true charges ceil(sqrt(n))*T*clog(n) instead). The simulation
// evaluates the predicate classically; those reads hit sim_reads only.
std::optional<size_t> grover_find(size_t n,
                                  const std::function<bool(size_t)>& pred,
                                  double T, QueryLedger& led, RandomStream& rng,
                                  bool strict = false);

// True if a marked index is found within the charged budget; never true when
// nothing is marked. When m >= m_threshold the hit probability is >= 9/10.
// Charges ceil(sqrt(n/m_threshold))*T*clog(n). The simulation samples about
// 10*n/m_threshold random indices instead of scanning, so the classical work
// stays proportional to the quantum budget. `found` receives a hit index.
bool grover_threshold(size_t n, size_t m_threshold,
                      const std::function<bool(size_t)>& pred, double T,
                      QueryLedger& led, RandomStream& rng,
                      std::optional<size_t>* found = nullptr);

// Leftmost/rightmost occurrence of a pattern, or nullopt. Linear-time
// matcher inside; charges (sqrt(m)+sqrt(p))*clog(m+p).
enum class Side { leftmost, rightmost };
std::optional<size_t> pattern_match(const std::function<uint32_t(size_t)>& text,
                                    size_t m,
                                    const std::function<uint32_t(size_t)>& pattern,
                                    size_t p, Side side, QueryLedger& led,
                                    RandomStream& rng);

// Amplitude amplification of a one-sided randomized procedure. Runs proc up
// to ceil(10/p_lower) times; charges ceil(1/sqrt(p_lower))*T*clog(1/p_lower).
template <typename W>
std::optional<W> amplify(const std::function<std::optional<W>()>& proc,
                         double p_lower, double T, QueryLedger& led,
                         RandomStream& rng) {
    led.charge("amplify",
               std::ceil(1.0 / std::sqrt(p_lower)) * T * clog(1.0 / p_lower));
    uint64_t attempts = static_cast<uint64_t>(std::ceil(10.0 / p_lower));
    for (uint64_t i = 0; i < attempts; i++) {
        auto w = proc();
        if (w) {
            if (sim_mode() == SimMode::noisy && rng.bernoulli(0.1)) return std::nullopt;
            return w;
        }
    }
    return std::nullopt;
}

// --- Amplitude estimation --------------------------------------------------

struct BernoulliSource {
    std::function<int(RandomStream&)> sample; // 0/1 draw
    double run_cost = 1.0;                    // charged units per invocation
    std::optional<double> true_p;             // simulation side-channel
};

// Exact k-point phase-estimation outcome law for success probability p:
// with theta = arcsin(sqrt(p))/pi, outcome y in {0..k-1} has probability
// (F(|y/k - theta|) + F(|y/k - (1-theta)|)) / 2 where F is the Fejer-type
// kernel sin^2(k pi d) / (k^2 sin^2(pi d)); the estimate is sin^2(pi y/k).
class AmplitudeLaw {
  public:
    AmplitudeLaw(double p, uint64_t k);
    double sample(RandomStream& rng) const; // returns p-tilde
    double raw_mass() const { return raw_mass_; } // pre-normalization total
    const std::vector<double>& weights() const { return weights_; }
    double estimate_of(uint64_t y) const;

  private:
    uint64_t k_;
    double raw_mass_;
    std::vector<double> weights_; // cumulative, normalized
};

// One amplitude-estimation call; requires src.true_p. Charges k*src.run_cost.
double estimate_amplitude(const BernoulliSource& src, uint64_t k,
                          QueryLedger& led, RandomStream& rng);

// --- Claw finding ----------------------------------------------------------

// A cross-list pair with equal canonical keys, confirmed by eq, or nullopt.
// Hash join inside; charges n^(2/3)*T*clog(n), n = max list size.
std::optional<std::pair<size_t, size_t>> claw_find(
    const std::vector<Fingerprint>& list_a, const std::vector<Fingerprint>& list_b,
    const std::function<bool(size_t, size_t)>& eq, double T, QueryLedger& led,
    RandomStream& rng);

// --- MNRS walk -------------------------------------------------------------

struct WalkConfig {
    size_t ground_set_size = 0; // |S|
    size_t r = 0;               // subset size
    double delta = 1.0;         // marked-fraction lower bound
    double setup_cost = 0.0;    // s(r)
    double update_cost = 0.0;   // u(r)
    double check_cost = 0.0;    // c(r)
    double gamma = 1.0;         // failure exponent
};

// Simulated walk over pairs of r-subsets (the sampler produces states, the
// checker recognizes marked ones). Draws up to ceil(gamma*ln|S|/delta)
// states; charges s(r) + sqrt(1/delta)*(sqrt(r)*u(r) + c(r)) once.
template <typename State, typename W>
std::optional<W> mnrs_walk(const WalkConfig& cfg,
                           const std::function<State(RandomStream&)>& sampler,
                           const std::function<std::optional<W>(const State&)>& checker,
                           QueryLedger& led, RandomStream& rng) {
    led.charge("mnrs_walk",
               cfg.setup_cost + std::sqrt(1.0 / cfg.delta) *
                                    (std::sqrt(double(cfg.r)) * cfg.update_cost +
                                     cfg.check_cost));
    double n = std::max<double>(2.0, double(cfg.ground_set_size));
    uint64_t draws = static_cast<uint64_t>(
        std::ceil(cfg.gamma * std::log(n) / cfg.delta));
    for (uint64_t i = 0; i < draws; i++) {
        State st = sampler(rng);
        auto w = checker(st);
        if (w) return w;
    }
    return std::nullopt;
}

} // namespace qs
