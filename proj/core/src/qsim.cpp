#include "qstring/qsim.hpp"

#include <unordered_map>

namespace qs {

namespace {
SimMode g_mode = SimMode::ideal;
} // namespace

SimMode sim_mode() { return g_mode; }
void set_sim_mode(SimMode m) { g_mode = m; }

std::optional<size_t> grover_find(size_t n,
                                  const std::function<bool(size_t)>& pred,
                                  double T, QueryLedger& led, RandomStream& rng,
                                  bool strict) {
    std::vector<size_t> marked;
    for (size_t i = 0; i < n; i++)
        if (pred(i)) marked.push_back(i);
    double m = strict ? 1.0 : double(std::max<size_t>(1, marked.size()));
    led.charge("grover_find",
               std::ceil(std::sqrt(double(n) / m)) * T * clog(double(n)));
    if (marked.empty()) return std::nullopt;
    if (g_mode == SimMode::noisy && rng.bernoulli(0.1)) return std::nullopt;
    return marked[rng.below(marked.size())];
}

bool grover_threshold(size_t n, size_t m_threshold,
                      const std::function<bool(size_t)>& pred, double T,
                      QueryLedger& led, RandomStream& rng,
                      std::optional<size_t>* found) {
    led.charge("grover_threshold",
               std::ceil(std::sqrt(double(n) / double(m_threshold))) * T *
                   clog(double(n)));
    // Random probing: ~10*n/m_threshold draws miss an m >= m_threshold
    // marked set with probability below e^-10.
    uint64_t draws = static_cast<uint64_t>(
        std::ceil(10.0 * double(n) / double(m_threshold)));
    if (g_mode == SimMode::noisy && rng.bernoulli(0.1)) draws = 0;
    for (uint64_t t = 0; t < draws; t++) {
        size_t i = rng.below(n);
        if (pred(i)) {
            if (found) *found = i;
            return true;
        }
    }
    return false;
}

std::optional<size_t> pattern_match(const std::function<uint32_t(size_t)>& text,
                                    size_t m,
                                    const std::function<uint32_t(size_t)>& pattern,
                                    size_t p, Side side, QueryLedger& led,
                                    RandomStream& rng) {
    led.charge("pattern_match",
               (std::sqrt(double(m)) + std::sqrt(double(p))) * clog(double(m + p)));
    if (p > m || p == 0) return std::nullopt;
    // Z-algorithm over pattern # text.
    std::vector<int64_t> s;
    s.reserve(p + 1 + m);
    for (size_t i = 0; i < p; i++) s.push_back(pattern(i));
    s.push_back(-1);
    for (size_t i = 0; i < m; i++) s.push_back(text(i));
    size_t len = s.size();
    std::vector<size_t> z(len, 0);
    size_t l = 0, r = 0;
    for (size_t i = 1; i < len; i++) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < len && s[z[i]] == s[i + z[i]]) z[i]++;
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    std::optional<size_t> hit;
    for (size_t i = 0; i < m - p + 1; i++) {
        if (z[p + 1 + i] >= p) {
            hit = i;
            if (side == Side::leftmost) break;
        }
    }
    if (hit && g_mode == SimMode::noisy && rng.bernoulli(0.1)) return std::nullopt;
    return hit;
}

AmplitudeLaw::AmplitudeLaw(double p, uint64_t k) : k_(k) {
    if (k == 0) throw std::invalid_argument("amplitude estimation requires k >= 1");
    p = std::clamp(p, 0.0, 1.0);
    double theta = std::asin(std::sqrt(p)) / M_PI;
    auto kernel = [&](double d) {
        double s = std::sin(M_PI * d);
        if (std::fabs(s) < 1e-12) return 1.0;
        double t = std::sin(double(k_) * M_PI * d) / (double(k_) * s);
        return t * t;
    };
    weights_.resize(k_);
    double acc = 0;
    for (uint64_t y = 0; y < k_; y++) {
        double x = double(y) / double(k_);
        acc += 0.5 * (kernel(std::fabs(x - theta)) + kernel(std::fabs(x - (1.0 - theta))));
        weights_[y] = acc;
    }
    raw_mass_ = acc;
    for (auto& w : weights_) w /= acc;
}

double AmplitudeLaw::estimate_of(uint64_t y) const {
    double s = std::sin(M_PI * double(y) / double(k_));
    return s * s;
}

double AmplitudeLaw::sample(RandomStream& rng) const {
    double u = rng.uniform01();
    size_t lo = 0, hi = k_ - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (weights_[mid] < u)
            lo = mid + 1;
        else
            hi = mid;
    }
    return estimate_of(lo);
}

double estimate_amplitude(const BernoulliSource& src, uint64_t k,
                          QueryLedger& led, RandomStream& rng) {
    if (!src.true_p)
        throw std::invalid_argument("estimate_amplitude needs the true_p side-channel");
    led.charge("estimate_amplitude", double(k) * src.run_cost);
    AmplitudeLaw law(*src.true_p, k);
    return law.sample(rng);
}

std::optional<std::pair<size_t, size_t>> claw_find(
    const std::vector<Fingerprint>& list_a, const std::vector<Fingerprint>& list_b,
    const std::function<bool(size_t, size_t)>& eq, double T, QueryLedger& led,
    RandomStream& rng) {
    double n = double(std::max(list_a.size(), list_b.size()));
    led.charge("claw_find", std::pow(n, 2.0 / 3.0) * T * clog(n));
    std::unordered_multimap<Fingerprint, size_t, FingerprintHash> index;
    index.reserve(list_b.size() * 2);
    for (size_t j = 0; j < list_b.size(); j++) index.emplace(list_b[j], j);
    for (size_t i = 0; i < list_a.size(); i++) {
        auto [lo, hi] = index.equal_range(list_a[i]);
        for (auto it = lo; it != hi; ++it) {
            if (eq(i, it->second)) {
                if (g_mode == SimMode::noisy && rng.bernoulli(0.1)) return std::nullopt;
                return std::make_pair(i, it->second);
            }
        }
    }
    return std::nullopt;
}

} // namespace qs
