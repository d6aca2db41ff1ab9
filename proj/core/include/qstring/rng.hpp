#pragma once

#include <cstdint>
#include <random>

namespace qs {

// A run owns one stream; parallel trials derive disjoint streams from the
// master seed so aggregation is order-independent and reproducible.
class RandomStream {
  public:
    explicit RandomStream(uint64_t seed) : eng_(mix(seed)) {}
    RandomStream(uint64_t master, uint64_t stream_index)
        : eng_(mix(mix(master) ^ (stream_index * 0x9e3779b97f4a7c15ULL))) {}

    std::mt19937_64& engine() { return eng_; }

    uint64_t next_u64() { return eng_(); }
    // Uniform in [0, n).
    uint64_t below(uint64_t n) {
        return std::uniform_int_distribution<uint64_t>(0, n - 1)(eng_);
    }
    double uniform01() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
    }
    bool bernoulli(double p) {
        return uniform01() < p;
    }

  private:
    static uint64_t mix(uint64_t z) { // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::mt19937_64 eng_;
};

} // namespace qs
