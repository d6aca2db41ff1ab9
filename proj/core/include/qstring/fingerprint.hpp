#pragma once

#include "qstring/text.hpp"

namespace qs {

// Canonical substring key: double-modulus polynomial hash plus the length.
// Equal substrings always have equal keys; unequal ones collide with
// negligible probability, and every reported equality is confirmed by a
// direct comparison before anything depends on it.
struct Fingerprint {
    uint64_t h1 = 0, h2 = 0;
    size_t len = 0;
    bool operator==(const Fingerprint&) const = default;
};

struct FingerprintHash {
    size_t operator()(const Fingerprint& f) const {
        uint64_t z = f.h1 * 0x9e3779b97f4a7c15ULL ^ f.h2 + f.len;
        z ^= z >> 29;
        return static_cast<size_t>(z * 0xbf58476d1ce4e5b9ULL);
    }
};

// Prefix-hash table over a text view; construction reads every character
// once through the reader. window(i, m) is O(1) afterwards.
class WindowHasher {
  public:
    explicit WindowHasher(const QueryReader& reader);
    Fingerprint window(size_t start, size_t len) const;
    size_t size() const { return n_; }

  private:
    size_t n_;
    std::vector<uint64_t> pre1_, pre2_, pw1_, pw2_;
};

// Direct evaluation of the exact key sum s[i]*sigma^i (small inputs only;
// used in tests as the reference definition).
uint64_t direct_key(const std::vector<uint32_t>& s, uint64_t sigma);

} // namespace qs
