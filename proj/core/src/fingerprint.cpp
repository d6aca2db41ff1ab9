#include "qstring/fingerprint.hpp"

namespace qs {

namespace {
constexpr uint64_t M1 = 1000000007ULL, M2 = 998244353ULL;
constexpr uint64_t B1 = 1315423917ULL % M1, B2 = 911382323ULL % M2;
} // namespace

WindowHasher::WindowHasher(const QueryReader& reader) : n_(reader.size()) {
    pre1_.resize(n_ + 1, 0);
    pre2_.resize(n_ + 1, 0);
    pw1_.resize(n_ + 1, 1);
    pw2_.resize(n_ + 1, 1);
    for (size_t i = 0; i < n_; i++) {
        uint64_t c = reader[i] + 1ULL;
        pre1_[i + 1] = (pre1_[i] * B1 + c) % M1;
        pre2_[i + 1] = (pre2_[i] * B2 + c) % M2;
        pw1_[i + 1] = (pw1_[i] * B1) % M1;
        pw2_[i + 1] = (pw2_[i] * B2) % M2;
    }
}

Fingerprint WindowHasher::window(size_t start, size_t len) const {
    Fingerprint f;
    f.len = len;
    f.h1 = (pre1_[start + len] + (M1 - pre1_[start] * pw1_[len] % M1)) % M1;
    f.h2 = (pre2_[start + len] + (M2 - pre2_[start] * pw2_[len] % M2)) % M2;
    return f;
}

uint64_t direct_key(const std::vector<uint32_t>& s, uint64_t sigma) {
    uint64_t v = 0, p = 1;
    for (uint32_t c : s) {
        v += c * p;
        p *= sigma;
    }
    return v;
}

} // namespace qs
