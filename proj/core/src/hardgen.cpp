#include "qstring/hardgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "qstring/oracles.hpp"

namespace qs {

namespace {

void shuffle_in_place(std::vector<uint32_t>& v, RandomStream& rng) {
    for (size_t i = v.size(); i > 1; i--)
        std::swap(v[i - 1], v[rng.below(i)]);
}

} // namespace

HardInstance gen_ed_to_lcs(size_t n, bool collide, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_ed_to_lcs requires n >= 2");
    RandomStream rng(seed);
    HardInstance inst;
    inst.generator = "ed-lcs";
    inst.params = {{"n", n}, {"collide", collide}};
    inst.seed = seed;
    inst.regime = collide ? "one-collision" : "distinct";
    uint32_t sigma = uint32_t(2 * n);
    std::vector<uint32_t> pool(2 * n);
    for (;;) {
        uint32_t dup = 0;
        if (!collide) {
            for (size_t i = 0; i < 2 * n; i++) pool[i] = uint32_t(i);
        } else {
            // 2n-1 distinct values, one of them twice.
            dup = uint32_t(rng.below(2 * n - 1));
            for (size_t i = 0; i < 2 * n - 1; i++) pool[i] = uint32_t(i);
            pool[2 * n - 1] = dup;
        }
        shuffle_in_place(pool, rng);
        if (collide) {
            // The duplicate must straddle the halves; resample otherwise.
            size_t first = 2 * n, second = 2 * n;
            for (size_t i = 0; i < 2 * n; i++)
                if (pool[i] == dup) (first == 2 * n ? first : second) = i;
            if (!(first < n && second >= n)) {
                inst.resamples++;
                continue;
            }
        }
        std::vector<uint32_t> av(pool.begin(), pool.begin() + n);
        std::vector<uint32_t> bv(pool.begin() + n, pool.end());
        inst.texts = {make_text(av, sigma, true), make_text(bv, sigma, true)};
        break;
    }
    inst.planted_answer = collide ? 1 : 0;
    if (lcs_oracle(inst.texts[0], inst.texts[1]).length != inst.planted_answer)
        throw std::logic_error("ed-lcs certification failed");
    return inst;
}

HardInstance gen_binary_lcs(size_t n, double c, bool collide, uint64_t seed,
                            uint64_t d_alpha) {
    if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("gen_binary_lcs requires c in (0, 1]");
    HardInstance base = gen_ed_to_lcs(n, collide, seed);
    RandomStream rng(seed, 1);
    HardInstance inst;
    inst.generator = "bin-lcs";
    inst.params = {{"n", n}, {"c", c}, {"collide", collide}, {"d_alpha", d_alpha}};
    inst.seed = seed;
    inst.regime = collide ? "one-collision" : "distinct";
    double alpha = c / 3.0;
    size_t s = size_t(
        std::ceil(double(d_alpha) * std::log2(double(std::max<size_t>(n, 2)))));
    uint32_t sigma = uint32_t(2 * n);

    auto encode = [&](const Text& t,
                      const std::vector<std::vector<uint32_t>>& code) {
        std::vector<uint32_t> out;
        out.reserve(t.size() * s);
        for (uint32_t ch : t.chars)
            out.insert(out.end(), code[ch].begin(), code[ch].end());
        return make_text(out, 2, false);
    };

    for (;;) {
        std::vector<std::vector<uint32_t>> code(sigma);
        for (auto& w : code) {
            w.resize(s);
            for (auto& bit : w) bit = rng.below(2) ? 1 : 0;
        }
        // Pairwise codeword gap: common substring of distinct codewords must
        // stay below alpha*s, i.e. no window of length floor(alpha*s)+1 may
        // appear in two distinct codewords.
        bool ok = true;
        size_t wlen = size_t(std::floor(alpha * double(s))) + 1;
        if (wlen <= s) {
            std::unordered_map<std::string, uint32_t> windows;
            windows.reserve(sigma * s * 2);
            for (uint32_t ch = 0; ch < sigma && ok; ch++) {
                for (size_t i = 0; i + wlen <= s && ok; i++) {
                    std::string key(wlen, '0');
                    for (size_t t = 0; t < wlen; t++)
                        key[t] = char('0' + code[ch][i + t]);
                    auto [it, fresh] = windows.try_emplace(key, ch);
                    if (!fresh && it->second != ch) ok = false;
                }
            }
        }
        if (!ok) {
            inst.resamples++;
            continue;
        }
        Text ea = encode(base.texts[0], code);
        Text eb = encode(base.texts[1], code);
        size_t full = lcs_oracle(ea, eb).length;
        bool gap = collide ? double(full) >= double(s)
                           : double(full) < c * double(s);
        if (!gap) {
            inst.resamples++;
            continue;
        }
        inst.texts = {std::move(ea), std::move(eb)};
        inst.planted_answer = full;
        break;
    }
    return inst;
}

HardInstance gen_lps_hard(size_t m, double c, uint64_t seed, bool weight_one) {
    if (m < 3) throw std::invalid_argument("gen_lps_hard requires m >= 3");
    if (!(c > 0.0 && c <= 1.0))
        throw std::invalid_argument("gen_lps_hard requires c in (0, 1]");
    RandomStream rng(seed);
    size_t k = size_t(std::ceil(3.0 / c));
    size_t n = k * k * m;
    std::vector<uint32_t> x(m, 0);
    if (weight_one) x[1 + rng.below(m - 2)] = 1; // interior position
    std::vector<uint32_t> av;
    av.reserve(n);
    for (size_t i = 1; i <= k; i++) { // block x^i: 0 -> 0^k, 1 -> 1^i 0^(k-i)
        for (uint32_t bit : x) {
            if (bit == 0) {
                av.insert(av.end(), k, 0u);
            } else {
                av.insert(av.end(), i, 1u);
                av.insert(av.end(), k - i, 0u);
            }
        }
    }
    HardInstance inst;
    inst.generator = "lps-hard";
    inst.params = {{"m", m}, {"c", c}, {"weight_one", weight_one}};
    inst.seed = seed;
    inst.regime = weight_one ? "weight-one" : "all-zero";
    inst.texts = {make_text(std::move(av), 2, false)};
    size_t oracle = lps_oracle(inst.texts[0]).length;
    if (weight_one) {
        if (!(double(oracle) < c * double(n)))
            throw std::logic_error("lps-hard gap certification failed");
        inst.planted_answer = oracle;
    } else {
        if (oracle != n) throw std::logic_error("lps-hard all-zero certification failed");
        inst.planted_answer = n;
    }
    return inst;
}

HardInstance gen_ulam_swap(size_t n, size_t ell, uint64_t seed) {
    if (n < 2 || ell > n - 1)
        throw std::invalid_argument("gen_ulam_swap requires n >= 2, 0 <= ell <= n-1");
    HardInstance inst;
    inst.generator = "ulam-swap";
    inst.params = {{"n", n}, {"ell", ell}};
    inst.seed = seed;
    inst.regime = ell == 0 ? "identical" : "swap";
    Text a = make_identity_perm(n);
    Text b = a;
    if (ell >= 1) std::swap(b.chars[ell - 1], b.chars[ell]);
    inst.planted_answer = ell == 0 ? 0 : 2;
    if (ulam_oracle(a, b) != inst.planted_answer)
        throw std::logic_error("ulam-swap certification failed");
    inst.texts = {std::move(a), std::move(b)};
    return inst;
}

} // namespace qs
