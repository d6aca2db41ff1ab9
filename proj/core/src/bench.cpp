#include "qstring/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "qstring/lcs.hpp"
#include "qstring/lps.hpp"
#include "qstring/oracles.hpp"
#include "qstring/ulam.hpp"

namespace qs {

std::string RunRecord::to_json() const {
    nlohmann::json j;
    j["problem"] = problem;
    j["algo"] = algo;
    j["n"] = n;
    if (epsilon)
        j["epsilon"] = *epsilon;
    else
        j["epsilon"] = nullptr;
    j["answer"] = answer;
    j["oracle_answer"] = oracle_answer;
    j["success"] = success;
    j["ledger"] = nlohmann::json::parse(ledger.to_json());
    j["seed"] = seed;
    j["wall_ms"] = wall_ms;
    return j.dump();
}

std::string SlopeFit::to_json() const {
    nlohmann::json j;
    nlohmann::json pts = nlohmann::json::array();
    for (auto& [x, y] : points) pts.push_back({x, y});
    j["points"] = pts;
    j["slope"] = slope;
    j["intercept"] = intercept;
    j["r_squared"] = r_squared;
    j["window"] = window;
    return j.dump();
}

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& x_cost,
                   bool exclude_smallest) {
    SlopeFit f;
    std::vector<std::pair<double, double>> data = x_cost;
    std::sort(data.begin(), data.end());
    if (exclude_smallest && data.size() > 2) data.erase(data.begin());
    for (auto& [x, c] : data)
        f.points.emplace_back(std::log2(std::max(x, 1.0)),
                              std::log2(std::max(c, 1e-12)));
    size_t m = f.points.size();
    if (m >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        for (auto& [x, y] : f.points) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            syy += y * y;
        }
        double dm = double(m);
        double denom = dm * sxx - sx * sx;
        if (std::fabs(denom) > 1e-12) {
            f.slope = (dm * sxy - sx * sy) / denom;
            f.intercept = (sy - f.slope * sx) / dm;
            double ss_tot = syy - sy * sy / dm;
            double ss_res = 0;
            for (auto& [x, y] : f.points) {
                double e = y - (f.slope * x + f.intercept);
                ss_res += e * e;
            }
            f.r_squared = ss_tot > 1e-12 ? std::max(0.0, 1.0 - ss_res / ss_tot)
                                         : 1.0;
        }
    }
    if (!f.points.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "2^%.0f..2^%.0f", f.points.front().first,
                      f.points.back().first);
        f.window = buf;
    }
    return f;
}

std::pair<Text, Text> make_planted_lcs(size_t n, size_t d, uint32_t sigma,
                                       RandomStream& rng) {
    if (d > n) throw std::invalid_argument("planted length exceeds n");
    std::vector<uint32_t> av(n), bv(n);
    for (auto& c : av) c = uint32_t(rng.below(sigma));
    for (auto& c : bv) c = uint32_t(rng.below(sigma));
    size_t i = rng.below(n - d + 1), j = rng.below(n - d + 1);
    for (size_t t = 0; t < d; t++) bv[j + t] = av[i + t];
    return {make_text(std::move(av), sigma, false),
            make_text(std::move(bv), sigma, false)};
}

Text make_planted_palindrome(size_t n, size_t d, uint32_t sigma,
                             RandomStream& rng) {
    if (d > n) throw std::invalid_argument("planted length exceeds n");
    std::vector<uint32_t> v(n);
    for (auto& c : v) c = uint32_t(rng.below(sigma));
    size_t start = rng.below(n - d + 1);
    for (size_t i = 0, j = d - 1; i < j; i++, j--) v[start + j] = v[start + i];
    return make_text(std::move(v), sigma, false);
}

std::pair<Text, Text> make_planted_perm_pair(size_t n, size_t d,
                                             RandomStream& rng) {
    if (d > n) throw std::invalid_argument("planted length exceeds n");
    std::vector<uint32_t> av(n);
    for (size_t i = 0; i < n; i++) av[i] = uint32_t(i);
    for (size_t i = n; i > 1; i--) std::swap(av[i - 1], av[rng.below(i)]);
    size_t i0 = rng.below(n - d + 1);
    std::vector<uint32_t> rest;
    rest.reserve(n - d);
    for (size_t i = 0; i < n; i++)
        if (i < i0 || i >= i0 + d) rest.push_back(av[i]);
    for (size_t i = rest.size(); i > 1; i--)
        std::swap(rest[i - 1], rest[rng.below(i)]);
    size_t j0 = rng.below(rest.size() + 1);
    std::vector<uint32_t> bv(rest.begin(), rest.begin() + j0);
    bv.insert(bv.end(), av.begin() + i0, av.begin() + i0 + d);
    bv.insert(bv.end(), rest.begin() + j0, rest.end());
    return {make_text(std::move(av), uint32_t(n), true),
            make_text(std::move(bv), uint32_t(n), true)};
}

std::pair<Text, Text> make_planted_ulam(size_t n, size_t moves,
                                        RandomStream& rng) {
    Text a = make_identity_perm(n);
    std::vector<uint32_t> bv = a.chars;
    for (size_t m = 0; m < moves; m++) {
        size_t from = rng.below(bv.size());
        uint32_t v = bv[from];
        bv.erase(bv.begin() + from);
        size_t to = rng.below(bv.size() + 1);
        bv.insert(bv.begin() + to, v);
    }
    return {std::move(a), make_text(std::move(bv), uint32_t(n), true)};
}

namespace {

struct TrialOutcome {
    bool success = false;
    QueryLedger led;
};

TrialOutcome run_trial(const std::string& problem, const std::string& algo,
                       size_t x, RandomStream& rng) {
    TrialOutcome out;
    if (problem == "lcs" && algo == "small-d") {
        size_t n = x, d = 16;
        auto [a, b] = make_planted_lcs(n, d, 26, rng);
        auto w = decide_small_d(a, b, d, out.led, rng);
        out.success = w && verify_witness(*w, a, b) && w->length >= d;
    } else if (problem == "lcs" && algo == "large-d") {
        size_t n = x, d = 64;
        auto [a, b] = make_planted_lcs(n, d, 26, rng);
        auto w = decide_large_d(a, b, d, out.led, rng);
        out.success = w && verify_witness(*w, a, b) && w->length >= d;
    } else if (problem == "lcs" && algo == "large-d-dsweep") {
        size_t n = 4096, d = x;
        auto [a, b] = make_planted_lcs(n, d, 26, rng);
        auto w = decide_large_d(a, b, d, out.led, rng);
        out.success = w && verify_witness(*w, a, b) && w->length >= d;
    } else if (problem == "lcs" && algo == "walk-approx") {
        size_t n = x;
        size_t d = size_t(std::ceil(std::sqrt(double(n))));
        double eps = 0.5;
        size_t m = std::max<size_t>(1, size_t(std::ceil((1.0 - eps) * double(d))));
        auto [a, b] = make_planted_perm_pair(n, d, rng);
        auto w = nonrep_walk_decide(a, b, d, eps, out.led, rng);
        out.success = w && verify_witness(*w, a, b) && w->length >= m;
    } else if (problem == "lps" && algo == "quantum") {
        size_t n = x, d = std::max<size_t>(2, n / 4);
        Text a = make_planted_palindrome(n, d, 4, rng);
        auto w = lps_decide(a, d, out.led, rng);
        out.success = w && verify_witness(*w, a) && w->length >= d;
    } else if (problem == "ulam" && algo == "quantum") {
        size_t n = x;
        size_t moves =
            std::max<size_t>(1, size_t(std::sqrt(double(n)) / 4.0));
        double eps = 0.3;
        auto [a, b] = make_planted_ulam(n, moves, rng);
        uint64_t ud = ulam_oracle(a, b);
        UlamResult r = ulam_approx(a, b, eps, out.led, rng);
        out.success = !r.error_event &&
                      r.value >= (1.0 - eps) * double(ud) &&
                      r.value <= (1.0 + eps) * double(ud);
    } else {
        throw std::invalid_argument("unknown bench regime " + problem + "/" + algo);
    }
    return out;
}

} // namespace

BenchResult run_bench(const std::string& problem, const std::string& algo,
                      const std::vector<size_t>& grid, size_t trials,
                      uint64_t seed) {
    BenchResult res;
    std::vector<std::pair<double, double>> fit_pts;
    for (size_t pi = 0; pi < grid.size(); pi++) {
        size_t x = grid[pi];
        double cost_sum = 0, reads_sum = 0;
        size_t ok = 0;
        for (size_t t = 0; t < trials; t++) {
            RandomStream rng(seed, pi * 1000003 + t + 1);
            TrialOutcome o = run_trial(problem, algo, x, rng);
            cost_sum += o.led.charged_cost();
            reads_sum += double(o.led.sim_reads);
            if (o.success) ok++;
        }
        BenchRow row;
        row.problem = problem;
        row.algo = algo;
        if (problem == "lcs" && algo == "large-d-dsweep") {
            row.n = 4096;
            row.d = x;
        } else {
            row.n = x;
            if (problem == "lcs" && algo == "small-d")
                row.d = 16;
            else if (problem == "lcs" && algo == "large-d")
                row.d = 64;
            else if (problem == "lcs" && algo == "walk-approx")
                row.d = size_t(std::ceil(std::sqrt(double(x))));
            else if (problem == "lps")
                row.d = std::max<size_t>(2, x / 4);
            else
                row.d = 0;
        }
        if (algo == "walk-approx")
            row.epsilon = 0.5;
        else if (problem == "ulam")
            row.epsilon = 0.3;
        row.trials = trials;
        row.success_rate = trials ? double(ok) / double(trials) : 0.0;
        row.mean_charged_cost = trials ? cost_sum / double(trials) : 0.0;
        row.mean_sim_reads = trials ? reads_sum / double(trials) : 0.0;
        res.rows.push_back(row);
        fit_pts.emplace_back(double(x), row.mean_charged_cost);
    }
    res.fit = fit_slope(fit_pts, true);
    return res;
}

std::string bench_csv(const BenchResult& r) {
    std::string out =
        "problem,algo,n,d,epsilon,trials,success_rate,mean_charged_cost,"
        "mean_sim_reads,slope_window\n";
    char buf[512];
    for (auto& row : r.rows) {
        char epsbuf[32] = "";
        if (row.epsilon) std::snprintf(epsbuf, sizeof(epsbuf), "%.3f", *row.epsilon);
        std::snprintf(buf, sizeof(buf), "%s,%s,%zu,%zu,%s,%zu,%.4f,%.6f,%.1f,%s\n",
                      row.problem.c_str(), row.algo.c_str(), row.n, row.d, epsbuf,
                      row.trials, row.success_rate, row.mean_charged_cost,
                      row.mean_sim_reads, r.fit.window.c_str());
        out += buf;
    }
    return out;
}

} // namespace qs
