// Command-line front end: lcs / lps / ulam solvers, hard-instance generation,
// and the benchmark harness. Exit codes: 0 success, 2 contract violation,
// 3 input error, 4 simulator-mode violation.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstring/bench.hpp"
#include "qstring/hardgen.hpp"
#include "qstring/io.hpp"
#include "qstring/lcs.hpp"
#include "qstring/lps.hpp"
#include "qstring/oracles.hpp"
#include "qstring/ulam.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContract = 2;
constexpr int kExitInput = 3;
constexpr int kExitSimMode = 4;

int fail(int code, const std::string& message) {
    json j;
    j["error"] = message;
    j["exit_code"] = code;
    std::cout << j.dump() << std::endl;
    return code;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("QSTRING_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 12345;
}

qs::Text load_one(const std::string& path) {
    auto texts = qs::load_texts(path);
    if (texts.empty()) throw std::invalid_argument("no strings in " + path);
    return texts.front();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const qs::RunRecord& rec) { std::cout << rec.to_json() << std::endl; }

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad --params entry: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::vector<size_t> parse_grid(const std::string& s) {
    std::vector<size_t> grid;
    auto dots = s.find("..");
    auto parse_val = [](const std::string& v) -> size_t {
        auto caret = v.find('^');
        if (caret != std::string::npos) {
            size_t base = std::stoull(v.substr(0, caret));
            size_t exp = std::stoull(v.substr(caret + 1));
            size_t r = 1;
            for (size_t i = 0; i < exp; i++) r *= base;
            return r;
        }
        return std::stoull(v);
    };
    if (dots != std::string::npos) {
        size_t lo = parse_val(s.substr(0, dots));
        size_t hi = parse_val(s.substr(dots + 2));
        for (size_t v = lo; v <= hi; v *= 2) grid.push_back(v);
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) grid.push_back(parse_val(item));
    }
    if (grid.empty()) throw std::invalid_argument("empty --n-grid");
    return grid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sublinear string algorithms with charged-cost simulation"};
    app.require_subcommand(1);

    uint64_t seed = default_seed();
    bool check = true;
    app.add_option("--seed", seed, "master RNG seed (env QSTRING_SEED)");
    app.add_flag("!--no-check", check, "skip the oracle cross-check");

    // lcs
    auto* lcs_cmd = app.add_subcommand("lcs", "longest common substring");
    std::string lcs_algo = "exact";
    double lcs_eps = 0.1;
    std::string file_a, file_b;
    lcs_cmd->add_option("--algo", lcs_algo)
        ->check(CLI::IsMember({"exact", "approx", "nonrep-exact", "nonrep-approx"}));
    lcs_cmd->add_option("--epsilon", lcs_eps);
    lcs_cmd->add_option("file_a", file_a)->required();
    lcs_cmd->add_option("file_b", file_b)->required();

    // lps
    auto* lps_cmd = app.add_subcommand("lps", "longest palindromic substring");
    std::string lps_file;
    lps_cmd->add_option("file", lps_file)->required();

    // ulam
    auto* ulam_cmd = app.add_subcommand("ulam", "Ulam distance approximation");
    double ulam_eps = 0.3;
    std::string ufile_a, ufile_b;
    ulam_cmd->add_option("--epsilon", ulam_eps)->required();
    ulam_cmd->add_option("file_a", ufile_a)->required();
    ulam_cmd->add_option("file_b", ufile_b)->required();

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "hard-instance generators");
    std::string gen_kind, gen_params, gen_out = ".";
    gen_cmd->add_option("--kind", gen_kind)
        ->required()
        ->check(CLI::IsMember({"ed-lcs", "bin-lcs", "lps-hard", "ulam-swap"}));
    gen_cmd->add_option("--params", gen_params)->required();
    gen_cmd->add_option("--out", gen_out);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "benchmark sweeps");
    std::string b_problem, b_algo, b_grid = "2^10..2^14", b_csv;
    size_t b_trials = 30;
    bench_cmd->add_option("--problem", b_problem)->required();
    bench_cmd->add_option("--algo", b_algo)->required();
    bench_cmd->add_option("--n-grid", b_grid);
    bench_cmd->add_option("--trials", b_trials);
    bench_cmd->add_option("--csv", b_csv);

    CLI11_PARSE(app, argc, argv);

    try {
        qs::RandomStream rng(seed);

        if (lcs_cmd->parsed()) {
            qs::Text a = load_one(file_a), b = load_one(file_b);
            bool nonrep = lcs_algo.rfind("nonrep", 0) == 0;
            bool approx = lcs_algo.find("approx") != std::string::npos;
            if (nonrep && (!a.non_repetitive || !b.non_repetitive))
                return fail(kExitInput, "nonrep algorithms require non-repetitive inputs");
            if (approx && !(lcs_eps > 0.0 && lcs_eps < 1.0))
                return fail(kExitInput, "--epsilon must be in (0,1)");
            qs::RunRecord rec;
            rec.problem = "lcs";
            rec.algo = lcs_algo;
            rec.n = a.size();
            rec.seed = seed;
            if (approx) rec.epsilon = lcs_eps;
            Timer timer;
            qs::MatchWitness w;
            if (lcs_algo == "exact")
                w = qs::lcs_exact(a, b, rec.ledger, rng);
            else if (lcs_algo == "approx")
                w = qs::lcs_approx(a, b, lcs_eps, rec.ledger, rng);
            else if (lcs_algo == "nonrep-exact")
                w = qs::nonrep_lcs_exact(a, b, rec.ledger, rng);
            else
                w = qs::nonrep_lcs_approx(a, b, lcs_eps, rec.ledger, rng);
            rec.wall_ms = timer.ms();
            rec.answer = double(w.length);
            if (!qs::verify_witness(w, a, b))
                return fail(kExitContract, "returned witness failed verification");
            if (check) {
                size_t oracle = qs::lcs_oracle(a, b).length;
                rec.oracle_answer = double(oracle);
                rec.success = approx
                                  ? double(w.length) >=
                                        std::ceil((1.0 - lcs_eps) * double(oracle))
                                  : w.length == oracle;
            } else {
                rec.oracle_answer = -1;
                rec.success = true;
            }
            emit(rec);
            return rec.success ? kExitOk
                               : fail(kExitContract, "answer violates the oracle contract");
        }

        if (lps_cmd->parsed()) {
            qs::Text a = load_one(lps_file);
            qs::RunRecord rec;
            rec.problem = "lps";
            rec.algo = "quantum";
            rec.n = a.size();
            rec.seed = seed;
            Timer timer;
            qs::MatchWitness w = qs::lps(a, rec.ledger, rng);
            rec.wall_ms = timer.ms();
            rec.answer = double(w.length);
            if (!qs::verify_witness(w, a))
                return fail(kExitContract, "returned witness failed verification");
            if (check) {
                size_t oracle = qs::lps_oracle(a).length;
                rec.oracle_answer = double(oracle);
                rec.success = w.length == oracle;
            } else {
                rec.oracle_answer = -1;
                rec.success = true;
            }
            emit(rec);
            return rec.success ? kExitOk
                               : fail(kExitContract, "answer violates the oracle contract");
        }

        if (ulam_cmd->parsed()) {
            qs::Text a = load_one(ufile_a), b = load_one(ufile_b);
            if (!a.non_repetitive || !b.non_repetitive || a.size() != b.size())
                return fail(kExitInput,
                            "ulam requires equal-length non-repetitive inputs");
            if (!(ulam_eps > 0.0 && ulam_eps <= 1.0))
                return fail(kExitInput, "--epsilon must be in (0,1]");
            qs::RunRecord rec;
            rec.problem = "ulam";
            rec.algo = "quantum";
            rec.n = a.size();
            rec.epsilon = ulam_eps;
            rec.seed = seed;
            Timer timer;
            qs::UlamResult r = qs::ulam_approx(a, b, ulam_eps, rec.ledger, rng);
            rec.wall_ms = timer.ms();
            rec.answer = r.value;
            if (r.breach_event)
                return fail(kExitSimMode,
                            "indicator precondition breach reported by the simulator");
            if (check) {
                uint64_t oracle = qs::ulam_oracle(a, b);
                rec.oracle_answer = double(oracle);
                rec.success = r.value >= (1.0 - ulam_eps) * double(oracle) &&
                              r.value <= (1.0 + ulam_eps) * double(oracle);
            } else {
                rec.oracle_answer = -1;
                rec.success = true;
            }
            emit(rec);
            return rec.success ? kExitOk
                               : fail(kExitContract, "answer violates the oracle contract");
        }

        if (gen_cmd->parsed()) {
            auto p = parse_params(gen_params);
            auto geti = [&](const std::string& k, long long dflt = -1) {
                auto it = p.find(k);
                if (it == p.end()) {
                    if (dflt >= 0) return uint64_t(dflt);
                    throw std::invalid_argument("missing param " + k);
                }
                return uint64_t(std::stoull(it->second));
            };
            auto getd = [&](const std::string& k) {
                auto it = p.find(k);
                if (it == p.end()) throw std::invalid_argument("missing param " + k);
                return std::stod(it->second);
            };
            qs::HardInstance inst;
            if (gen_kind == "ed-lcs")
                inst = qs::gen_ed_to_lcs(geti("n"), geti("collide", 0) != 0, seed);
            else if (gen_kind == "bin-lcs")
                inst = qs::gen_binary_lcs(geti("n"), getd("c"),
                                          geti("collide", 0) != 0, seed,
                                          geti("d_alpha", 12));
            else if (gen_kind == "lps-hard")
                inst = qs::gen_lps_hard(geti("m"), getd("c"), seed,
                                        geti("weight_one", 0) != 0);
            else
                inst = qs::gen_ulam_swap(geti("n"), geti("ell"), seed);

            std::string base = gen_out + "/instance";
            qs::save_texts(base + ".txt", inst.texts);
            json sidecar;
            sidecar["generator"] = inst.generator;
            sidecar["params"] = inst.params;
            sidecar["seed"] = inst.seed;
            sidecar["planted_answer"] = inst.planted_answer;
            sidecar["regime"] = inst.regime;
            sidecar["resamples"] = inst.resamples;
            std::ofstream out(base + ".json");
            out << sidecar.dump(2) << "\n";
            json ok;
            ok["written"] = {base + ".txt", base + ".json"};
            ok["planted_answer"] = inst.planted_answer;
            std::cout << ok.dump() << std::endl;
            return kExitOk;
        }

        if (bench_cmd->parsed()) {
            auto grid = parse_grid(b_grid);
            qs::BenchResult res =
                qs::run_bench(b_problem, b_algo, grid, b_trials, seed);
            std::string csv = qs::bench_csv(res);
            if (!b_csv.empty()) {
                std::ofstream out(b_csv, std::ios::binary);
                out << csv;
            } else {
                std::cout << csv;
            }
            std::cout << res.fit.to_json() << std::endl;
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        return fail(kExitInput, e.what());
    } catch (const std::exception& e) {
        return fail(kExitContract, e.what());
    }
    return fail(kExitInput, "no subcommand");
}
