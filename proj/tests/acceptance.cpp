// Copyright 2026 The surfqubo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Tolerances and
// budgets are pinned below; heavy criteria take tens of minutes on one core.
//
// usage: acceptance --cli <path to surfqubo> [--only 1,4,...] [--workers N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include "surfqubo/bench.hpp"
#include "surfqubo/mwpm.hpp"
#include "surfqubo/rng.hpp"

using namespace surfqubo;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

int g_workers = 1;
std::string g_cli;

std::string fmt(const char *f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Syndrome all_plus(const CodeLattice &lat) {
    Syndrome s;
    s.values.assign(lat.num_vertices(), 1);
    return s;
}

Energy eq1_energy(const CodeLattice &lat, const Syndrome &s, std::span<const std::uint8_t> x, Energy J, Energy h) {
    Energy e = 0;
    for (std::size_t v = 0; v < lat.num_vertices(); v++) {
        int prod = 1;
        for (auto q : lat.vertex_support(v)) {
            prod *= x[q] ? -1 : 1;
        }
        e -= J * s.values[v] * prod;
    }
    for (std::size_t q = 0; q < lat.num_data(); q++) {
        e -= h * (x[q] ? -1 : 1);
    }
    return e;
}

// 1. QUBO exactness, zero tolerance, under one second.
Verdict criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const Energy J = 1024, h = 1;
    std::size_t checked = 0, mismatches = 0;
    auto lat2 = build_lattice(2);
    for (int sm = 0; sm < 4; sm++) {
        auto s = all_plus(lat2);
        s.values[0] = sm & 1 ? -1 : 1;
        s.values[1] = sm & 2 ? -1 : 1;
        auto q = quadratize(build_ising(lat2, s, J, h), default_alpha(J));
        for (int m = 0; m < 32; m++) {
            std::vector<std::uint8_t> x(5);
            for (int i = 0; i < 5; i++) {
                x[i] = (m >> i) & 1;
            }
            mismatches += evaluate(q, consistent_assignment(q, x)) != eq1_energy(lat2, s, x, J, h);
            checked++;
        }
    }
    std::mt19937_64 rng(101);
    for (int d : {3, 4}) {
        auto lat = build_lattice(d);
        for (int t = 0; t < 1000; t++) {
            auto s = extract_syndrome(lat, sample_errors(lat, 0.15, rng));
            auto q = quadratize(build_ising(lat, s, J, h), default_alpha(J));
            auto x = sample_errors(lat, 0.5, rng).bits;
            mismatches += evaluate(q, consistent_assignment(q, x)) != eq1_energy(lat, s, x, J, h);
            checked++;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {mismatches == 0 && secs < 1.0,
            std::to_string(checked) + " assignments, " + std::to_string(mismatches) + " mismatches, " +
                fmt("%.3f s (limit 1 s)", secs)};
}

// 2. Penalty floor over all 8 combinations.
Verdict criterion2() {
    bool ok = true;
    std::string cases;
    for (Energy J : {4, 1024}) {
        const Energy alpha = default_alpha(J);
        for (int c = 0; c < 8; c++) {
            const int xi = c & 1, xj = (c >> 1) & 1, z = (c >> 2) & 1;
            const Energy p = penalty_value(xi, xj, z, alpha);
            const bool consistent = z == xi * xj;
            ok &= consistent ? p == 0 : p >= alpha;
            if (J == 1024) {
                cases += std::to_string(p / alpha) + (c < 7 ? "," : "");
            }
        }
    }
    return {ok, "penalty/alpha for (xi,xj,z)=000..111: " + cases};
}

// 3. Chain-flip law -4J + 2nh, n = 1..6, J = 4, h = 1.
Verdict criterion3() {
    const Energy J = 4, h = 1;
    auto lat = build_lattice(9);
    bool ok = true;
    std::string got;
    for (int n = 1; n <= 6; n++) {
        // Horizontal chain along vertex row 7 starting at column 2; both end vertices are interior.
        ErrorPattern chain(lat.num_data());
        for (int k = 0; k < n; k++) {
            chain.bits[static_cast<std::size_t>(lat.qubit_at(7, 3 + 2 * k))] = 1;
        }
        auto s = extract_syndrome(lat, chain);
        auto ising = build_ising(lat, s, J, h);
        auto q = quadratize(ising, default_alpha(J));
        const Energy d_ising = ising.energy_of_errors(chain) - ising.energy_of_errors(ErrorPattern(lat.num_data()));
        const Energy d_qubo = evaluate(q, consistent_assignment(q, chain.bits)) -
                              evaluate(q, consistent_assignment(q, ErrorPattern(lat.num_data()).bits));
        ok &= s.defects().size() == 2 && d_ising == -4 * J + 2 * n * h && d_qubo == d_ising;
        got += "n=" + std::to_string(n) + ":" + std::to_string(d_ising) + " ";
    }
    return {ok, got + "(expected -16+2n)"};
}

// 4. DA satisfies the syndrome in 100% of trials.
Verdict criterion4() {
    auto spec = default_spec(ExperimentKind::scaling);
    spec.distances = {4, 6, 8, 10};
    spec.error_rates = {0.01, 0.05, 0.10};
    spec.trials = 100;
    spec.methods = {DecodeMethod::da};
    spec.params.anneal.max_iterations = 1'000'000;
    spec.params.anneal.stall_iterations = 10'000;
    spec.seed = 404;
    spec.workers = g_workers;
    auto records = run_trials(spec);
    std::size_t ok = 0;
    std::int64_t worst = 0;
    for (const auto &r : records) {
        ok += r.syndrome_satisfied;
        worst = std::max(worst, r.iterations);
    }
    return {ok == records.size() && records.size() == 1200,
            std::to_string(ok) + "/" + std::to_string(records.size()) + " satisfied (need 100%), max iterations-at-best " +
                std::to_string(worst)};
}

// 5. Exhaustive ground-state oracle on d = 3.
Verdict criterion5() {
    auto lat = build_lattice(3);
    std::mt19937_64 rng(505);
    DecoderParams params;
    params.anneal.stall_iterations = 5000;
    int mwpm_ok = 0, da_ok = 0;
    const int n = 100;
    for (int t = 0; t < n; t++) {
        auto actual = sample_errors(lat, 0.05, rng);
        auto s = extract_syndrome(lat, actual);
        const auto best = ground_state_oracle(lat, s);
        auto m = mwpm_decode(build_defect_graph(lat, s));
        mwpm_ok += m.correction.weight() == best && extract_syndrome(lat, m.correction) == s;
        params.anneal.seed = derive_seed(505, {static_cast<std::uint64_t>(t)});
        auto o = decode(lat, s, DecodeMethod::da, params);
        da_ok += o.syndrome_satisfied && o.estimate.weight() == best;
    }
    return {mwpm_ok == n && da_ok >= 95,
            "MWPM " + std::to_string(mwpm_ok) + "/100 (need 100), DA " + std::to_string(da_ok) + "/100 (need >= 95)"};
}

// 6. Blossom weight equals exhaustive matching.
Verdict criterion6() {
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> rate(0.02, 0.12);
    int agree = 0, total = 0;
    std::size_t max_defects = 0;
    for (int d : {4, 6}) {
        auto lat = build_lattice(d);
        for (int t = 0; t < 100; t++) {
            Syndrome s;
            do {
                s = extract_syndrome(lat, sample_errors(lat, rate(rng), rng));
            } while (s.defects().size() > 8);
            auto g = build_defect_graph(lat, s);
            max_defects = std::max(max_defects, g.num_defects());
            auto m = mwpm_decode(g);
            agree += m.weight == brute_force_matching(g) && extract_syndrome(lat, m.correction) == s;
            total++;
        }
    }
    return {agree == total && total == 200, std::to_string(agree) + "/" + std::to_string(total) +
                                                " agree (need 100%), up to " + std::to_string(max_defects) +
                                                " defects"};
}

// 7. Scaling exponents at p = 1%: DA < SA and DA < 2.2.
Verdict criterion7() {
    auto spec = default_spec(ExperimentKind::scaling);
    spec.distances = {4, 6, 8, 10, 12, 14, 16};
    spec.error_rates = {0.01};
    spec.trials = 100;
    spec.methods = {DecodeMethod::da, DecodeMethod::sa};
    spec.params.anneal.stall_iterations = 2000;
    spec.sa_anneal.max_iterations = 2'000'000;
    spec.seed = 707;
    spec.workers = g_workers;
    auto rep = run_scaling(spec);
    double da = NAN, sa = NAN;
    for (const auto &f : rep.fits) {
        if (!f.ok) {
            continue;
        }
        (f.method == DecodeMethod::da ? da : sa) = f.fit.exponent;
    }
    return {da < sa && da < 2.2, fmt("DA exponent %.3f", da) + fmt(", SA exponent %.3f", sa) +
                                     " (need DA < SA and DA < 2.2; paper 1.79 vs 2.38)"};
}

// 8. Threshold bracket overlaps [8.5%, 11%].
Verdict criterion8() {
    auto spec = default_spec(ExperimentKind::threshold);
    spec.distances = {5, 7, 9, 11};
    spec.error_rates = {0.07, 0.08, 0.09, 0.095, 0.10, 0.11, 0.12};
    spec.trials = 2000;
    spec.methods = {DecodeMethod::da};
    spec.seed = 808;
    spec.workers = g_workers;
    auto rep = run_threshold(spec);
    std::ostringstream detail;
    for (const auto &c : rep.cells) {
        detail << " d" << c.d << "@" << c.p * 100 << "%=" << c.rate;
    }
    const auto &b = rep.brackets.front();
    const bool overlap = b.found && b.lower <= 0.11 && b.upper >= 0.085;
    std::string head = b.found ? "d=5 vs d=11 crossing in [" + fmt("%.3g", 100 * b.lower) + "%, " +
                                     fmt("%.3g", 100 * b.upper) + "%]"
                               : "no d=5 vs d=11 crossing found";
    for (std::size_t i = 1; i < rep.brackets.size(); i++) {
        const auto &a = rep.brackets[i];
        head += "; d=" + std::to_string(a.d_small) + "/" + std::to_string(a.d_large) +
                (a.found ? " [" + fmt("%.3g", 100 * a.lower) + "," + fmt("%.3g", 100 * a.upper) + "]" : " none");
    }
    return {overlap, head + " (need overlap with [8.5%, 11%]);" + detail.str()};
}

// 9. Power-law fit: exact recovery on synthetic data, c2 in [0.5, 1.1] at d = 11.
Verdict criterion9() {
    const double p_th = 0.096;
    std::vector<RateCell> synthetic;
    for (double p : {0.04, 0.05, 0.06, 0.07, 0.08}) {
        synthetic.push_back({DecodeMethod::da, 11, p, 1, 0, 0.18 * std::pow(p / p_th, 0.81 * effective_distance(11)), 0});
    }
    auto sf = fit_power_law(synthetic, p_th);
    const bool synthetic_ok = std::abs(sf.c1 - 0.18) < 5e-7 && std::abs(sf.c2 - 0.81) < 5e-7;

    auto spec = default_spec(ExperimentKind::threshold);
    spec.distances = {11};
    spec.error_rates = {0.04, 0.05, 0.06, 0.07, 0.08};
    spec.trials = 10000;
    spec.methods = {DecodeMethod::da};
    spec.seed = 909;
    spec.workers = g_workers;
    auto rep = run_threshold(spec);
    auto mf = fit_power_law(rep.cells, p_th);
    std::ostringstream detail;
    for (const auto &c : rep.cells) {
        detail << " P_L(" << c.p * 100 << "%)=" << c.rate;
    }
    return {synthetic_ok && mf.c2 >= 0.5 && mf.c2 <= 1.1,
            fmt("synthetic c1=%.7f", sf.c1) + fmt(" c2=%.7f", sf.c2) + fmt("; measured d=11 c1=%.3f", mf.c1) +
                fmt(" c2=%.3f (need [0.5, 1.1]; paper 0.81);", mf.c2) + detail.str()};
}

// 10. Homology invariants on d = 3 and 5.
Verdict criterion10() {
    std::size_t violations = 0, checks = 0;
    for (int d : {3, 5}) {
        auto lat = build_lattice(d);
        auto logical = pattern_from_support(lat, lat.logical_support());
        std::mt19937_64 rng(1000 + d);
        for (int t = 0; t < 1000; t++) {
            auto e1 = sample_errors(lat, 0.25, rng);
            auto e2 = sample_errors(lat, 0.25, rng);
            auto s1 = extract_syndrome(lat, e1), s2 = extract_syndrome(lat, e2), s12 = extract_syndrome(lat, e1 ^ e2);
            for (std::size_t v = 0; v < s12.size(); v++) {
                violations += s12.values[v] != s1.values[v] * s2.values[v];
            }
            const int base = logical_parity(lat, e1);
            for (std::size_t v = 0; v < lat.num_vertices(); v++) {
                violations += logical_parity(lat, e1 ^ pattern_from_support(lat, lat.vertex_support(v))) != base;
            }
            for (std::size_t f = 0; f < lat.num_faces(); f++) {
                auto deformed = e1 ^ pattern_from_support(lat, lat.face_support(f));
                violations += logical_parity(lat, deformed) != base;
                violations += !(extract_syndrome(lat, deformed) == s1);
            }
            violations += logical_parity(lat, e1 ^ logical) != 1 - base;
            checks++;
        }
    }
    return {violations == 0, std::to_string(checks) + " patterns, " + std::to_string(violations) + " violations"};
}

// 11. Byte-identical CSV from the CLI across runs and worker counts.
Verdict criterion11() {
    namespace fs = std::filesystem;
    if (g_cli.empty() || !fs::exists(g_cli)) {
        return {false, "CLI binary not found: '" + g_cli + "'"};
    }
    auto dir = fs::temp_directory_path() / ("surfqubo_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    struct Case {
        std::string verb, config;
    };
    const Case cases[] = {
        {"scaling", "schema_version = 1\ndistances = 4:8:2\nerror_rates = 1%, 5%\ntrials = 6\nmethods = da,sa,mwpm\n"
                    "replicas = 32\nsa.max_iterations = 100000\n"},
        {"threshold", "schema_version = 1\ndistances = 5,7\nerror_rates = 8%, 10%\ntrials = 10\nmethods = da,mwpm\n"
                      "replicas = 32\n"},
        {"ground-stats", "schema_version = 1\ndistances = 3,5\nerror_rates = 5%\ntrials = 10\nmethods = da,sa,mwpm\n"
                         "sa.max_iterations = 100000\n"},
        {"demo", "schema_version = 1\ndistances = 6\nerror_rates = 20%\ntrials = 2\nJ = 4\nt_max = 10\n"
                 "stall_iterations = 3000\n"},
    };
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool ok = true;
    std::string detail;
    for (const auto &c : cases) {
        auto cfg = dir / (c.verb + ".cfg");
        std::ofstream(cfg) << c.config;
        std::vector<std::string> outputs;
        for (const char *tag : {"w1a", "w1b", "w8"}) {
            const int workers = std::string(tag) == "w8" ? 8 : 1;
            auto out = dir / (c.verb + "_" + tag + ".csv");
            const std::string cmd = "\"" + g_cli + "\" " + c.verb + " --config \"" + cfg.string() +
                                    "\" --seed 1111 --workers " + std::to_string(workers) + " --out \"" +
                                    out.string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) != 0) {
                ok = false;
                detail += c.verb + ": command failed; ";
                continue;
            }
            outputs.push_back(slurp(out));
        }
        const bool same = outputs.size() == 3 && outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                          outputs[0].size() > 100;
        ok &= same;
        detail += c.verb + (same ? " identical" : " DIFFER") + " (" +
                  std::to_string(outputs.empty() ? 0 : outputs[0].size()) + " bytes); ";
    }
    fs::remove_all(dir);
    return {ok, detail + "workers 1, 1, 8"};
}

}  // namespace

int main(int argc, char **argv) {
    std::set<int> only;
    for (int i = 1; i < argc; i++) {
        std::string a = argv[i];
        if (a == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
        } else if (a == "--workers" && i + 1 < argc) {
            g_workers = std::max(1, std::atoi(argv[++i]));
        } else if (a == "--only" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string item;
            while (std::getline(ss, item, ',')) {
                only.insert(std::atoi(item.c_str()));
            }
        } else {
            std::cerr << "usage: acceptance --cli PATH [--only 1,2,...] [--workers N]\n";
            return 2;
        }
    }
    const std::pair<const char *, std::function<Verdict()>> criteria[] = {
        {"QUBO exactness", criterion1},
        {"penalty floor", criterion2},
        {"chain-flip law", criterion3},
        {"syndrome-constraint success", criterion4},
        {"ground-state oracle match", criterion5},
        {"MWPM optimality", criterion6},
        {"scaling ordering", criterion7},
        {"threshold bracket", criterion8},
        {"power-law fit", criterion9},
        {"homology invariance", criterion10},
        {"determinism", criterion11},
    };
    int failed = 0;
    for (int i = 0; i < 11; i++) {
        if (!only.empty() && !only.count(i + 1)) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << v.detail
                  << fmt(" [%.1f s]", secs) << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
