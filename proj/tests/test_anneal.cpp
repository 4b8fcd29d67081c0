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

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "surfqubo/anneal.hpp"
#include "surfqubo/rng.hpp"

namespace surfqubo {
namespace {

QuboProblem problem_for(int d, double p, std::uint64_t seed, Energy J = 1024) {
    auto lat = build_lattice(d);
    std::mt19937_64 rng(seed);
    auto s = extract_syndrome(lat, sample_errors(lat, p, rng));
    return quadratize(build_ising(lat, s, J, 1), default_alpha(J));
}

QuboProblem single_defect_d2() {
    auto lat = build_lattice(2);
    Syndrome s;
    s.values = {-1, 1};
    return quadratize(build_ising(lat, s, 4, 1), 32);
}

AnnealConfig quick(AnnealMode mode) {
    AnnealConfig cfg;
    cfg.mode = mode;
    cfg.replicas = 16;
    cfg.max_iterations = 20000;
    cfg.seed = 11;
    return cfg;
}

TEST(AnnealConfig, Validation) {
    AnnealConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.replicas = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = AnnealConfig{};
    cfg.t_min = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = AnnealConfig{};
    cfg.t_min = 6;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = AnnealConfig{};
    cfg.max_iterations = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_EQ(parse_anneal_mode("sa"), AnnealMode::sa);
    EXPECT_EQ(parse_anneal_mode(to_string(AnnealMode::da_replica_exchange)), AnnealMode::da_replica_exchange);
    EXPECT_THROW(parse_anneal_mode("qa"), std::invalid_argument);
}

TEST(AnnealConfig, Ladder) {
    AnnealConfig cfg;
    cfg.replicas = 5;
    cfg.t_min = 0.1;
    cfg.t_max = 10;
    auto l = temperature_ladder(cfg);
    ASSERT_EQ(l.size(), 5u);
    EXPECT_DOUBLE_EQ(l.front(), 0.1);
    EXPECT_DOUBLE_EQ(l.back(), 10.0);
    for (std::size_t i = 1; i < l.size(); i++) {
        EXPECT_NEAR(l[i] / l[i - 1], std::sqrt(10.0), 1e-12);
    }
    cfg.replicas = 1;
    EXPECT_DOUBLE_EQ(temperature_ladder(cfg)[0], 0.1);
}

TEST(Anneal, ModeMismatch) {
    auto q = single_defect_d2();
    EXPECT_THROW(solve_da(q, quick(AnnealMode::sa)), std::invalid_argument);
    EXPECT_THROW(solve_sa(q, quick(AnnealMode::da_replica_exchange)), std::invalid_argument);
}

class AnnealBoth : public ::testing::TestWithParam<AnnealMode> {};

TEST_P(AnnealBoth, EmptySyndromeStaysAtZero) {
    auto lat = build_lattice(5);
    Syndrome s;
    s.values.assign(lat.num_vertices(), 1);
    auto q = quadratize(build_ising(lat, s, 1024, 1), 8192);
    auto cfg = quick(GetParam());
    cfg.max_iterations = 2000;
    auto r = solve(q, cfg);
    EXPECT_EQ(r.best_iteration, 0);
    EXPECT_EQ(r.best_energy, evaluate(q, r.best_bits));
    EXPECT_EQ(r.best_bits, std::vector<std::uint8_t>(q.num_variables(), 0));
    EXPECT_EQ(r.iterations_run, 2000);
}

TEST_P(AnnealBoth, SingleDefectOracle) {
    auto q = single_defect_d2();
    // Brute force over all 2^7 assignments.
    Energy best = 1 << 30;
    for (int m = 0; m < 128; m++) {
        std::vector<std::uint8_t> bits(7);
        for (int i = 0; i < 7; i++) {
            bits[i] = (m >> i) & 1;
        }
        best = std::min(best, evaluate(q, bits));
    }
    ASSERT_EQ(best, -11);
    auto r = solve(q, quick(GetParam()));
    EXPECT_EQ(r.best_energy, -11);
    EXPECT_EQ(evaluate(q, r.best_bits), -11);
    // Qubits 0 and 3 both end on the boundary next to vertex 0.
    EXPECT_TRUE(r.best_bits == (std::vector<std::uint8_t>{1, 0, 0, 0, 0, 0, 0}) ||
                r.best_bits == (std::vector<std::uint8_t>{0, 0, 0, 1, 0, 0, 0}));
    EXPECT_LE(r.best_iteration, r.iterations_run);
}

TEST_P(AnnealBoth, ResultInvariants) {
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        auto q = problem_for(5, 0.1, seed);
        auto cfg = quick(GetParam());
        cfg.seed = seed;
        cfg.verify_energy = true;
        auto r = solve(q, cfg);
        EXPECT_EQ(r.best_energy, evaluate(q, r.best_bits));
        EXPECT_LE(r.best_iteration, r.iterations_run);
        EXPECT_LE(r.best_energy, q.constant());
    }
}

TEST_P(AnnealBoth, SeedDeterminism) {
    auto q = problem_for(6, 0.08, 4);
    auto cfg = quick(GetParam());
    auto a = solve(q, cfg);
    auto b = solve(q, cfg);
    EXPECT_EQ(a.best_bits, b.best_bits);
    EXPECT_EQ(a.best_energy, b.best_energy);
    EXPECT_EQ(a.best_iteration, b.best_iteration);
}

TEST_P(AnnealBoth, StallStopsEarly) {
    auto q = problem_for(4, 0.05, 2);
    auto cfg = quick(GetParam());
    cfg.max_iterations = 1'000'000;
    cfg.stall_iterations = 500;
    auto r = solve(q, cfg);
    EXPECT_LT(r.iterations_run, cfg.max_iterations);
    EXPECT_GE(r.iterations_run - r.best_iteration, 500);
}

INSTANTIATE_TEST_SUITE_P(Modes, AnnealBoth, ::testing::Values(AnnealMode::da_replica_exchange, AnnealMode::sa),
                         [](const auto &info) { return to_string(info.param); });

TEST(SolveDa, WorkerCountDoesNotChangeResult) {
    for (std::uint64_t seed = 0; seed < 3; seed++) {
        auto q = problem_for(8, 0.08, 50 + seed);
        auto cfg = quick(AnnealMode::da_replica_exchange);
        cfg.replicas = 32;
        cfg.seed = seed;
        cfg.workers = 1;
        auto a = solve_da(q, cfg);
        cfg.workers = 8;
        auto b = solve_da(q, cfg);
        EXPECT_EQ(a.best_bits, b.best_bits);
        EXPECT_EQ(a.best_energy, b.best_energy);
        EXPECT_EQ(a.best_iteration, b.best_iteration);
        EXPECT_EQ(a.iterations_run, b.iterations_run);
    }
}

TEST(SolveDa, ZeroTemperatureDescends) {
    // No offset and a frozen ladder: the walk is greedy and ends in a local minimum.
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        auto q = problem_for(5, 0.1, 70 + seed);
        AnnealConfig cfg;
        cfg.replicas = 4;
        cfg.t_min = cfg.t_max = 1e-9;
        cfg.offset_increment = 0;
        cfg.max_iterations = 5000;
        cfg.seed = seed;
        auto r = solve_da(q, cfg);
        for (std::size_t i = 0; i < q.num_variables(); i++) {
            EXPECT_GE(local_delta(q, r.best_bits, i), 0);
        }
    }
}

TEST(SolveDa, SatisfiesSyndromeOnSmallCodes) {
    for (int d : {4, 6}) {
        auto lat = build_lattice(d);
        std::mt19937_64 rng(d);
        for (int trial = 0; trial < 10; trial++) {
            auto s = extract_syndrome(lat, sample_errors(lat, 0.1, rng));
            auto q = quadratize(build_ising(lat, s, 1024, 1), 8192);
            AnnealConfig cfg;
            cfg.seed = static_cast<std::uint64_t>(trial);
            cfg.max_iterations = 100000;
            cfg.stall_iterations = 2000;
            auto r = solve_da(q, cfg);
            ErrorPattern e(lat.num_data());
            std::copy_n(r.best_bits.begin(), lat.num_data(), e.bits.begin());
            EXPECT_EQ(extract_syndrome(lat, e), s);
        }
    }
}

// The bucketed kernel must draw from the same distribution as the literal
// per-variable scan. Compare short runs over many seeds.
TEST(SolveDa, BucketKernelMatchesReferenceScan) {
    auto lat = build_lattice(3);
    ErrorPattern e(lat.num_data());
    e.bits[5] = e.bits[6] = e.bits[11] = 1;
    auto q = quadratize(build_ising(lat, extract_syndrome(lat, e), 4, 1), 32);
    const int samples = 40000;
    std::map<std::pair<Energy, std::int64_t>, int> fast, slow;
    for (int s = 0; s < samples; s++) {
        AnnealConfig cfg;
        cfg.replicas = 2;
        cfg.t_min = 1.5;
        cfg.t_max = 6;
        cfg.max_iterations = 6;
        cfg.exchange_interval = 3;
        cfg.seed = static_cast<std::uint64_t>(s);
        auto a = solve_da(q, cfg);
        cfg.seed = static_cast<std::uint64_t>(s) + 1'000'000;
        auto b = solve_da_reference(q, cfg);
        fast[{a.best_energy, a.best_iteration}]++;
        slow[{b.best_energy, b.best_iteration}]++;
    }
    double tv = 0;
    auto keys = fast;
    for (auto &[k, v] : slow) {
        keys[k] += 0;
    }
    for (auto &[k, unused] : keys) {
        tv += std::abs(fast[k] - slow[k]);
    }
    tv /= 2.0 * samples;
    EXPECT_GT(keys.size(), 5u);
    EXPECT_LT(tv, 0.03);
}

TEST(SolveDa, ReferenceScanFindsOracle) {
    auto q = single_defect_d2();
    auto r = solve_da_reference(q, quick(AnnealMode::da_replica_exchange));
    EXPECT_EQ(r.best_energy, -11);
}

TEST(Rng, BinomialMoments) {
    std::mt19937_64 rng(1);
    for (auto [n, p] : {std::pair<std::uint64_t, double>{10, 0.3}, {500, 0.01}, {2000, 0.4}, {50, 0.9}}) {
        const int draws = 20000;
        double sum = 0, sq = 0;
        for (int i = 0; i < draws; i++) {
            auto k = static_cast<double>(sample_binomial(rng, n, p));
            ASSERT_LE(k, static_cast<double>(n));
            sum += k;
            sq += k * k;
        }
        const double mean = sum / draws;
        const double var = sq / draws - mean * mean;
        const double mu = static_cast<double>(n) * p;
        const double sigma2 = mu * (1 - p);
        EXPECT_NEAR(mean, mu, 5 * std::sqrt(sigma2 / draws)) << n << " " << p;
        EXPECT_NEAR(var, sigma2, 0.1 * sigma2) << n << " " << p;
    }
    EXPECT_EQ(sample_binomial(rng, 0, 0.5), 0u);
    EXPECT_EQ(sample_binomial(rng, 7, 1.0), 7u);
    EXPECT_EQ(sample_binomial(rng, 7, 0.0), 0u);
}

TEST(Rng, DerivedSeedsDiffer) {
    EXPECT_NE(derive_seed(1, {0}), derive_seed(1, {1}));
    EXPECT_NE(derive_seed(1, {0}), derive_seed(2, {0}));
    EXPECT_EQ(derive_seed(5, {1, 2}), derive_seed(5, {1, 2}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; i++) {
        auto u = uniform_open(rng);
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(uniform_below(rng, 7), 7u);
    }
}

}  // namespace
}  // namespace surfqubo
