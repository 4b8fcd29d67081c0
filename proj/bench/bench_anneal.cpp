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

// Throughput of the parallel-trial kernels: bucketed sampler vs the literal
// per-variable scan, and replica parallelism across thread counts.

#include <benchmark/benchmark.h>

#include <random>

#include "surfqubo/anneal.hpp"

namespace {

using namespace surfqubo;

QuboProblem instance(int d, double p) {
    auto lat = build_lattice(d);
    std::mt19937_64 rng(1234);
    auto s = extract_syndrome(lat, sample_errors(lat, p, rng));
    return quadratize(build_ising(lat, s, 1024, 1), default_alpha(1024));
}

AnnealConfig fixed_budget(int iterations, int workers) {
    AnnealConfig cfg;
    cfg.max_iterations = iterations;
    cfg.stall_iterations = 0;
    cfg.workers = workers;
    cfg.seed = 7;
    return cfg;
}

void BM_SolveDa(benchmark::State &state) {
    const auto q = instance(static_cast<int>(state.range(0)), 0.05);
    const auto cfg = fixed_budget(500, static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_da(q, cfg).best_energy);
    }
    state.SetItemsProcessed(state.iterations() * cfg.max_iterations * cfg.replicas);
    state.counters["N"] = static_cast<double>(q.num_variables());
}

void BM_SolveDaReference(benchmark::State &state) {
    const auto q = instance(static_cast<int>(state.range(0)), 0.05);
    const auto cfg = fixed_budget(500, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_da_reference(q, cfg).best_energy);
    }
    state.SetItemsProcessed(state.iterations() * cfg.max_iterations * cfg.replicas);
    state.counters["N"] = static_cast<double>(q.num_variables());
}

void BM_SolveSa(benchmark::State &state) {
    const auto q = instance(static_cast<int>(state.range(0)), 0.05);
    auto cfg = fixed_budget(500 * 128, 1);
    cfg.mode = AnnealMode::sa;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_sa(q, cfg).best_energy);
    }
    state.SetItemsProcessed(state.iterations() * cfg.max_iterations);
}

}  // namespace

BENCHMARK(BM_SolveDa)->ArgsProduct({{8, 16, 32}, {1, 2, 4, 8}})->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveDaReference)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSa)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
