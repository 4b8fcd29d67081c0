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

#ifndef SURFQUBO_ANNEAL_HPP
#define SURFQUBO_ANNEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "surfqubo/qubo.hpp"

namespace surfqubo {

enum class AnnealMode { da_replica_exchange, sa };

std::string to_string(AnnealMode mode);
AnnealMode parse_anneal_mode(const std::string &text);

struct AnnealConfig {
    AnnealMode mode = AnnealMode::da_replica_exchange;
    int replicas = 128;
    double t_max = 5.0;
    double t_min = 0.1;
    std::int64_t max_iterations = 1'000'000;
    /// Iterations between replica-exchange sweeps; 0 disables exchange.
    std::int64_t exchange_interval = 20;
    /// Added to the dynamic offset after a step where no flip was eligible.
    Energy offset_increment = 1;
    std::uint64_t seed = 0;
    /// Stop once the best energy has not improved for this many iterations.
    /// 0 runs to max_iterations. Checked at exchange points for the DA.
    std::int64_t stall_iterations = 0;
    /// OpenMP threads used to advance replicas; results do not depend on it.
    int workers = 1;
    /// Re-evaluate every replica's energy from scratch at each exchange
    /// point and throw if the incremental bookkeeping has drifted.
    bool verify_energy = false;

    void validate() const;
};

struct SolveResult {
    std::vector<std::uint8_t> best_bits;
    Energy best_energy = 0;
    /// Iteration at which best_energy was last lowered (0 = initial state).
    std::int64_t best_iteration = 0;
    std::int64_t iterations_run = 0;
    /// Set by callers that know what constraint the bits must satisfy.
    bool converged = false;
};

/// Geometric ladder from t_min (index 0) to t_max (last index).
std::vector<double> temperature_ladder(const AnnealConfig &cfg);

/// Digital-annealer style solver: every replica performs one parallel-trial
/// step per iteration with a dynamic offset; adjacent temperatures exchange
/// states every exchange_interval iterations. All variables start at zero.
SolveResult solve_da(const QuboProblem &q, const AnnealConfig &cfg);

/// Serial, unoptimized solve_da that draws one Metropolis trial per variable
/// per step. Same distribution of trajectories, different random stream.
SolveResult solve_da_reference(const QuboProblem &q, const AnnealConfig &cfg);

/// Single-flip simulated annealing with geometric cooling over
/// max_iterations; one iteration is one proposal.
SolveResult solve_sa(const QuboProblem &q, const AnnealConfig &cfg);

/// Dispatches on cfg.mode.
SolveResult solve(const QuboProblem &q, const AnnealConfig &cfg);

}  // namespace surfqubo

#endif  // SURFQUBO_ANNEAL_HPP
