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

#include <cmath>
#include <random>
#include <stdexcept>

#include "replica.hpp"
#include "surfqubo/anneal.hpp"

namespace surfqubo {

std::string to_string(AnnealMode mode) {
    return mode == AnnealMode::sa ? "sa" : "da";
}

AnnealMode parse_anneal_mode(const std::string &text) {
    if (text == "da" || text == "da_replica_exchange" || text == "replica_exchange") {
        return AnnealMode::da_replica_exchange;
    }
    if (text == "sa") {
        return AnnealMode::sa;
    }
    throw std::invalid_argument("unknown annealing mode: " + text);
}

void AnnealConfig::validate() const {
    if (replicas < 1) {
        throw std::invalid_argument("replicas must be >= 1");
    }
    if (!(t_min > 0.0) || !(t_min <= t_max)) {
        throw std::invalid_argument("temperatures must satisfy 0 < t_min <= t_max");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (exchange_interval < 0 || stall_iterations < 0 || offset_increment < 0) {
        throw std::invalid_argument("exchange_interval, stall_iterations and offset_increment must be >= 0");
    }
}

std::vector<double> temperature_ladder(const AnnealConfig &cfg) {
    cfg.validate();
    std::vector<double> out(cfg.replicas);
    if (cfg.replicas == 1) {
        out[0] = cfg.t_min;
        return out;
    }
    const double ratio = cfg.t_max / cfg.t_min;
    for (int r = 0; r < cfg.replicas; r++) {
        out[r] = cfg.t_min * std::pow(ratio, static_cast<double>(r) / (cfg.replicas - 1));
    }
    out.back() = cfg.t_max;
    return out;
}

SolveResult solve_sa(const QuboProblem &q, const AnnealConfig &cfg) {
    if (cfg.mode != AnnealMode::sa) {
        throw std::invalid_argument("solve_sa requires mode sa");
    }
    cfg.validate();
    std::mt19937_64 rng(derive_seed(cfg.seed, {3}));
    detail::QuboState state(q);

    SolveResult result;
    result.best_bits.assign(q.num_variables(), 0);
    result.best_energy = state.energy();

    const auto n = q.num_variables();
    const double log_ratio = std::log(cfg.t_min / cfg.t_max);
    const double span = cfg.max_iterations > 1 ? static_cast<double>(cfg.max_iterations - 1) : 1.0;
    std::int64_t t = 0;
    while (t < cfg.max_iterations && n > 0) {
        const double temperature = cfg.t_max * std::exp(log_ratio * static_cast<double>(t) / span);
        t++;
        const auto i = uniform_below(rng, n);
        const Energy de = state.delta(i);
        if (de <= 0 || uniform_open(rng) < std::exp(-static_cast<double>(de) / temperature)) {
            state.flip(i);
            if (state.energy() < result.best_energy) {
                result.best_energy = state.energy();
                result.best_iteration = t;
                result.best_bits = state.bits();
            }
        }
        if (cfg.stall_iterations > 0 && t - result.best_iteration >= cfg.stall_iterations) {
            break;
        }
    }
    result.iterations_run = t;
    if (cfg.verify_energy && evaluate(q, state.bits()) != state.energy()) {
        throw std::logic_error("SA energy bookkeeping drifted from full evaluation");
    }
    return result;
}

SolveResult solve(const QuboProblem &q, const AnnealConfig &cfg) {
    return cfg.mode == AnnealMode::sa ? solve_sa(q, cfg) : solve_da(q, cfg);
}

}  // namespace surfqubo
