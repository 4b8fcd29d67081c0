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

// Internal pieces shared by the annealing solvers.

#ifndef SURFQUBO_SRC_REPLICA_HPP
#define SURFQUBO_SRC_REPLICA_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "surfqubo/anneal.hpp"
#include "surfqubo/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace surfqubo::detail {

/// Binary state with incrementally maintained local fields
/// field_i = V_i + sum_j W_ij y_j, so that flipping i costs
/// y_i ? field_i : -field_i.
class QuboState {
  public:
    explicit QuboState(const QuboProblem &q) : q_(&q), y_(q.num_variables(), 0), field_(q.bias()), energy_(q.constant()) {}

    Energy delta(std::size_t i) const { return y_[i] ? field_[i] : -field_[i]; }
    Energy energy() const { return energy_; }
    const std::vector<std::uint8_t> &bits() const { return y_; }
    std::size_t size() const { return y_.size(); }

    /// Flips i and calls on_change(k) for every variable whose delta moved.
    template <typename OnChange>
    void flip(std::size_t i, OnChange &&on_change) {
        energy_ += delta(i);
        const Energy step = y_[i] ? -1 : 1;
        y_[i] ^= 1;
        auto cols = q_->neighbors(i);
        auto w = q_->weights(i);
        for (std::size_t k = 0; k < cols.size(); k++) {
            field_[cols[k]] += w[k] * step;
            on_change(cols[k]);
        }
        on_change(i);
    }
    void flip(std::size_t i) {
        flip(i, [](std::size_t) {});
    }

  private:
    const QuboProblem *q_;
    std::vector<std::uint8_t> y_;
    std::vector<Energy> field_;
    Energy energy_;
};

/// Metropolis weights exp(-x / T) for integer x in [1, x_max]; above x_max
/// the weight is below e^-40 and treated as zero.
struct MetropolisTable {
    double temperature = 1.0;
    Energy x_max = 0;
    std::vector<double> accept;  // exp(-x/T)
    std::vector<double> log_reject;  // log(1 - exp(-x/T))

    explicit MetropolisTable(double t) : temperature(t) {
        x_max = static_cast<Energy>(std::ceil(40.0 * t));
        x_max = std::min<Energy>(x_max, Energy{1} << 20);
        accept.resize(static_cast<std::size_t>(x_max) + 1);
        log_reject.resize(accept.size());
        for (Energy x = 1; x <= x_max; x++) {
            accept[x] = std::exp(-static_cast<double>(x) / t);
            log_reject[x] = std::log1p(-accept[x]);
        }
    }
};

/// Best-so-far record kept by one replica inside a chunk of iterations.
struct ChunkRecord {
    Energy energy;
    std::int64_t iteration = -1;
    std::vector<std::uint8_t> bits;
};

inline int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

/// Replica-exchange driver. Replica must provide
///   bool step(const MetropolisTable&, std::mt19937_64&)   (one parallel trial)
///   Energy energy() const; const std::vector<uint8_t>& bits() const;
///   void reset_offset();
/// Replicas advance independently between exchange points, so results are
/// identical for any worker count.
template <typename Replica>
SolveResult run_replica_exchange(const QuboProblem &q, const AnnealConfig &cfg, int workers) {
    cfg.validate();
    const auto ladder = temperature_ladder(cfg);
    const int num_replicas = cfg.replicas;

    std::vector<MetropolisTable> tables;
    std::vector<std::mt19937_64> rngs;
    std::vector<Replica> replicas;
    tables.reserve(num_replicas);
    for (int r = 0; r < num_replicas; r++) {
        tables.emplace_back(ladder[r]);
        rngs.emplace_back(derive_seed(cfg.seed, {1, static_cast<std::uint64_t>(r)}));
        replicas.emplace_back(q, cfg.offset_increment);
    }
    std::mt19937_64 exchange_rng(derive_seed(cfg.seed, {2}));

    SolveResult result;
    result.best_bits.assign(q.num_variables(), 0);
    result.best_energy = q.constant();
    result.best_iteration = 0;

    const std::int64_t chunk = cfg.exchange_interval > 0 ? cfg.exchange_interval : 64;
    std::vector<ChunkRecord> records(num_replicas);
    workers = resolve_workers(workers);

    std::int64_t t = 0;
    while (t < cfg.max_iterations) {
        const std::int64_t len = std::min(chunk, cfg.max_iterations - t);
        const Energy threshold = result.best_energy;

#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
        for (int r = 0; r < num_replicas; r++) {
            auto &rec = records[r];
            auto &rep = replicas[r];
            rec.energy = threshold;
            rec.iteration = -1;
            for (std::int64_t s = 1; s <= len; s++) {
                if (rep.step(tables[r], rngs[r]) && rep.energy() < rec.energy) {
                    rec.energy = rep.energy();
                    rec.iteration = t + s;
                    rec.bits = rep.bits();
                }
            }
        }
        t += len;

        int winner = -1;
        for (int r = 0; r < num_replicas; r++) {
            const auto &rec = records[r];
            if (rec.iteration < 0) {
                continue;
            }
            if (winner < 0 || rec.energy < records[winner].energy ||
                (rec.energy == records[winner].energy && rec.iteration < records[winner].iteration)) {
                winner = r;
            }
        }
        if (winner >= 0) {
            result.best_energy = records[winner].energy;
            result.best_iteration = records[winner].iteration;
            result.best_bits = records[winner].bits;
        }

        if (cfg.verify_energy) {
            for (const auto &rep : replicas) {
                if (evaluate(q, rep.bits()) != rep.energy()) {
                    throw std::logic_error("replica energy bookkeeping drifted from full evaluation");
                }
            }
        }

        if (cfg.exchange_interval > 0 && t % cfg.exchange_interval == 0) {
            for (int r = 0; r + 1 < num_replicas; r++) {
                const double dbeta = 1.0 / ladder[r] - 1.0 / ladder[r + 1];
                const double arg = dbeta * static_cast<double>(replicas[r].energy() - replicas[r + 1].energy());
                if (arg >= 0.0 || uniform_open(exchange_rng) < std::exp(arg)) {
                    std::swap(replicas[r], replicas[r + 1]);
                    replicas[r].reset_offset();
                    replicas[r + 1].reset_offset();
                }
            }
        }

        if (cfg.stall_iterations > 0 && t - result.best_iteration >= cfg.stall_iterations) {
            break;
        }
    }
    result.iterations_run = t;
    return result;
}

}  // namespace surfqubo::detail

#endif  // SURFQUBO_SRC_REPLICA_HPP
