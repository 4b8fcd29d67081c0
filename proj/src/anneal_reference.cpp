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
#include <cstdint>
#include <random>
#include <vector>

#include "replica.hpp"
#include "surfqubo/anneal.hpp"

namespace surfqubo {
namespace {

// Literal parallel trial: one Metropolis test per variable per step.
class ScanReplica {
  public:
    ScanReplica(const QuboProblem &q, Energy offset_increment) : state_(q), increment_(offset_increment) {}

    Energy energy() const { return state_.energy(); }
    const std::vector<std::uint8_t> &bits() const { return state_.bits(); }
    void reset_offset() { offset_ = 0; }

    bool step(const detail::MetropolisTable &table, std::mt19937_64 &rng) {
        eligible_.clear();
        for (std::size_t i = 0; i < state_.size(); i++) {
            const Energy x = state_.delta(i) - offset_;
            if (x <= 0 || uniform_open(rng) < std::exp(-static_cast<double>(x) / table.temperature)) {
                eligible_.push_back(i);
            }
        }
        if (eligible_.empty()) {
            offset_ += increment_;
            return false;
        }
        state_.flip(eligible_[uniform_below(rng, eligible_.size())]);
        offset_ = 0;
        return true;
    }

  private:
    detail::QuboState state_;
    Energy increment_;
    Energy offset_ = 0;
    std::vector<std::size_t> eligible_;
};

}  // namespace

SolveResult solve_da_reference(const QuboProblem &q, const AnnealConfig &cfg) {
    if (cfg.mode != AnnealMode::da_replica_exchange) {
        throw std::invalid_argument("solve_da_reference requires mode da_replica_exchange");
    }
    return detail::run_replica_exchange<ScanReplica>(q, cfg, 1);
}

}  // namespace surfqubo
