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

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "replica.hpp"
#include "surfqubo/anneal.hpp"

namespace surfqubo {
namespace {

// One DA replica. Variables are grouped by their current flip cost, so a
// parallel trial over all N variables reduces to one binomial draw per
// distinct cost: given k eligible members of a group, a uniform pick among
// all eligible variables is a pick of group g with probability k_g / sum(k)
// followed by a uniform member of g.
class BucketReplica {
  public:
    BucketReplica(const QuboProblem &q, Energy offset_increment)
        : state_(q), increment_(offset_increment), var_bucket_(q.num_variables()), var_pos_(q.num_variables()) {
        for (std::size_t i = 0; i < state_.size(); i++) {
            insert(i, state_.delta(i));
        }
    }

    Energy energy() const { return state_.energy(); }
    const std::vector<std::uint8_t> &bits() const { return state_.bits(); }
    void reset_offset() { offset_ = 0; }

    bool step(const detail::MetropolisTable &table, std::mt19937_64 &rng) {
        eligible_.clear();
        std::uint64_t total = 0;
        for (const auto &[value, id] : sorted_) {
            const auto n = members_[id].size();
            if (n == 0) {
                continue;
            }
            const Energy x = value - offset_;
            std::uint64_t k;
            if (x <= 0) {
                k = n;
            } else if (x > table.x_max) {
                break;
            } else {
                k = sample_binomial(rng, n, table.accept[x], table.log_reject[x]);
            }
            if (k) {
                eligible_.emplace_back(id, k);
                total += k;
            }
        }
        if (total == 0) {
            offset_ += increment_;
            return false;
        }
        auto r = uniform_below(rng, total);
        std::uint32_t chosen = eligible_.back().first;
        for (const auto &[id, k] : eligible_) {
            if (r < k) {
                chosen = id;
                break;
            }
            r -= k;
        }
        const auto &group = members_[chosen];
        const auto var = group[uniform_below(rng, group.size())];
        state_.flip(var, [this](std::size_t i) { move(i, state_.delta(i)); });
        offset_ = 0;
        return true;
    }

  private:
    std::uint32_t bucket_for(Energy value) {
        auto it = std::lower_bound(
            sorted_.begin(), sorted_.end(), value, [](const auto &e, Energy v) { return e.first < v; });
        if (it != sorted_.end() && it->first == value) {
            return it->second;
        }
        auto id = static_cast<std::uint32_t>(members_.size());
        members_.emplace_back();
        bucket_value_.push_back(value);
        sorted_.insert(it, {value, id});
        return id;
    }

    void insert(std::size_t i, Energy value) {
        auto id = bucket_for(value);
        var_bucket_[i] = id;
        var_pos_[i] = static_cast<std::uint32_t>(members_[id].size());
        members_[id].push_back(static_cast<std::uint32_t>(i));
    }

    void move(std::size_t i, Energy value) {
        auto old = var_bucket_[i];
        if (bucket_value_[old] == value) {
            return;
        }
        auto &m = members_[old];
        auto pos = var_pos_[i];
        m[pos] = m.back();
        var_pos_[m[pos]] = pos;
        m.pop_back();
        insert(i, value);
    }

    detail::QuboState state_;
    Energy increment_;
    Energy offset_ = 0;
    std::vector<std::uint32_t> var_bucket_, var_pos_;
    std::vector<std::vector<std::uint32_t>> members_;
    std::vector<Energy> bucket_value_;
    std::vector<std::pair<Energy, std::uint32_t>> sorted_;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> eligible_;
};

}  // namespace

SolveResult solve_da(const QuboProblem &q, const AnnealConfig &cfg) {
    if (cfg.mode != AnnealMode::da_replica_exchange) {
        throw std::invalid_argument("solve_da requires mode da_replica_exchange");
    }
    return detail::run_replica_exchange<BucketReplica>(q, cfg, cfg.workers);
}

}  // namespace surfqubo
