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

#ifndef SURFQUBO_MWPM_HPP
#define SURFQUBO_MWPM_HPP

#include <cstdint>
#include <vector>

#include "surfqubo/lattice.hpp"

namespace surfqubo {

/// Complete graph over the syndrome defects, each paired with a private
/// boundary node. Lattice distances use unit weight per qubit.
class DefectGraph {
  public:
    DefectGraph() = default;
    DefectGraph(const CodeLattice &lattice, const Syndrome &syndrome);

    std::size_t num_defects() const { return defects_.size(); }
    const std::vector<std::uint32_t> &defects() const { return defects_; }
    std::size_t num_data() const { return num_data_; }

    /// Shortest-path length between defects a and b (indices into defects()).
    std::int64_t pair_weight(std::size_t a, std::size_t b) const { return pair_weight_[a * defects_.size() + b]; }
    /// Shortest-path length from defect a to a chain-terminating boundary.
    std::int64_t boundary_weight(std::size_t a) const { return boundary_weight_[a]; }

    /// Qubits of one shortest chain realizing pair_weight(a, b).
    std::vector<std::uint32_t> pair_path(std::size_t a, std::size_t b) const;
    /// Qubits of one shortest chain realizing boundary_weight(a).
    std::vector<std::uint32_t> boundary_path(std::size_t a) const;

  private:
    std::vector<std::uint32_t> walk_back(std::size_t a, std::uint32_t vertex) const;

    std::size_t num_data_ = 0;
    std::size_t num_vertices_ = 0;
    std::vector<std::uint32_t> defects_;
    std::vector<std::int64_t> pair_weight_;
    std::vector<std::int64_t> boundary_weight_;
    std::vector<std::uint32_t> boundary_exit_vertex_;
    std::vector<std::uint32_t> boundary_exit_qubit_;
    // Per defect: BFS predecessor qubit for every vertex (-1 at the root).
    std::vector<std::int64_t> via_qubit_;
    std::vector<std::uint32_t> via_vertex_;
};

inline DefectGraph build_defect_graph(const CodeLattice &lattice, const Syndrome &syndrome) {
    return DefectGraph(lattice, syndrome);
}

struct MatchingDecode {
    ErrorPattern correction;
    /// Sum of matched edge weights (equals correction.weight() unless
    /// matched chains overlap and cancel).
    std::int64_t weight = 0;
    /// Edge examinations performed by the blossom matcher.
    std::uint64_t iterations = 0;
    /// partner[a] = matched defect index, or -1 for the boundary.
    std::vector<std::int64_t> partner;
};

MatchingDecode mwpm_decode(const DefectGraph &graph);

/// Exhaustive minimum over all pairings with boundary assignments.
/// Throws std::length_error above 10 defects.
std::int64_t brute_force_matching(const DefectGraph &graph);

}  // namespace surfqubo

#endif  // SURFQUBO_MWPM_HPP
