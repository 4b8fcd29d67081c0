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

#ifndef SURFQUBO_BLOSSOM_HPP
#define SURFQUBO_BLOSSOM_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace surfqubo {

struct WeightedEdge {
    std::uint32_t u;
    std::uint32_t v;
    std::int64_t weight;
};

/// Maximum-weight matching on a general graph by Edmonds' primal-dual
/// blossom algorithm, O(n^3). With max_cardinality the result is a maximum
/// weight matching among maximum-cardinality matchings. Integer weights keep
/// every dual variable integral.
///
/// Returns mate[v] (or -1 if v is unmatched). If edge_scans is non-null it
/// receives the number of edge examinations made while growing alternating
/// trees.
std::vector<std::int64_t> max_weight_matching(
    std::size_t num_vertices,
    std::span<const WeightedEdge> edges,
    bool max_cardinality,
    std::uint64_t *edge_scans = nullptr);

}  // namespace surfqubo

#endif  // SURFQUBO_BLOSSOM_HPP
