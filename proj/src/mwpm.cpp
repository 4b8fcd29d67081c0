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

#include "surfqubo/mwpm.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "surfqubo/blossom.hpp"

namespace surfqubo {

DefectGraph::DefectGraph(const CodeLattice &lattice, const Syndrome &syndrome)
    : num_data_(lattice.num_data()), num_vertices_(lattice.num_vertices()), defects_(syndrome.defects()) {
    if (syndrome.size() != lattice.num_vertices()) {
        throw std::invalid_argument("syndrome length does not match lattice");
    }
    const auto k = defects_.size();
    const auto nv = num_vertices_;
    pair_weight_.assign(k * k, 0);
    boundary_weight_.assign(k, 0);
    boundary_exit_vertex_.assign(k, 0);
    boundary_exit_qubit_.assign(k, 0);
    via_qubit_.assign(k * nv, -1);
    via_vertex_.assign(k * nv, 0);

    std::vector<std::int64_t> dist(nv);
    std::vector<std::uint32_t> queue;
    queue.reserve(nv);
    for (std::size_t a = 0; a < k; a++) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[defects_[a]] = 0;
        queue.push_back(defects_[a]);
        std::int64_t best_boundary = std::numeric_limits<std::int64_t>::max();
        for (std::size_t head = 0; head < queue.size(); head++) {
            const auto u = queue[head];
            for (auto q : lattice.vertex_support(u)) {
                auto inc = lattice.qubit_incidence(q);
                if (inc.size() == 1) {
                    if (dist[u] + 1 < best_boundary) {
                        best_boundary = dist[u] + 1;
                        boundary_exit_vertex_[a] = u;
                        boundary_exit_qubit_[a] = q;
                    }
                    continue;
                }
                const auto w = inc[0] == u ? inc[1] : inc[0];
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    via_qubit_[a * nv + w] = q;
                    via_vertex_[a * nv + w] = u;
                    queue.push_back(w);
                }
            }
        }
        boundary_weight_[a] = best_boundary;
        for (std::size_t b = 0; b < k; b++) {
            pair_weight_[a * k + b] = dist[defects_[b]];
        }
    }
}

std::vector<std::uint32_t> DefectGraph::walk_back(std::size_t a, std::uint32_t vertex) const {
    std::vector<std::uint32_t> out;
    while (via_qubit_[a * num_vertices_ + vertex] >= 0) {
        out.push_back(static_cast<std::uint32_t>(via_qubit_[a * num_vertices_ + vertex]));
        vertex = via_vertex_[a * num_vertices_ + vertex];
    }
    return out;
}

std::vector<std::uint32_t> DefectGraph::pair_path(std::size_t a, std::size_t b) const {
    return walk_back(a, defects_[b]);
}

std::vector<std::uint32_t> DefectGraph::boundary_path(std::size_t a) const {
    auto out = walk_back(a, boundary_exit_vertex_[a]);
    out.push_back(boundary_exit_qubit_[a]);
    return out;
}

MatchingDecode mwpm_decode(const DefectGraph &graph) {
    const auto k = graph.num_defects();
    MatchingDecode out;
    out.correction = ErrorPattern(graph.num_data());
    out.partner.assign(k, -1);
    if (k == 0) {
        return out;
    }

    // Vertices [0, k) are defects, [k, 2k) their boundary twins. Maximizing
    // (max_w - w) over perfect matchings minimizes the total weight.
    std::int64_t max_w = 0;
    for (std::size_t a = 0; a < k; a++) {
        max_w = std::max(max_w, graph.boundary_weight(a));
        for (std::size_t b = a + 1; b < k; b++) {
            max_w = std::max(max_w, graph.pair_weight(a, b));
        }
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(k * k + k);
    for (std::size_t a = 0; a < k; a++) {
        const auto ua = static_cast<std::uint32_t>(a);
        edges.push_back({ua, static_cast<std::uint32_t>(k + a), max_w - graph.boundary_weight(a)});
        for (std::size_t b = a + 1; b < k; b++) {
            const auto ub = static_cast<std::uint32_t>(b);
            edges.push_back({ua, ub, max_w - graph.pair_weight(a, b)});
            edges.push_back({static_cast<std::uint32_t>(k + a), static_cast<std::uint32_t>(k + b), max_w});
        }
    }
    auto mate = max_weight_matching(2 * k, edges, true, &out.iterations);

    for (std::size_t a = 0; a < k; a++) {
        const auto m = mate[a];
        if (m < 0) {
            throw std::logic_error("blossom matcher returned an imperfect matching");
        }
        std::vector<std::uint32_t> path;
        if (static_cast<std::size_t>(m) >= k) {
            out.partner[a] = -1;
            out.weight += graph.boundary_weight(a);
            path = graph.boundary_path(a);
        } else {
            out.partner[a] = m;
            if (static_cast<std::size_t>(m) < a) {
                continue;
            }
            out.weight += graph.pair_weight(a, static_cast<std::size_t>(m));
            path = graph.pair_path(a, static_cast<std::size_t>(m));
        }
        for (auto q : path) {
            out.correction.bits[q] ^= 1;
        }
    }
    return out;
}

std::int64_t brute_force_matching(const DefectGraph &graph) {
    const auto k = graph.num_defects();
    if (k > 10) {
        throw std::length_error("brute_force_matching supports at most 10 defects");
    }
    // Lowest unused defect goes to the boundary or to some later defect.
    std::vector<char> used(k, 0);
    std::function<std::int64_t(std::size_t)> best = [&](std::size_t from) -> std::int64_t {
        std::size_t a = from;
        while (a < k && used[a]) {
            a++;
        }
        if (a == k) {
            return 0;
        }
        used[a] = 1;
        std::int64_t result = graph.boundary_weight(a) + best(a + 1);
        for (std::size_t b = a + 1; b < k; b++) {
            if (!used[b]) {
                used[b] = 1;
                result = std::min(result, graph.pair_weight(a, b) + best(a + 1));
                used[b] = 0;
            }
        }
        used[a] = 0;
        return result;
    };
    return best(0);
}

}  // namespace surfqubo
