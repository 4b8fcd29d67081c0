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

#ifndef SURFQUBO_LATTICE_HPP
#define SURFQUBO_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace surfqubo {

/// Pauli-Z error locations; bits[i] == 1 means data qubit i carries an error.
struct ErrorPattern {
    std::vector<std::uint8_t> bits;

    ErrorPattern() = default;
    explicit ErrorPattern(std::size_t num_data) : bits(num_data, 0) {}

    std::size_t size() const { return bits.size(); }
    std::size_t weight() const;
    ErrorPattern &operator^=(const ErrorPattern &other);
    friend ErrorPattern operator^(ErrorPattern a, const ErrorPattern &b) { return a ^= b; }
    bool operator==(const ErrorPattern &) const = default;
};

/// X-type stabilizer outcomes, one +1/-1 entry per vertex.
struct Syndrome {
    std::vector<std::int8_t> values;

    std::size_t size() const { return values.size(); }
    /// Vertices with outcome -1, in increasing order.
    std::vector<std::uint32_t> defects() const;
    bool trivial() const;
    bool operator==(const Syndrome &) const = default;
};

/// Position on the doubled grid: data qubit (i, j) sits at (2i, 2j), data
/// qubit (i+1/2, j+1/2) at (2i+1, 2j+1) and vertex (i+1/2, j) at (2i+1, 2j).
struct GridPoint {
    int row;
    int col;
};

/// Planar surface code of distance d.
///
/// Data qubits are numbered row-major on the doubled grid, so each vertex
/// support is listed in increasing qubit order: top, left, right, bottom.
/// Rows 0 and 2d-2 hold the qubits that touch a single vertex; Z chains
/// terminate there.
class CodeLattice {
  public:
    explicit CodeLattice(int distance);

    int distance() const { return distance_; }
    std::size_t num_data() const { return qubit_coords_.size(); }
    std::size_t num_vertices() const { return vertex_coords_.size(); }
    std::size_t num_faces() const { return face_offsets_.size() - 1; }

    std::span<const std::uint32_t> vertex_support(std::size_t v) const;
    std::span<const std::uint32_t> qubit_incidence(std::size_t q) const;
    /// Z-type plaquette stabilizer support; multiplying a Z error by one of
    /// these leaves both the syndrome and the logical class unchanged.
    std::span<const std::uint32_t> face_support(std::size_t f) const;

    /// Vertical column of qubits connecting the two chain-terminating
    /// boundaries (a representative logical Z).
    const std::vector<std::uint32_t> &logical_support() const { return logical_support_; }
    /// Corner-to-corner staircase that meets every vertex and face support
    /// an even number of times and the logical column exactly once.
    const std::vector<std::uint32_t> &detector_support() const { return detector_support_; }

    GridPoint qubit_coord(std::size_t q) const { return qubit_coords_[q]; }
    GridPoint vertex_coord(std::size_t v) const { return vertex_coords_[v]; }
    /// Qubit index at a doubled-grid position, or -1 if none is there.
    std::int64_t qubit_at(int row, int col) const;

  private:
    int distance_;
    std::vector<GridPoint> qubit_coords_;
    std::vector<GridPoint> vertex_coords_;
    std::vector<std::uint32_t> vertex_offsets_, vertex_qubits_;
    std::vector<std::uint32_t> incidence_offsets_, incidence_vertices_;
    std::vector<std::uint32_t> face_offsets_, face_qubits_;
    std::vector<std::uint32_t> logical_support_;
    std::vector<std::uint32_t> detector_support_;
};

CodeLattice build_lattice(int distance);

/// Independent Z errors with probability p per qubit.
ErrorPattern sample_errors(const CodeLattice &lattice, double p, std::mt19937_64 &rng);

Syndrome extract_syndrome(const CodeLattice &lattice, const ErrorPattern &errors);

/// Parity of the overlap with detector_support(). For errors with a trivial
/// syndrome, 1 means the error is a nontrivial logical operator.
int logical_parity(const CodeLattice &lattice, const ErrorPattern &errors);

ErrorPattern pattern_from_support(const CodeLattice &lattice, std::span<const std::uint32_t> qubits);

}  // namespace surfqubo

#endif  // SURFQUBO_LATTICE_HPP
