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

#include "surfqubo/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace surfqubo {

std::size_t ErrorPattern::weight() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

ErrorPattern &ErrorPattern::operator^=(const ErrorPattern &other) {
    if (other.bits.size() != bits.size()) {
        throw std::invalid_argument("ErrorPattern xor: length mismatch");
    }
    for (std::size_t i = 0; i < bits.size(); i++) {
        bits[i] ^= other.bits[i];
    }
    return *this;
}

std::vector<std::uint32_t> Syndrome::defects() const {
    std::vector<std::uint32_t> out;
    for (std::size_t v = 0; v < values.size(); v++) {
        if (values[v] < 0) {
            out.push_back(static_cast<std::uint32_t>(v));
        }
    }
    return out;
}

bool Syndrome::trivial() const {
    return std::all_of(values.begin(), values.end(), [](std::int8_t b) { return b > 0; });
}

namespace {

// Appends the qubits found at the given doubled-grid positions, in order.
void push_support(
    const CodeLattice &lat,
    std::initializer_list<GridPoint> points,
    std::vector<std::uint32_t> &qubits,
    std::vector<std::uint32_t> &offsets) {
    for (auto p : points) {
        auto q = lat.qubit_at(p.row, p.col);
        if (q >= 0) {
            qubits.push_back(static_cast<std::uint32_t>(q));
        }
    }
    offsets.push_back(static_cast<std::uint32_t>(qubits.size()));
}

}  // namespace

CodeLattice::CodeLattice(int distance) : distance_(distance) {
    if (distance < 2) {
        throw std::invalid_argument("code distance must be >= 2, got " + std::to_string(distance));
    }
    const int d = distance;
    const int rows = 2 * d - 1;
    for (int r = 0; r < rows; r++) {
        for (int c = (r % 2); c < rows; c += 2) {
            qubit_coords_.push_back({r, c});
        }
    }

    vertex_offsets_.push_back(0);
    for (int r = 1; r < rows; r += 2) {
        for (int c = 0; c < rows; c += 2) {
            vertex_coords_.push_back({r, c});
            push_support(*this, {{r - 1, c}, {r, c - 1}, {r, c + 1}, {r + 1, c}}, vertex_qubits_, vertex_offsets_);
        }
    }

    face_offsets_.push_back(0);
    for (int r = 0; r < rows; r += 2) {
        for (int c = 1; c < rows; c += 2) {
            push_support(*this, {{r - 1, c}, {r, c - 1}, {r, c + 1}, {r + 1, c}}, face_qubits_, face_offsets_);
        }
    }

    // Invert vertex supports into per-qubit incidence lists.
    std::vector<std::vector<std::uint32_t>> incidence(num_data());
    for (std::size_t v = 0; v < num_vertices(); v++) {
        for (auto q : vertex_support(v)) {
            incidence[q].push_back(static_cast<std::uint32_t>(v));
        }
    }
    incidence_offsets_.push_back(0);
    for (const auto &list : incidence) {
        incidence_vertices_.insert(incidence_vertices_.end(), list.begin(), list.end());
        incidence_offsets_.push_back(static_cast<std::uint32_t>(incidence_vertices_.size()));
    }

    for (int r = 0; r < rows; r += 2) {
        logical_support_.push_back(static_cast<std::uint32_t>(qubit_at(r, 0)));
    }
    for (int k = 0; k < rows; k++) {
        detector_support_.push_back(static_cast<std::uint32_t>(qubit_at(k, k)));
    }
}

std::int64_t CodeLattice::qubit_at(int row, int col) const {
    const int rows = 2 * distance_ - 1;
    if (row < 0 || col < 0 || row >= rows || col >= rows || (row % 2) != (col % 2)) {
        return -1;
    }
    std::int64_t even_rows = (row + 1) / 2;
    std::int64_t odd_rows = row / 2;
    return even_rows * distance_ + odd_rows * (distance_ - 1) + col / 2;
}

std::span<const std::uint32_t> CodeLattice::vertex_support(std::size_t v) const {
    return {vertex_qubits_.data() + vertex_offsets_[v], vertex_qubits_.data() + vertex_offsets_[v + 1]};
}

std::span<const std::uint32_t> CodeLattice::qubit_incidence(std::size_t q) const {
    return {
        incidence_vertices_.data() + incidence_offsets_[q],
        incidence_vertices_.data() + incidence_offsets_[q + 1]};
}

std::span<const std::uint32_t> CodeLattice::face_support(std::size_t f) const {
    return {face_qubits_.data() + face_offsets_[f], face_qubits_.data() + face_offsets_[f + 1]};
}

CodeLattice build_lattice(int distance) {
    return CodeLattice(distance);
}

ErrorPattern sample_errors(const CodeLattice &lattice, double p, std::mt19937_64 &rng) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
    ErrorPattern out(lattice.num_data());
    for (auto &b : out.bits) {
        // 53-bit uniform in [0, 1); p == 1 always fires, p == 0 never does.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        b = u < p ? 1 : 0;
    }
    return out;
}

Syndrome extract_syndrome(const CodeLattice &lattice, const ErrorPattern &errors) {
    if (errors.size() != lattice.num_data()) {
        throw std::invalid_argument("error pattern length does not match lattice");
    }
    Syndrome s;
    s.values.resize(lattice.num_vertices());
    for (std::size_t v = 0; v < lattice.num_vertices(); v++) {
        int parity = 0;
        for (auto q : lattice.vertex_support(v)) {
            parity ^= errors.bits[q];
        }
        s.values[v] = parity ? -1 : 1;
    }
    return s;
}

int logical_parity(const CodeLattice &lattice, const ErrorPattern &errors) {
    if (errors.size() != lattice.num_data()) {
        throw std::invalid_argument("error pattern length does not match lattice");
    }
    int parity = 0;
    for (auto q : lattice.detector_support()) {
        parity ^= errors.bits[q];
    }
    return parity;
}

ErrorPattern pattern_from_support(const CodeLattice &lattice, std::span<const std::uint32_t> qubits) {
    ErrorPattern out(lattice.num_data());
    for (auto q : qubits) {
        if (q >= out.size()) {
            throw std::out_of_range("qubit index out of range");
        }
        out.bits[q] ^= 1;
    }
    return out;
}

}  // namespace surfqubo
