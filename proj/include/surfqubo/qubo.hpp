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

#ifndef SURFQUBO_QUBO_HPP
#define SURFQUBO_QUBO_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "surfqubo/lattice.hpp"

namespace surfqubo {

/// All energies are exact integers.
using Energy = std::int64_t;

struct IsingTerm {
    Energy coefficient;
    std::vector<std::uint32_t> spins;
};

/// H(sigma) = sum over terms of coefficient * prod(sigma_i). One multi-spin
/// term per vertex (coefficient -J*b_v) followed by one field term per qubit
/// (coefficient -h).
struct IsingProblem {
    std::vector<IsingTerm> terms;
    std::size_t num_spins = 0;
    Energy J = 0;
    Energy h = 0;

    /// Spins are +1/-1.
    Energy energy(std::span<const std::int8_t> spins) const;
    /// Energy of the spin state sigma_i = 1 - 2 x_i for an error pattern x.
    Energy energy_of_errors(const ErrorPattern &errors) const;
};

IsingProblem build_ising(const CodeLattice &lattice, const Syndrome &syndrome, Energy J, Energy h);

/// Largest chain length n whose removal still pays off, i.e. -4J + 2nh < 0.
int max_correctable_chain_length(Energy J, Energy h);

/// Auxiliary variable z = x_first * x_second.
struct AuxPair {
    std::uint32_t first;
    std::uint32_t second;
};

/// H'(y) = -1/2 sum_ij W_ij y_i y_j - sum_i V_i y_i + c over binary y.
/// Variables [0, num_data) are the data bits x, the rest are auxiliaries.
/// W is symmetric with zero diagonal and stored in compressed rows.
class QuboProblem {
  public:
    QuboProblem() = default;
    QuboProblem(
        std::size_t num_data,
        std::size_t num_total,
        const std::vector<std::tuple<std::uint32_t, std::uint32_t, Energy>> &couplings,
        std::vector<Energy> bias,
        Energy constant,
        Energy alpha,
        std::vector<AuxPair> aux_map);

    std::size_t num_variables() const { return bias_.size(); }
    std::size_t num_data() const { return num_data_; }
    std::size_t num_aux() const { return aux_map_.size(); }
    Energy constant() const { return constant_; }
    Energy alpha() const { return alpha_; }
    const std::vector<Energy> &bias() const { return bias_; }
    const std::vector<AuxPair> &aux_map() const { return aux_map_; }

    std::span<const std::uint32_t> neighbors(std::size_t i) const {
        return {cols_.data() + offsets_[i], cols_.data() + offsets_[i + 1]};
    }
    std::span<const Energy> weights(std::size_t i) const {
        return {values_.data() + offsets_[i], values_.data() + offsets_[i + 1]};
    }
    /// W_ij, zero when absent.
    Energy weight(std::size_t i, std::size_t j) const;
    std::size_t num_nonzeros() const { return values_.size(); }

  private:
    std::size_t num_data_ = 0;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<std::uint32_t> cols_;
    std::vector<Energy> values_;
    std::vector<Energy> bias_;
    Energy constant_ = 0;
    Energy alpha_ = 0;
    std::vector<AuxPair> aux_map_;
};

/// Reduces the Ising problem to QUBO form. Each weight-4 vertex (qubits
/// sorted a < b < c < d) gets z = x_a x_b and z' = x_c x_d; each weight-3
/// vertex gets one auxiliary for its two lowest qubits. alpha weights the
/// penalty enforcing every auxiliary's product constraint.
QuboProblem quadratize(const IsingProblem &ising, Energy alpha);

/// The usual choice alpha = 8J.
inline Energy default_alpha(Energy J) { return 8 * J; }

/// alpha * (x_i x_j - 2 z (x_i + x_j) + 3 z).
Energy penalty_value(int x_i, int x_j, int z, Energy alpha);

Energy evaluate(const QuboProblem &q, std::span<const std::uint8_t> bits);

/// evaluate(bits with bit i flipped) - evaluate(bits).
Energy local_delta(const QuboProblem &q, std::span<const std::uint8_t> bits, std::size_t i);

/// Completes data bits with consistent auxiliaries z = x_i x_j.
std::vector<std::uint8_t> consistent_assignment(const QuboProblem &q, std::span<const std::uint8_t> data_bits);

/// Sparse text export. First line: "qubo N <N> n_data <n> c <c> alpha <a>".
/// Then "i i V_i" for every nonzero bias and "i j W_ij" (i < j) for every
/// nonzero coupling.
void write_qubo(std::ostream &out, const QuboProblem &q);
QuboProblem read_qubo(std::istream &in);

}  // namespace surfqubo

#endif  // SURFQUBO_QUBO_HPP
