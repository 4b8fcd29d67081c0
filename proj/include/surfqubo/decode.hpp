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

#ifndef SURFQUBO_DECODE_HPP
#define SURFQUBO_DECODE_HPP

#include <cstdint>
#include <string>

#include "surfqubo/anneal.hpp"
#include "surfqubo/lattice.hpp"
#include "surfqubo/qubo.hpp"

namespace surfqubo {

enum class DecodeMethod { da, sa, mwpm };

std::string to_string(DecodeMethod method);
DecodeMethod parse_decode_method(const std::string &text);

enum class ResidualClass { trivial, logical, open };

std::string to_string(ResidualClass cls);

struct DecoderParams {
    Energy J = 1024;
    Energy h = 1;
    /// Penalty weight; 0 selects 8J.
    Energy alpha = 0;
    /// Used by da and sa; mode is overridden by the decode method.
    AnnealConfig anneal;
};

struct DecodeOutcome {
    ErrorPattern estimate;
    bool syndrome_satisfied = false;
    /// The fields below are only meaningful when the actual error was given.
    ResidualClass residual = ResidualClass::trivial;
    /// Residual is not a product of stabilizers (logical or open).
    bool logical_error = false;
    /// Syndrome satisfied and weight(estimate) <= weight(actual).
    bool ground_state_proxy = false;
    /// Solver best energy (Ising energy of the estimate for mwpm).
    Energy energy = 0;
    /// Solver best_iteration, or blossom edge scans for mwpm.
    std::int64_t iterations = 0;
};

/// Decodes a syndrome. Only data bits of an annealer's assignment are read;
/// auxiliaries are discarded. When actual is non-null the residual class and
/// ground-state proxy are filled in.
DecodeOutcome decode(
    const CodeLattice &lattice,
    const Syndrome &syndrome,
    DecodeMethod method,
    const DecoderParams &params,
    const ErrorPattern *actual = nullptr);

/// trivial: actual ^ estimate is a product of stabilizers; logical: it has
/// trivial syndrome but flips the encoded qubit; open: syndrome not matched.
ResidualClass classify_residual(const CodeLattice &lattice, const ErrorPattern &actual, const ErrorPattern &estimate);

/// Minimum error weight consistent with the syndrome, by exhaustive search.
/// Throws std::length_error for more than 16 data qubits.
std::size_t ground_state_oracle(const CodeLattice &lattice, const Syndrome &syndrome);

}  // namespace surfqubo

#endif  // SURFQUBO_DECODE_HPP
