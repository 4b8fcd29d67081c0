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

#include "surfqubo/decode.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "surfqubo/mwpm.hpp"

namespace surfqubo {

std::string to_string(DecodeMethod method) {
    switch (method) {
        case DecodeMethod::da:
            return "da";
        case DecodeMethod::sa:
            return "sa";
        case DecodeMethod::mwpm:
            return "mwpm";
    }
    return "?";
}

DecodeMethod parse_decode_method(const std::string &text) {
    if (text == "da") {
        return DecodeMethod::da;
    }
    if (text == "sa") {
        return DecodeMethod::sa;
    }
    if (text == "mwpm") {
        return DecodeMethod::mwpm;
    }
    throw std::invalid_argument("unknown decode method: " + text);
}

std::string to_string(ResidualClass cls) {
    switch (cls) {
        case ResidualClass::trivial:
            return "trivial";
        case ResidualClass::logical:
            return "logical";
        case ResidualClass::open:
            return "open";
    }
    return "?";
}

ResidualClass classify_residual(const CodeLattice &lattice, const ErrorPattern &actual, const ErrorPattern &estimate) {
    auto residual = actual ^ estimate;
    if (!extract_syndrome(lattice, residual).trivial()) {
        return ResidualClass::open;
    }
    return logical_parity(lattice, residual) ? ResidualClass::logical : ResidualClass::trivial;
}

DecodeOutcome decode(
    const CodeLattice &lattice,
    const Syndrome &syndrome,
    DecodeMethod method,
    const DecoderParams &params,
    const ErrorPattern *actual) {
    if (syndrome.size() != lattice.num_vertices()) {
        throw std::invalid_argument("syndrome length does not match lattice");
    }
    DecodeOutcome out;
    auto ising = build_ising(lattice, syndrome, params.J, params.h);
    if (method == DecodeMethod::mwpm) {
        auto m = mwpm_decode(build_defect_graph(lattice, syndrome));
        out.estimate = std::move(m.correction);
        out.iterations = static_cast<std::int64_t>(m.iterations);
        out.energy = ising.energy_of_errors(out.estimate);
    } else {
        auto qubo = quadratize(ising, params.alpha > 0 ? params.alpha : default_alpha(params.J));
        auto cfg = params.anneal;
        cfg.mode = method == DecodeMethod::sa ? AnnealMode::sa : AnnealMode::da_replica_exchange;
        auto r = solve(qubo, cfg);
        out.estimate = ErrorPattern(lattice.num_data());
        std::copy_n(r.best_bits.begin(), lattice.num_data(), out.estimate.bits.begin());
        out.energy = r.best_energy;
        out.iterations = r.best_iteration;
    }
    out.syndrome_satisfied = extract_syndrome(lattice, out.estimate) == syndrome;
    if (actual) {
        out.residual = classify_residual(lattice, *actual, out.estimate);
        out.logical_error = out.residual != ResidualClass::trivial;
        out.ground_state_proxy = out.syndrome_satisfied && out.estimate.weight() <= actual->weight();
    }
    return out;
}

std::size_t ground_state_oracle(const CodeLattice &lattice, const Syndrome &syndrome) {
    const auto n = lattice.num_data();
    if (n > 16) {
        throw std::length_error("ground_state_oracle supports at most 16 data qubits");
    }
    if (syndrome.size() != lattice.num_vertices()) {
        throw std::invalid_argument("syndrome length does not match lattice");
    }
    // Syndrome bit masks per qubit; walk all patterns in Gray-code order.
    std::vector<std::uint64_t> qubit_mask(n, 0);
    for (std::size_t v = 0; v < lattice.num_vertices(); v++) {
        for (auto q : lattice.vertex_support(v)) {
            qubit_mask[q] |= std::uint64_t{1} << v;
        }
    }
    std::uint64_t target = 0;
    for (std::size_t v = 0; v < syndrome.size(); v++) {
        if (syndrome.values[v] < 0) {
            target |= std::uint64_t{1} << v;
        }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t current = 0;
    std::uint32_t pattern = 0;
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t g = 0; g < count; g++) {
        if (g > 0) {
            auto bit = static_cast<std::size_t>(std::countr_zero(g));
            pattern ^= std::uint32_t{1} << bit;
            current ^= qubit_mask[bit];
        }
        if (current == target) {
            best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(pattern)));
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) {
        throw std::invalid_argument("syndrome is not reachable by any error pattern");
    }
    return best;
}

}  // namespace surfqubo
