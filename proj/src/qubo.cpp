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

#include "surfqubo/qubo.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace surfqubo {

Energy IsingProblem::energy(std::span<const std::int8_t> spins) const {
    if (spins.size() != num_spins) {
        throw std::invalid_argument("spin vector length does not match problem");
    }
    Energy total = 0;
    for (const auto &t : terms) {
        int prod = 1;
        for (auto s : t.spins) {
            prod *= spins[s];
        }
        total += t.coefficient * prod;
    }
    return total;
}

Energy IsingProblem::energy_of_errors(const ErrorPattern &errors) const {
    std::vector<std::int8_t> spins(errors.size());
    for (std::size_t i = 0; i < spins.size(); i++) {
        spins[i] = errors.bits[i] ? -1 : 1;
    }
    return energy(spins);
}

IsingProblem build_ising(const CodeLattice &lattice, const Syndrome &syndrome, Energy J, Energy h) {
    if (syndrome.size() != lattice.num_vertices()) {
        throw std::invalid_argument("syndrome length does not match lattice");
    }
    if (J <= 0 || h <= 0) {
        throw std::invalid_argument("J and h must be positive");
    }
    IsingProblem out;
    out.J = J;
    out.h = h;
    out.num_spins = lattice.num_data();
    out.terms.reserve(lattice.num_vertices() + lattice.num_data());
    for (std::size_t v = 0; v < lattice.num_vertices(); v++) {
        auto support = lattice.vertex_support(v);
        out.terms.push_back({-J * syndrome.values[v], {support.begin(), support.end()}});
    }
    for (std::size_t q = 0; q < lattice.num_data(); q++) {
        out.terms.push_back({-h, {static_cast<std::uint32_t>(q)}});
    }
    return out;
}

int max_correctable_chain_length(Energy J, Energy h) {
    if (J <= 0 || h <= 0) {
        throw std::invalid_argument("J and h must be positive");
    }
    // Largest n with 2nh < 4J.
    return static_cast<int>((2 * J - 1) / h);
}

QuboProblem::QuboProblem(
    std::size_t num_data,
    std::size_t num_total,
    const std::vector<std::tuple<std::uint32_t, std::uint32_t, Energy>> &couplings,
    std::vector<Energy> bias,
    Energy constant,
    Energy alpha,
    std::vector<AuxPair> aux_map)
    : num_data_(num_data), bias_(std::move(bias)), constant_(constant), alpha_(alpha), aux_map_(std::move(aux_map)) {
    if (bias_.size() != num_total || num_data > num_total) {
        throw std::invalid_argument("QUBO dimension mismatch");
    }
    // Merge duplicates and mirror into both rows.
    std::map<std::pair<std::uint32_t, std::uint32_t>, Energy> merged;
    for (const auto &[i, j, w] : couplings) {
        if (i == j) {
            throw std::invalid_argument("QUBO couplings must be off-diagonal");
        }
        if (i >= num_total || j >= num_total) {
            throw std::out_of_range("QUBO coupling index out of range");
        }
        merged[{i, j}] += w;
        merged[{j, i}] += w;
    }
    offsets_.assign(num_total + 1, 0);
    for (const auto &[key, w] : merged) {
        if (w != 0) {
            offsets_[key.first + 1]++;
        }
    }
    for (std::size_t i = 0; i < num_total; i++) {
        offsets_[i + 1] += offsets_[i];
    }
    cols_.reserve(offsets_.back());
    values_.reserve(offsets_.back());
    for (const auto &[key, w] : merged) {
        if (w != 0) {
            cols_.push_back(key.second);
            values_.push_back(w);
        }
    }
}

Energy QuboProblem::weight(std::size_t i, std::size_t j) const {
    auto cols = neighbors(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(j));
    if (it == cols.end() || *it != j) {
        return 0;
    }
    return weights(i)[static_cast<std::size_t>(it - cols.begin())];
}

namespace {

// Collects H' = sum quad[a,b] y_a y_b + sum lin[a] y_a + c.
struct PolynomialBuilder {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Energy> quad;
    std::vector<Energy> lin;
    Energy constant = 0;

    void add_quad(std::uint32_t a, std::uint32_t b, Energy coef) {
        if (a == b) {
            lin[a] += coef;  // y^2 = y
            return;
        }
        quad[{std::min(a, b), std::max(a, b)}] += coef;
    }
};

}  // namespace

QuboProblem quadratize(const IsingProblem &ising, Energy alpha) {
    if (alpha <= 0) {
        throw std::invalid_argument("penalty weight alpha must be positive");
    }
    const auto num_data = ising.num_spins;
    std::vector<AuxPair> aux;
    PolynomialBuilder poly;
    poly.lin.assign(num_data, 0);

    auto new_aux = [&](std::uint32_t a, std::uint32_t b) {
        aux.push_back({a, b});
        poly.lin.push_back(0);
        return static_cast<std::uint32_t>(num_data + aux.size() - 1);
    };

    for (const auto &term : ising.terms) {
        // Expand coef * prod(1 - 2 x_i) with auxiliaries for degree 3 and 4.
        const Energy c = term.coefficient;
        std::vector<std::uint32_t> s = term.spins;
        std::sort(s.begin(), s.end());
        poly.constant += c;
        for (auto i : s) {
            poly.lin[i] += -2 * c;
        }
        for (std::size_t a = 0; a < s.size(); a++) {
            for (std::size_t b = a + 1; b < s.size(); b++) {
                poly.add_quad(s[a], s[b], 4 * c);
            }
        }
        if (s.size() == 3) {
            auto z = new_aux(s[0], s[1]);
            poly.add_quad(z, s[2], -8 * c);
        } else if (s.size() == 4) {
            auto zm = new_aux(s[0], s[1]);
            auto zn = new_aux(s[2], s[3]);
            // Triples x0x1x2, x0x1x3, x0x2x3, x1x2x3.
            poly.add_quad(zm, s[2], -8 * c);
            poly.add_quad(zm, s[3], -8 * c);
            poly.add_quad(s[0], zn, -8 * c);
            poly.add_quad(s[1], zn, -8 * c);
            poly.add_quad(zm, zn, 16 * c);
        } else if (s.size() > 4) {
            throw std::invalid_argument("terms above degree 4 are not supported");
        }
    }

    for (std::size_t k = 0; k < aux.size(); k++) {
        auto z = static_cast<std::uint32_t>(num_data + k);
        poly.add_quad(aux[k].first, aux[k].second, alpha);
        poly.add_quad(z, aux[k].first, -2 * alpha);
        poly.add_quad(z, aux[k].second, -2 * alpha);
        poly.lin[z] += 3 * alpha;
    }

    // Match -1/2 sum W y y - sum V y + c.
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Energy>> couplings;
    couplings.reserve(poly.quad.size());
    for (const auto &[key, coef] : poly.quad) {
        couplings.emplace_back(key.first, key.second, -coef);
    }
    std::vector<Energy> bias(poly.lin.size());
    for (std::size_t i = 0; i < bias.size(); i++) {
        bias[i] = -poly.lin[i];
    }
    const auto total = bias.size();
    return QuboProblem(num_data, total, couplings, std::move(bias), poly.constant, alpha, std::move(aux));
}

Energy penalty_value(int x_i, int x_j, int z, Energy alpha) {
    return alpha * (x_i * x_j - 2 * z * (x_i + x_j) + 3 * z);
}

Energy evaluate(const QuboProblem &q, std::span<const std::uint8_t> bits) {
    if (bits.size() != q.num_variables()) {
        throw std::invalid_argument("bit vector length does not match QUBO");
    }
    Energy quad = 0;
    Energy lin = 0;
    for (std::size_t i = 0; i < bits.size(); i++) {
        if (!bits[i]) {
            continue;
        }
        lin += q.bias()[i];
        auto cols = q.neighbors(i);
        auto w = q.weights(i);
        for (std::size_t k = 0; k < cols.size(); k++) {
            quad += w[k] * bits[cols[k]];
        }
    }
    // quad counts every pair twice, which cancels the 1/2.
    return -quad / 2 - lin + q.constant();
}

Energy local_delta(const QuboProblem &q, std::span<const std::uint8_t> bits, std::size_t i) {
    if (bits.size() != q.num_variables()) {
        throw std::invalid_argument("bit vector length does not match QUBO");
    }
    if (i >= bits.size()) {
        throw std::out_of_range("variable index out of range");
    }
    Energy field = q.bias()[i];
    auto cols = q.neighbors(i);
    auto w = q.weights(i);
    for (std::size_t k = 0; k < cols.size(); k++) {
        field += w[k] * bits[cols[k]];
    }
    return bits[i] ? field : -field;
}

std::vector<std::uint8_t> consistent_assignment(const QuboProblem &q, std::span<const std::uint8_t> data_bits) {
    if (data_bits.size() != q.num_data()) {
        throw std::invalid_argument("data bit vector length does not match QUBO");
    }
    std::vector<std::uint8_t> out(q.num_variables(), 0);
    std::copy(data_bits.begin(), data_bits.end(), out.begin());
    for (std::size_t k = 0; k < q.num_aux(); k++) {
        const auto &p = q.aux_map()[k];
        out[q.num_data() + k] = static_cast<std::uint8_t>(data_bits[p.first] & data_bits[p.second]);
    }
    return out;
}

void write_qubo(std::ostream &out, const QuboProblem &q) {
    out << "qubo N " << q.num_variables() << " n_data " << q.num_data() << " c " << q.constant() << " alpha "
        << q.alpha() << "\n";
    for (std::size_t k = 0; k < q.num_aux(); k++) {
        out << "# aux " << (q.num_data() + k) << " " << q.aux_map()[k].first << " " << q.aux_map()[k].second << "\n";
    }
    for (std::size_t i = 0; i < q.num_variables(); i++) {
        if (q.bias()[i] != 0) {
            out << i << " " << i << " " << q.bias()[i] << "\n";
        }
        auto cols = q.neighbors(i);
        auto w = q.weights(i);
        for (std::size_t k = 0; k < cols.size(); k++) {
            if (cols[k] > i) {
                out << i << " " << cols[k] << " " << w[k] << "\n";
            }
        }
    }
}

QuboProblem read_qubo(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("read_qubo: missing header");
    }
    std::istringstream header(line);
    std::string tag, k1, k2, k3, k4;
    std::size_t n = 0, n_data = 0;
    Energy c = 0, alpha = 0;
    if (!(header >> tag >> k1 >> n >> k2 >> n_data >> k3 >> c >> k4 >> alpha) || tag != "qubo" || k1 != "N") {
        throw std::runtime_error("read_qubo: malformed header");
    }
    std::vector<Energy> bias(n, 0);
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Energy>> couplings;
    std::vector<AuxPair> aux;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, kw;
            std::uint32_t z, a, b;
            if (ls >> hash >> kw >> z >> a >> b && kw == "aux") {
                aux.push_back({a, b});
            }
            continue;
        }
        std::uint32_t i, j;
        Energy w;
        if (!(ls >> i >> j >> w) || i >= n || j >= n) {
            throw std::runtime_error("read_qubo: malformed entry: " + line);
        }
        if (i == j) {
            bias[i] = w;
        } else {
            couplings.emplace_back(i, j, w);
        }
    }
    return QuboProblem(n_data, n, couplings, std::move(bias), c, alpha, std::move(aux));
}

}  // namespace surfqubo
