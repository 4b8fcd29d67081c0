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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "surfqubo/decode.hpp"
#include "surfqubo/mwpm.hpp"

namespace surfqubo {
namespace {

// SA follows a fixed cooling schedule, so it runs the whole budget.
DecoderParams fast_params(DecodeMethod method = DecodeMethod::da) {
    DecoderParams p;
    p.anneal.replicas = 32;
    p.anneal.max_iterations = 200000;
    p.anneal.stall_iterations = method == DecodeMethod::sa ? 0 : 2000;
    return p;
}

TEST(DecodeMethod, Names) {
    for (auto m : {DecodeMethod::da, DecodeMethod::sa, DecodeMethod::mwpm}) {
        EXPECT_EQ(parse_decode_method(to_string(m)), m);
    }
    EXPECT_THROW(parse_decode_method("uf"), std::invalid_argument);
    EXPECT_EQ(to_string(ResidualClass::open), "open");
}

class DecodeAll : public ::testing::TestWithParam<DecodeMethod> {};

TEST_P(DecodeAll, EmptySyndrome) {
    auto lat = build_lattice(5);
    ErrorPattern none(lat.num_data());
    auto out = decode(lat, extract_syndrome(lat, none), GetParam(), fast_params(GetParam()), &none);
    EXPECT_EQ(out.estimate.weight(), 0u);
    EXPECT_TRUE(out.syndrome_satisfied);
    EXPECT_FALSE(out.logical_error);
    EXPECT_EQ(out.residual, ResidualClass::trivial);
    EXPECT_TRUE(out.ground_state_proxy);
    EXPECT_EQ(out.iterations, 0);
}

TEST_P(DecodeAll, SingleErrorIsCorrected) {
    auto lat = build_lattice(3);
    auto params = fast_params(GetParam());
    if (GetParam() == DecodeMethod::sa) {
        // A single cooling chain at J=1024 freezes into whichever boundary
        // route it meets first; the demo coupling leaves the barriers crossable.
        params.J = 4;
    }
    for (std::size_t q = 0; q < lat.num_data(); q++) {
        if (lat.qubit_incidence(q).size() != 2) {
            continue;
        }
        ErrorPattern actual(lat.num_data());
        actual.bits[q] = 1;
        auto out = decode(lat, extract_syndrome(lat, actual), GetParam(), params, &actual);
        auto residual = actual ^ out.estimate;
        EXPECT_TRUE(extract_syndrome(lat, residual).trivial());
        EXPECT_EQ(logical_parity(lat, residual), 0);
        EXPECT_EQ(out.residual, ResidualClass::trivial);
        EXPECT_EQ(out.estimate.weight(), 1u);
        EXPECT_EQ(out.energy, build_ising(lat, extract_syndrome(lat, actual), params.J, params.h)
                                  .energy_of_errors(out.estimate));
    }
}

TEST_P(DecodeAll, RandomSyndromesSatisfied) {
    auto lat = build_lattice(5);
    std::mt19937_64 rng(90);
    auto params = fast_params(GetParam());
    for (int trial = 0; trial < 20; trial++) {
        auto actual = sample_errors(lat, 0.08, rng);
        params.anneal.seed = static_cast<std::uint64_t>(trial);
        auto out = decode(lat, extract_syndrome(lat, actual), GetParam(), params, &actual);
        EXPECT_TRUE(out.syndrome_satisfied);
        EXPECT_EQ(out.syndrome_satisfied, extract_syndrome(lat, out.estimate) == extract_syndrome(lat, actual));
        EXPECT_EQ(out.logical_error, out.residual != ResidualClass::trivial);
        if (out.ground_state_proxy && out.residual != ResidualClass::open) {
            auto ising = build_ising(lat, extract_syndrome(lat, actual), params.J, params.h);
            EXPECT_LE(ising.energy_of_errors(out.estimate), ising.energy_of_errors(actual));
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Methods, DecodeAll, ::testing::Values(DecodeMethod::da, DecodeMethod::sa, DecodeMethod::mwpm),
                         [](const auto &info) { return to_string(info.param); });

TEST(Decode, LengthMismatch) {
    auto lat = build_lattice(3);
    EXPECT_THROW(decode(lat, Syndrome{{1, 1}}, DecodeMethod::mwpm, DecoderParams{}), std::invalid_argument);
}

TEST(Decode, WithoutActualLeavesDiagnosticsUnset) {
    auto lat = build_lattice(4);
    std::mt19937_64 rng(1);
    auto s = extract_syndrome(lat, sample_errors(lat, 0.1, rng));
    auto out = decode(lat, s, DecodeMethod::mwpm, DecoderParams{});
    EXPECT_TRUE(out.syndrome_satisfied);
    EXPECT_FALSE(out.logical_error);
    EXPECT_FALSE(out.ground_state_proxy);
}

TEST(ClassifyResidual, Examples) {
    auto lat = build_lattice(3);
    std::mt19937_64 rng(4);
    auto logical = pattern_from_support(lat, lat.logical_support());
    for (int trial = 0; trial < 50; trial++) {
        auto actual = sample_errors(lat, 0.3, rng);
        EXPECT_EQ(classify_residual(lat, actual, actual), ResidualClass::trivial);
        EXPECT_EQ(classify_residual(lat, actual, actual ^ logical), ResidualClass::logical);
        for (std::size_t f = 0; f < lat.num_faces(); f++) {
            auto loop = pattern_from_support(lat, lat.face_support(f));
            EXPECT_EQ(classify_residual(lat, actual, actual ^ loop), ResidualClass::trivial);
            EXPECT_EQ(classify_residual(lat, actual, actual ^ loop ^ logical), ResidualClass::logical);
        }
        ErrorPattern one(lat.num_data());
        one.bits[static_cast<std::size_t>(rng() % lat.num_data())] = 1;
        EXPECT_EQ(classify_residual(lat, actual, actual ^ one), ResidualClass::open);
    }
}

TEST(ClassifyResidual, VertexSupportsBreakTheSyndrome) {
    // An X-vertex support shares one qubit with each neighbouring vertex, so as
    // a Z pattern it is not a stabilizer and the residual is open.
    auto lat = build_lattice(3);
    ErrorPattern none(lat.num_data());
    for (std::size_t v = 0; v < lat.num_vertices(); v++) {
        auto cls = classify_residual(lat, none, pattern_from_support(lat, lat.vertex_support(v)));
        EXPECT_EQ(cls, ResidualClass::open);
    }
}

TEST(GroundStateOracle, Examples) {
    auto lat = build_lattice(3);
    Syndrome plus;
    plus.values.assign(lat.num_vertices(), 1);
    EXPECT_EQ(ground_state_oracle(lat, plus), 0u);
    for (std::size_t q = 0; q < lat.num_data(); q++) {
        if (lat.qubit_incidence(q).size() == 2) {
            ErrorPattern e(lat.num_data());
            e.bits[q] = 1;
            EXPECT_EQ(ground_state_oracle(lat, extract_syndrome(lat, e)), 1u);
        }
    }
    EXPECT_THROW(ground_state_oracle(build_lattice(4), Syndrome{std::vector<std::int8_t>(12, 1)}), std::length_error);
}

TEST(GroundStateOracle, MwpmIsMinimal) {
    std::mt19937_64 rng(17);
    for (int d : {2, 3}) {
        auto lat = build_lattice(d);
        for (int trial = 0; trial < 100; trial++) {
            auto s = extract_syndrome(lat, sample_errors(lat, 0.15, rng));
            auto m = mwpm_decode(build_defect_graph(lat, s));
            ASSERT_EQ(m.correction.weight(), ground_state_oracle(lat, s));
        }
    }
}

}  // namespace
}  // namespace surfqubo
