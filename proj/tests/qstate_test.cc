// Copyright 2026 The Coset Game Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosetgame/f2/bit_vec.h"
#include "cosetgame/qstate/density_op.h"
#include "cosetgame/qstate/gate.h"
#include "cosetgame/qstate/measure.h"
#include "cosetgame/qstate/rng.h"
#include "cosetgame/qstate/state_vec.h"

using namespace cosetgame;
using namespace cosetgame::qstate;

namespace {

StateVec random_state(size_t n, Rng &rng) {
    std::vector<Amplitude> amps(size_t{1} << n);
    for (auto &a : amps) {
        a = Amplitude(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    auto s = StateVec::from_amplitudes(n, amps);
    s.normalize();
    return s;
}

// Applies an operator product written left to right, so the last gate acts first.
StateVec apply_product(StateVec s, Circuit product) {
    std::reverse(product.begin(), product.end());
    s.apply(product);
    return s;
}

void expect_same_operator(size_t n, const Circuit &lhs, const Circuit &rhs) {
    Rng rng(99);
    for (int t = 0; t < 5; t++) {
        auto s = random_state(n, rng);
        EXPECT_LE(max_abs_diff(apply_product(s, lhs), apply_product(s, rhs)), 1e-9);
    }
}

StateVec bell_phi_plus() {
    auto s = StateVec(2);
    s.apply(Gate::h(1));
    s.apply(Gate::cnot(1, 2));
    return s;
}

}  // namespace

TEST(state_vec, qubit_one_is_most_significant) {
    auto s = StateVec(3);
    s.apply(Gate::x(1));
    EXPECT_EQ(s.amplitude(4), Amplitude(1.0));
    auto b = StateVec::basis(f2::BitVec::from_string("011"));
    EXPECT_EQ(b.amplitude(3), Amplitude(1.0));
    EXPECT_EQ(b.qubit_mask(1), 4u);
}

TEST(state_vec, single_qubit_gates) {
    auto s = StateVec(1);
    s.apply(Gate::h(1));
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s.amplitude(1).real(), 1 / std::sqrt(2.0), 1e-12);
    s.apply(Gate::z(1));
    EXPECT_NEAR(s.amplitude(1).real(), -1 / std::sqrt(2.0), 1e-12);
    s.apply(Gate::h(1));
    EXPECT_NEAR(std::abs(s.amplitude(1)), 1.0, 1e-12);
}

TEST(state_vec, bell_state) {
    auto s = bell_phi_plus();
    EXPECT_NEAR(s.amplitude(0).real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(s.amplitude(3).real(), 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, 1e-12);
}

TEST(state_vec, pauli_commutation_identities) {
    // (I x X) CNOT = CNOT (I x X), (Z x I) CNOT = CNOT (Z x I), Z H = H X.
    expect_same_operator(2, {Gate::x(2), Gate::cnot(1, 2)}, {Gate::cnot(1, 2), Gate::x(2)});
    expect_same_operator(2, {Gate::z(1), Gate::cnot(1, 2)}, {Gate::cnot(1, 2), Gate::z(1)});
    expect_same_operator(1, {Gate::z(1), Gate::h(1)}, {Gate::h(1), Gate::x(1)});
}

TEST(state_vec, cnot_rewrite_identities) {
    const size_t i = 1, j = 2, k = 3;
    expect_same_operator(3, {Gate::cnot(j, k), Gate::cnot(i, j), Gate::cnot(i, k)},
                         {Gate::cnot(i, j), Gate::cnot(j, k)});
    expect_same_operator(3, {Gate::cnot(i, j), Gate::cnot(i, k), Gate::cnot(j, k)},
                         {Gate::cnot(j, k), Gate::cnot(i, j)});
    expect_same_operator(3, {Gate::h(i), Gate::h(j), Gate::cnot(i, j)},
                         {Gate::cnot(j, i), Gate::h(i), Gate::h(j)});
}

TEST(state_vec, gates_preserve_norm) {
    Rng rng(4);
    auto s = random_state(5, rng);
    for (int t = 0; t < 100; t++) {
        size_t a = 1 + rng.below(5);
        size_t b = 1 + rng.below(5);
        switch (rng.below(4)) {
            case 0:
                s.apply(Gate::h(a));
                break;
            case 1:
                s.apply(Gate::x(a));
                break;
            case 2:
                s.apply(Gate::z(a));
                break;
            default:
                if (a != b) {
                    s.apply(Gate::cnot(a, b));
                }
        }
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(state_vec, rejects_bad_gates) {
    auto s = StateVec(2);
    EXPECT_THROW(s.apply(Gate::h(3)), std::out_of_range);
    EXPECT_THROW(s.apply(Gate::h(0)), std::out_of_range);
    EXPECT_THROW(s.apply(Gate::cnot(1, 1)), std::invalid_argument);
    EXPECT_THROW(StateVec(31), std::invalid_argument);
    EXPECT_THROW(StateVec::basis(2, 4), std::out_of_range);
    EXPECT_THROW(StateVec::from_amplitudes(2, std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST(state_vec, phase_equivalence) {
    Rng rng(6);
    auto s = random_state(3, rng);
    auto t = s;
    for (uint64_t i = 0; i < t.dim(); i++) {
        t[i] *= Amplitude(0, 1);
    }
    EXPECT_TRUE(equal_up_to_phase(s, t));
    EXPECT_GT(max_abs_diff(s, t), 0.1);
    EXPECT_FALSE(equal_up_to_phase(s, random_state(3, rng)));
    EXPECT_NEAR(std::abs(inner_product(s, t)), 1.0, 1e-12);
}

TEST(gate, text_form) {
    EXPECT_EQ(Gate::h(1).str(), "H 1");
    EXPECT_EQ(Gate::cnot(1, 2).str(), "CNOT 1 2");
    EXPECT_EQ(Gate::z(4).str(), "Z 4");
}

TEST(partial_trace, product_state) {
    auto a = StateVec::basis(2, 1);
    auto b = StateVec::basis(2, 2);
    auto rho = partial_trace_second_half(StateVec::tensor(a, b));
    EXPECT_NEAR(rho.entry(1, 1).real(), 1.0, 1e-12);
    EXPECT_NEAR(frobenius_distance(rho, DensityOp::pure(a)), 0.0, 1e-12);
}

TEST(partial_trace, bell_is_maximally_mixed) {
    auto rho = partial_trace_second_half(bell_phi_plus());
    EXPECT_NEAR(rho.entry(0, 0).real(), 0.5, 1e-12);
    EXPECT_NEAR(rho.entry(1, 1).real(), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(rho.entry(0, 1)), 0.0, 1e-12);
    EXPECT_TRUE(rho.is_valid_state());
}

TEST(partial_trace, matches_explicit_sum) {
    Rng rng(12);
    auto s = random_state(6, rng);
    auto rho = partial_trace_second_half(s);
    for (uint64_t a = 0; a < 8; a++) {
        for (uint64_t b = 0; b < 8; b++) {
            Amplitude expected = 0;
            for (uint64_t c = 0; c < 8; c++) {
                expected += s.amplitude(a * 8 + c) * std::conj(s.amplitude(b * 8 + c));
            }
            EXPECT_NEAR(std::abs(rho.entry(a, b) - expected), 0.0, 1e-12);
        }
    }
    EXPECT_TRUE(rho.is_valid_state());
    EXPECT_THROW(partial_trace_second_half(StateVec(3)), std::invalid_argument);
}

TEST(density_op, overlap_and_validity) {
    auto zero = DensityOp::pure(StateVec::basis(1, 0));
    auto one = DensityOp::pure(StateVec::basis(1, 1));
    EXPECT_NEAR(overlap(zero, one), 0.0, 1e-12);
    EXPECT_NEAR(overlap(zero, zero), 1.0, 1e-12);
    EXPECT_NEAR(frobenius_distance(zero, one), std::sqrt(2.0), 1e-12);
    DensityOp mixed = zero;
    mixed += one;
    EXPECT_FALSE(mixed.is_valid_state());
    mixed *= 0.5;
    EXPECT_TRUE(mixed.is_valid_state());
    EXPECT_NEAR(mixed.min_eigenvalue(), 0.5, 1e-12);
}

TEST(project_prob, basics) {
    EXPECT_NEAR(project_prob(StateVec(3), {Projector::Comp0, Projector::Comp0, Projector::Comp0}), 1.0, 1e-12);
    EXPECT_NEAR(project_prob(StateVec(2), {Projector::Comp0, Projector::Comp1}), 0.0, 1e-12);
    EXPECT_NEAR(std::sqrt(project_prob(bell_phi_plus(), {Projector::Comp0, Projector::Comp0})), 1 / std::sqrt(2.0),
                1e-12);
    EXPECT_THROW(project_prob(StateVec(2), {Projector::Comp0}), std::invalid_argument);
}

TEST(project_prob, imaginary_basis_vectors) {
    // S H |0> = |+i> and S H |1> = |-i> with S = diag(1, i).
    auto plus_i = projector_vector(Projector::PlusI);
    auto minus_i = projector_vector(Projector::MinusI);
    EXPECT_NEAR(std::abs(plus_i[1] - Amplitude(0, 1 / std::sqrt(2.0))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(minus_i[1] - Amplitude(0, -1 / std::sqrt(2.0))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(std::conj(plus_i[0]) * minus_i[0] + std::conj(plus_i[1]) * minus_i[1]), 0.0, 1e-12);
    EXPECT_EQ(projector_for(MeasureBasis::ImagPair, false), Projector::PlusI);
    EXPECT_EQ(projector_for(MeasureBasis::ImagPair, true), Projector::MinusI);
    EXPECT_EQ(projector_for(MeasureBasis::Comp, true), Projector::Comp1);
}

TEST(project_prob, product_bases_are_complete) {
    Rng rng(13);
    auto s = random_state(4, rng);
    std::vector<MeasureBasis> bases{MeasureBasis::ImagPair, MeasureBasis::Comp, MeasureBasis::ImagPair,
                                    MeasureBasis::Comp};
    double total = 0;
    for (uint64_t o = 0; o < 16; o++) {
        ProjectorSpec spec;
        for (size_t q = 0; q < 4; q++) {
            spec.push_back(projector_for(bases[q], (o >> q) & 1));
        }
        total += project_prob(s, spec);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(project_prob, marginal_sums_joint) {
    Rng rng(14);
    auto s = random_state(4, rng);
    ProjectorSpec first{Projector::PlusI, Projector::Comp1};
    for (size_t start : {size_t{1}, size_t{3}}) {
        double total = 0;
        for (uint64_t o = 0; o < 4; o++) {
            ProjectorSpec other{projector_for(MeasureBasis::Comp, o & 1), projector_for(MeasureBasis::Comp, o >> 1)};
            ProjectorSpec full = start == 1 ? first : other;
            const auto &tail = start == 1 ? other : first;
            full.insert(full.end(), tail.begin(), tail.end());
            total += project_prob(s, full);
        }
        EXPECT_NEAR(marginal_project_prob(s, first, start), total, 1e-12);
    }
    EXPECT_THROW(marginal_project_prob(s, first, 4), std::out_of_range);
}

TEST(measure, frequencies_match_born_rule) {
    Rng state_rng(15);
    auto s = random_state(3, state_rng);
    double expected = marginal_project_prob(s, {Projector::MinusI}, 2);
    const int n = 20000;
    int ones = 0;
    Rng rng(16);
    for (int t = 0; t < n; t++) {
        ones += measure_qubit(s, 2, MeasureBasis::ImagPair, rng).outcome;
    }
    double sigma = std::sqrt(expected * (1 - expected) / n);
    EXPECT_NEAR(static_cast<double>(ones) / n, expected, 3 * sigma);
}

TEST(measure, collapse_is_consistent) {
    Rng rng(17);
    for (int t = 0; t < 50; t++) {
        auto s = random_state(3, rng);
        auto r = measure_qubit(s, 1, MeasureBasis::ImagPair, rng);
        EXPECT_NEAR(r.collapsed.norm_squared(), 1.0, 1e-12);
        auto p = projector_for(MeasureBasis::ImagPair, r.outcome);
        EXPECT_NEAR(marginal_project_prob(r.collapsed, {p}, 1), 1.0, 1e-9);
    }
}

TEST(measure, deterministic_outcomes) {
    Rng rng(18);
    auto s = StateVec::basis(2, 1);
    EXPECT_FALSE(measure_qubit(s, 1, MeasureBasis::Comp, rng).outcome);
    EXPECT_TRUE(measure_qubit(s, 2, MeasureBasis::Comp, rng).outcome);
}

TEST(rng, reproducible_streams) {
    auto a = Rng::substream(1, 5);
    auto b = Rng::substream(1, 5);
    auto c = Rng::substream(1, 6);
    auto d = Rng::substream(2, 5);
    uint64_t va = a.next_u64();
    EXPECT_EQ(va, b.next_u64());
    EXPECT_NE(va, c.next_u64());
    EXPECT_NE(va, d.next_u64());
}

TEST(rng, below_is_in_range_and_balanced) {
    Rng rng(19);
    std::vector<int> hist(6, 0);
    const int n = 60000;
    for (int t = 0; t < n; t++) {
        auto v = rng.below(6);
        ASSERT_LT(v, 6u);
        hist[v]++;
    }
    double p = 1.0 / 6;
    double sigma = std::sqrt(p * (1 - p) / n);
    for (int h : hist) {
        EXPECT_NEAR(static_cast<double>(h) / n, p, 4 * sigma);
    }
    for (int t = 0; t < 1000; t++) {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}
