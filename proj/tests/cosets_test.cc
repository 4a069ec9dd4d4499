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

#include <cmath>
#include <stdexcept>

#include "cosetgame/cosets/cosets.h"
#include "cosetgame/f2/subspace.h"
#include "cosetgame/qstate/rng.h"

using namespace cosetgame;
using namespace cosetgame::cosets;
using f2::BitVec;
using qstate::Amplitude;

namespace {

const double R = 1 / std::sqrt(2.0);

StateVec ket(std::vector<Amplitude> amps) {
    size_t n = 0;
    while ((size_t{1} << n) < amps.size()) {
        n++;
    }
    return StateVec::from_amplitudes(n, std::move(amps));
}

// Canonicalizes arbitrary (x, z) to the label of the same coset pair.
CosetLabel label_for(const Subspace &w, const char *x, const char *z) {
    return CosetLabel(w, w.reduce(BitVec::from_string(x)), f2::dual_canonical_rep(w, BitVec::from_string(z)));
}

CosetLabel random_label(const Subspace &w, Rng &rng) {
    auto reps = f2::coset_reps(w);
    BitVec x(w.ambient_dim());
    BitVec z(w.ambient_dim());
    for (size_t c : reps.x_support) {
        x.set(c, rng.bit());
    }
    for (size_t c : reps.z_support) {
        z.set(c, rng.bit());
    }
    return CosetLabel(w, x, z);
}

Subspace random_subspace(size_t m, Rng &rng) {
    while (true) {
        f2::BitMat g(0, 2 * m);
        for (size_t r = 0; r < m; r++) {
            g.append_row(BitVec(2 * m, rng.next_u64() & ((uint64_t{1} << (2 * m)) - 1)));
        }
        if (g.rank() == m) {
            return Subspace::span(g);
        }
    }
}

}  // namespace

TEST(encoder_circuit, canonical_order) {
    EXPECT_EQ(format_circuit(encoder_circuit(Subspace::parse("11"))), "H 1\nCNOT 1 2\n");
    EXPECT_EQ(format_circuit(encoder_circuit(Subspace::parse("101001,011101,000010"))),
              "H 1\nH 2\nH 5\nCNOT 1 3\nCNOT 1 6\nCNOT 2 3\nCNOT 2 4\nCNOT 2 6\n");
    EXPECT_EQ(format_circuit(encoder_circuit(Subspace::parse("1000,0100"))), "H 1\nH 2\n");
}

TEST(coset_state, m1_table) {
    auto w1 = Subspace::parse("01");
    auto w2 = Subspace::parse("10");
    auto w3 = Subspace::parse("11");
    struct Row {
        const Subspace *w;
        const char *x;
        const char *z;
        StateVec expected;
    };
    std::vector<Row> rows = {
        {&w1, "00", "00", ket({R, R, 0, 0})},   // |0>|+>
        {&w1, "00", "01", ket({R, -R, 0, 0})},  // |0>|->
        {&w1, "10", "00", ket({0, 0, R, R})},   // |1>|+>
        {&w1, "10", "01", ket({0, 0, R, -R})},  // |1>|->
        {&w2, "00", "00", ket({R, 0, R, 0})},   // |+>|0>
        {&w2, "00", "10", ket({R, 0, -R, 0})},  // |->|0>
        {&w2, "01", "00", ket({0, R, 0, R})},   // |+>|1>
        {&w2, "01", "10", ket({0, R, 0, -R})},  // |->|1>
        {&w3, "00", "00", ket({R, 0, 0, R})},
        {&w3, "00", "01", ket({R, 0, 0, -R})},
        {&w3, "10", "00", ket({0, R, R, 0})},
        {&w3, "10", "01", ket({0, R, -R, 0})},
    };
    for (const auto &row : rows) {
        auto label = label_for(*row.w, row.x, row.z);
        EXPECT_TRUE(qstate::equal_up_to_phase(coset_state_direct(label), row.expected))
            << row.w->generator().str() << " x=" << row.x << " z=" << row.z;
    }
}

TEST(coset_state, three_constructions_agree_exhaustively) {
    for (size_t m = 1; m <= 2; m++) {
        for (const auto &w : f2::enumerate_subspaces(2 * m, m)) {
            for (const auto &label : CosetLabel::all(w)) {
                auto direct = coset_state_direct(label);
                EXPECT_LE(qstate::max_abs_diff(direct, coset_state_pauli(label)), 1e-9);
                EXPECT_TRUE(qstate::equal_up_to_phase(direct, coset_state_encoded(label)));
            }
        }
    }
}

TEST(coset_state, three_constructions_agree_on_random_m3) {
    Rng rng(31);
    for (int t = 0; t < 200; t++) {
        auto label = random_label(random_subspace(3, rng), rng);
        auto direct = coset_state_direct(label);
        EXPECT_LE(qstate::max_abs_diff(direct, coset_state_pauli(label)), 1e-9);
        EXPECT_TRUE(qstate::equal_up_to_phase(direct, coset_state_encoded(label)));
    }
}

TEST(coset_state, encoder_maps_zero_to_subspace_state) {
    Rng rng(32);
    for (int t = 0; t < 50; t++) {
        auto w = random_subspace(4, rng);
        auto s = StateVec(8);
        s.apply(encoder_circuit(w));
        EXPECT_LE(qstate::max_abs_diff(s, subspace_state(w)), 1e-9);
    }
}

TEST(coset_state, labels_are_orthonormal) {
    for (size_t m = 1; m <= 2; m++) {
        for (const auto &w : f2::enumerate_subspaces(2 * m, m)) {
            auto labels = CosetLabel::all(w);
            ASSERT_EQ(labels.size(), size_t{1} << (2 * m));
            std::vector<StateVec> states;
            for (const auto &l : labels) {
                states.push_back(coset_state_direct(l));
            }
            for (size_t a = 0; a < states.size(); a++) {
                for (size_t b = 0; b < states.size(); b++) {
                    double expected = a == b ? 1.0 : 0.0;
                    EXPECT_NEAR(std::abs(qstate::inner_product(states[a], states[b])), expected, 1e-9);
                }
            }
        }
    }
}

TEST(coset_state, equivalent_representatives_give_same_state) {
    // Shifting x by an element of W, or z by an element of W-perp, changes only the phase.
    Rng rng(33);
    for (int t = 0; t < 50; t++) {
        auto w = random_subspace(3, rng);
        auto perp = f2::orthogonal_complement(w);
        auto label = random_label(w, rng);
        auto ws = w.elements();
        auto ps = perp.elements();
        BitVec x2 = label.x() + ws[rng.below(ws.size())];
        BitVec z2 = label.z() + ps[rng.below(ps.size())];
        std::vector<Amplitude> amps(64, 0.0);
        for (const auto &u : ws) {
            amps[(x2 + u).word()] = (f2::dot(z2, u) ? -1.0 : 1.0) / std::sqrt(8.0);
        }
        EXPECT_TRUE(qstate::equal_up_to_phase(coset_state_direct(label), ket(amps)));
    }
}

TEST(coset_label, validates_supports) {
    auto w = Subspace::parse("101001,011101,000010");
    EXPECT_NO_THROW(CosetLabel(w, BitVec::from_string("001101"), BitVec::from_string("110010")));
    EXPECT_THROW(CosetLabel(w, BitVec::from_string("100000"), BitVec(6)), std::invalid_argument);
    EXPECT_THROW(CosetLabel(w, BitVec(6), BitVec::from_string("001000")), std::invalid_argument);
    EXPECT_THROW(CosetLabel(w, BitVec(4), BitVec(6)), std::invalid_argument);
}

TEST(circuit_text, round_trip) {
    Circuit c{qstate::Gate::h(1), qstate::Gate::x(3), qstate::Gate::z(2), qstate::Gate::cnot(1, 4)};
    auto text = format_circuit(c);
    EXPECT_EQ(text, "H 1\nX 3\nZ 2\nCNOT 1 4\n");
    EXPECT_EQ(parse_circuit(text), c);
    EXPECT_EQ(parse_circuit("  H 2\n\nCNOT 2 3  \n").size(), 2u);
}

TEST(circuit_text, rejects_malformed_lines) {
    EXPECT_THROW(parse_circuit("Y 1"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("H"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("H 0"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("CNOT 1"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("CNOT 2 2"), std::invalid_argument);
    EXPECT_THROW(parse_circuit("H 1 2"), std::invalid_argument);
}

TEST(averaged_bob_state, identical_or_orthogonal) {
    for (size_t m = 1; m <= 2; m++) {
        std::vector<BitVec> units;
        for (size_t i = m + 1; i <= 2 * m; i++) {
            units.push_back(BitVec::unit(2 * m, i));
        }
        auto second_half = Subspace::span(2 * m, units);
        for (const auto &w : f2::enumerate_subspaces(2 * m, m)) {
            auto widened = f2::subspace_sum(w, second_half);
            auto xs = f2::span_of_units(2 * m, w.non_pivots());
            std::vector<qstate::DensityOp> rho;
            for (const auto &x : xs) {
                rho.push_back(averaged_bob_state(w, x));
                EXPECT_TRUE(rho.back().is_valid_state());
            }
            for (size_t a = 0; a < xs.size(); a++) {
                for (size_t b = 0; b < xs.size(); b++) {
                    if (widened.contains(xs[a] + xs[b])) {
                        EXPECT_LT(qstate::frobenius_distance(rho[a], rho[b]), 1e-9);
                    } else {
                        EXPECT_LT(std::abs(qstate::overlap(rho[a], rho[b])), 1e-9);
                    }
                }
            }
        }
    }
}
