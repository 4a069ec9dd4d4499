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

#ifndef COSETGAME_STRATEGY_STRATEGY_H
#define COSETGAME_STRATEGY_STRATEGY_H

#include <vector>

#include <Eigen/Dense>

#include "cosetgame/bound/bound.h"
#include "cosetgame/f2/bit_mat.h"
#include "cosetgame/f2/subspace.h"
#include "cosetgame/qstate/gate.h"
#include "cosetgame/qstate/measure.h"

namespace cosetgame::strategy {

using f2::BitMat;
using f2::BitVec;
using f2::IndexPair;
using f2::Subspace;
using qstate::Circuit;

enum class Side { Bob, Charlie };

/// Result of cancelling every encoder CNOT that stays on one side of the cut.
struct LocalSeparation {
    /// J' = {(i, j) in J : i <= m < j}, sorted.
    std::vector<IndexPair> cross_pairs;
    /// I' = controls of J', ascending.
    std::vector<size_t> entangled_controls;
    /// Gates on qubits 1..m.
    Circuit bob_gates;
    /// Gates on qubits m+1..2m.
    Circuit charlie_gates;
};

/// After bob_gates and charlie_gates, |W_{x,z}> becomes CNOT_{J'} H_{I'} |x+z>.
LocalSeparation separate_local(const Subspace &w);

/// Local circuits that leave |W_{x,z}> as disjoint cross-cut Bell pairs times a
/// basis state:
///   (bob_circuit x charlie_circuit) |W_{x,z}> = prod_t CNOT_{i_t,j_t} H_{i_t} |y>,
///   y = (f1(x_B + z_B), f2(x_C + z_C)),
/// where _B and _C are the first and second halves of a 2m-bit vector.
struct LocalizedForm {
    Subspace w;
    Circuit bob_circuit;
    Circuit charlie_circuit;
    /// (i_t, j_t), with i_t in I and <= m, j_t not in I and > m.
    std::vector<IndexPair> residual_pairs;
    /// m x m maps acting on local coordinates 1..m of each half.
    BitMat f1;
    BitMat f2;
    BitMat f1_inverse;
    BitMat f2_inverse;
    /// (i, h(i)) for the unpaired i in I with i <= m, ascending in both entries.
    std::vector<IndexPair> h;

    size_t m() const {
        return w.half();
    }
    size_t num_pairs() const {
        return residual_pairs.size();
    }
    /// The basis label y for the coset state with representatives (x, z).
    BitVec localized_input(const BitVec &x, const BitVec &z) const;
    /// prod_t CNOT_{i_t,j_t} H_{i_t}, as gates: every H first, then every CNOT.
    Circuit residual_circuit() const;
};

/// Eliminates the cross-cut adjacency of `sep` down to a partial matching.
LocalizedForm single_out_bell_pairs(const Subspace &w, const LocalSeparation &sep);

/// separate_local followed by single_out_bell_pairs.
LocalizedForm localize(const Subspace &w);

/// The classical game where Alice hands out the bits of x + z directly: no
/// circuits, identity maps, no pairs, h over all of I intersect [m].
LocalizedForm classical_form(const Subspace &w);

/// How one local qubit is measured and which coordinate of y it reveals.
struct QubitRule {
    qstate::MeasureBasis basis;
    /// 1-based coordinate of y in 1..2m.
    size_t coord;
    /// The revealed coordinate equals outcome XOR invert.
    bool invert;
};

/// Bob's and Charlie's product measurements and outcome-to-guess maps.
class StrategySpec {
   public:
    explicit StrategySpec(LocalizedForm lf);

    const LocalizedForm &form() const {
        return lf_;
    }
    size_t m() const {
        return lf_.m();
    }

    /// One rule per local qubit, in qubit order.
    const std::vector<QubitRule> &rules(Side side) const;
    std::vector<qstate::MeasureBasis> bases(Side side) const;

    /// Canonical guess for local outcome bits (bit k belongs to the side's k-th qubit).
    BitVec decode(const BitVec &outcomes, Side side) const;
    /// Outcome bits that decode to `guess`; the inverse of decode on canonical guesses.
    BitVec encode(const BitVec &guess, Side side) const;

    /// Projectors, in the localized frame, whose outcome decodes to x_hat (Bob) or z_hat (Charlie).
    qstate::ProjectorSpec bob_projectors(const BitVec &x_hat) const;
    qstate::ProjectorSpec charlie_projectors(const BitVec &z_hat) const;

    /// Every canonical guess of one side, in counter order.
    std::vector<BitVec> guesses(Side side) const;

   private:
    qstate::ProjectorSpec projectors(const BitVec &guess, Side side) const;

    LocalizedForm lf_;
    std::vector<QubitRule> bob_rules_;
    std::vector<QubitRule> charlie_rules_;
};

StrategySpec build_strategy(LocalizedForm lf);

/// The POVM element for `guess` on the side's m qubits in the original frame:
/// U^dagger P U, where U is the side's local circuit and P the product projector.
Eigen::MatrixXcd povm_element(const StrategySpec &spec, Side side, const BitVec &guess);

BitVec decode(const BitVec &outcomes, const LocalizedForm &lf, Side side);

/// 2^{-(m - k)} with k = dim(W intersect span{e_{m+1}, ..., e_{2m}}).
bound::Rational win_probability_formula(const Subspace &w);

}  // namespace cosetgame::strategy

#endif
