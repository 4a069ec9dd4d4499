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

#ifndef COSETGAME_COSETS_COSETS_H
#define COSETGAME_COSETS_COSETS_H

#include <string>
#include <string_view>
#include <vector>

#include "cosetgame/f2/subspace.h"
#include "cosetgame/qstate/density_op.h"
#include "cosetgame/qstate/gate.h"
#include "cosetgame/qstate/state_vec.h"

namespace cosetgame::cosets {

using f2::BitVec;
using f2::Subspace;
using qstate::Circuit;
using qstate::StateVec;

/// (W, x, z) with W in G(2m, m), x in span{e_i : i in I^c} and z in
/// span{e_i : i in I}, so x and z have disjoint supports.
class CosetLabel {
   public:
    /// Throws std::invalid_argument if x or z is not a canonical representative.
    CosetLabel(Subspace w, BitVec x, BitVec z);

    const Subspace &subspace() const {
        return w_;
    }
    const BitVec &x() const {
        return x_;
    }
    const BitVec &z() const {
        return z_;
    }
    size_t m() const {
        return w_.half();
    }

    /// Every label of W, x outer and z inner, both in counter order.
    static std::vector<CosetLabel> all(const Subspace &w);

   private:
    Subspace w_;
    BitVec x_;
    BitVec z_;
};

/// H on every pivot in ascending order, then CNOT(i, j) for every (i, j) in J
/// sorted by control and then target. Maps |0...0> to |W>.
Circuit encoder_circuit(const Subspace &w);

/// Uniform superposition over the elements of W.
StateVec subspace_state(const Subspace &w);

/// sum_{u in W} (-1)^{z.u} |x + u>, normalized.
StateVec coset_state_direct(const CosetLabel &label);

/// X_{supp(x)} Z_{supp(z)} |W>.
StateVec coset_state_pauli(const CosetLabel &label);

/// encoder_circuit(W) applied to the basis state |x + z>.
StateVec coset_state_encoded(const CosetLabel &label);

/// 2^{-m} sum over z in CS(W-perp) of Tr_C |W_{x,z}><W_{x,z}|, the state of
/// the first m qubits given x.
qstate::DensityOp averaged_bob_state(const Subspace &w, const BitVec &x);

/// One gate per line: "H i", "X i", "Z i", "CNOT i j" (1-based).
std::string format_circuit(const Circuit &circuit);
Circuit parse_circuit(std::string_view text);

}  // namespace cosetgame::cosets

#endif
