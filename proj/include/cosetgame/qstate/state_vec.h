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

#ifndef COSETGAME_QSTATE_STATE_VEC_H
#define COSETGAME_QSTATE_STATE_VEC_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetgame/f2/bit_vec.h"
#include "cosetgame/qstate/gate.h"

namespace cosetgame::qstate {

using Amplitude = std::complex<double>;

/// Default tolerance for amplitude and probability comparisons.
inline constexpr double TOLERANCE = 1e-9;

/// Dense state vector of n qubits.
///
/// Basis index convention: qubit 1 is the most significant bit, so the ket
/// |b_1 b_2 ... b_n> has index b_1 b_2 ... b_n read as a binary number.
class StateVec {
   public:
    static constexpr size_t MAX_QUBITS = 30;

    /// |0...0>.
    explicit StateVec(size_t num_qubits);
    static StateVec basis(size_t num_qubits, uint64_t index);
    static StateVec basis(const f2::BitVec &bits);
    static StateVec from_amplitudes(size_t num_qubits, std::vector<Amplitude> amps);
    static StateVec tensor(const StateVec &first, const StateVec &second);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dim() const {
        return amps_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(uint64_t index) const {
        return amps_.at(index);
    }
    Amplitude &operator[](uint64_t index) {
        return amps_[index];
    }

    /// Index bit that holds `qubit`; throws std::out_of_range for bad qubits.
    uint64_t qubit_mask(size_t qubit) const;

    void apply(const Gate &g);
    void apply(std::span<const Gate> circuit);

    double norm_squared() const;
    void normalize();

   private:
    StateVec() = default;

    size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

StateVec apply_gate(StateVec s, const Gate &g);
StateVec run_circuit(StateVec s, std::span<const Gate> circuit);

/// <a|b>, conjugate-linear in a.
Amplitude inner_product(const StateVec &a, const StateVec &b);

/// max_i |a_i - b_i|.
double max_abs_diff(const StateVec &a, const StateVec &b);

/// |<a|b>| >= 1 - tol.
bool equal_up_to_phase(const StateVec &a, const StateVec &b, double tol = TOLERANCE);

}  // namespace cosetgame::qstate

#endif
