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

#ifndef COSETGAME_QSTATE_DENSITY_OP_H
#define COSETGAME_QSTATE_DENSITY_OP_H

#include <Eigen/Dense>

#include "cosetgame/qstate/state_vec.h"

namespace cosetgame::qstate {

/// Dense density operator; same basis-index convention as StateVec.
class DensityOp {
   public:
    static constexpr size_t MAX_QUBITS = 12;

    explicit DensityOp(size_t num_qubits);
    DensityOp(size_t num_qubits, Eigen::MatrixXcd entries);
    static DensityOp pure(const StateVec &s);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const Eigen::MatrixXcd &matrix() const {
        return m_;
    }
    Amplitude entry(size_t row, size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    Amplitude trace() const;
    bool is_hermitian(double tol = TOLERANCE) const;
    double min_eigenvalue() const;
    /// Hermitian, unit trace and positive semidefinite, each within tol.
    bool is_valid_state(double tol = TOLERANCE) const;

    DensityOp &operator+=(const DensityOp &other);
    DensityOp &operator*=(double scale);

   private:
    size_t num_qubits_;
    Eigen::MatrixXcd m_;
};

/// ||a - b||_F.
double frobenius_distance(const DensityOp &a, const DensityOp &b);

/// Re Tr[a b].
double overlap(const DensityOp &a, const DensityOp &b);

/// Reduced state of qubits 1..m of a 2m-qubit pure state.
DensityOp partial_trace_second_half(const StateVec &s);

}  // namespace cosetgame::qstate

#endif
