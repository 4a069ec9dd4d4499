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

#include "cosetgame/qstate/density_op.h"

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

namespace cosetgame::qstate {

DensityOp::DensityOp(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("DensityOp: too many qubits (" + std::to_string(num_qubits) + ")");
    }
    auto d = static_cast<Eigen::Index>(size_t{1} << num_qubits);
    m_ = Eigen::MatrixXcd::Zero(d, d);
}

DensityOp::DensityOp(size_t num_qubits, Eigen::MatrixXcd entries) : DensityOp(num_qubits) {
    if (entries.rows() != m_.rows() || entries.cols() != m_.cols()) {
        throw std::invalid_argument("DensityOp: matrix shape does not match qubit count");
    }
    m_ = std::move(entries);
}

DensityOp DensityOp::pure(const StateVec &s) {
    DensityOp rho(s.num_qubits());
    auto a = s.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> v(a.data(), static_cast<Eigen::Index>(a.size()));
    rho.m_ = v * v.adjoint();
    return rho;
}

Amplitude DensityOp::trace() const {
    return m_.trace();
}

bool DensityOp::is_hermitian(double tol) const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double DensityOp::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

bool DensityOp::is_valid_state(double tol) const {
    return is_hermitian(tol) && std::abs(trace() - Amplitude(1.0)) <= tol && min_eigenvalue() >= -tol;
}

DensityOp &DensityOp::operator+=(const DensityOp &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("DensityOp: qubit count mismatch");
    }
    m_ += other.m_;
    return *this;
}

DensityOp &DensityOp::operator*=(double scale) {
    m_ *= scale;
    return *this;
}

double frobenius_distance(const DensityOp &a, const DensityOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("frobenius_distance: qubit count mismatch");
    }
    return (a.matrix() - b.matrix()).norm();
}

double overlap(const DensityOp &a, const DensityOp &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("overlap: qubit count mismatch");
    }
    return (a.matrix() * b.matrix()).trace().real();
}

DensityOp partial_trace_second_half(const StateVec &s) {
    if (s.num_qubits() % 2 != 0) {
        throw std::invalid_argument("partial_trace_second_half: odd qubit count");
    }
    size_t m = s.num_qubits() / 2;
    size_t d = size_t{1} << m;
    auto amps = s.amplitudes();
    // Row-major reshape: psi(a, c) = amps[a * d + c] with a on qubits 1..m.
    Eigen::Map<const Eigen::Matrix<Amplitude, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> psi(
        amps.data(), static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    return DensityOp(m, psi * psi.adjoint());
}

}  // namespace cosetgame::qstate
