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

#include "cosetgame/qstate/state_vec.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace cosetgame::qstate {

std::string Gate::str() const {
    switch (kind) {
        case GateKind::H:
            return "H " + std::to_string(qubit);
        case GateKind::X:
            return "X " + std::to_string(qubit);
        case GateKind::Z:
            return "Z " + std::to_string(qubit);
        case GateKind::CNOT:
            return "CNOT " + std::to_string(qubit) + " " + std::to_string(target);
    }
    return "?";
}

StateVec::StateVec(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > MAX_QUBITS) {
        throw std::invalid_argument("StateVec: too many qubits (" + std::to_string(num_qubits) + ")");
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVec StateVec::basis(size_t num_qubits, uint64_t index) {
    StateVec s(num_qubits);
    if (index >= s.dim()) {
        throw std::out_of_range("StateVec::basis: index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVec StateVec::basis(const f2::BitVec &bits) {
    return basis(bits.size(), bits.word());
}

StateVec StateVec::from_amplitudes(size_t num_qubits, std::vector<Amplitude> amps) {
    if (num_qubits > MAX_QUBITS || amps.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVec::from_amplitudes: need 2^n amplitudes");
    }
    StateVec s;
    s.num_qubits_ = num_qubits;
    s.amps_ = std::move(amps);
    return s;
}

StateVec StateVec::tensor(const StateVec &first, const StateVec &second) {
    std::vector<Amplitude> amps(first.dim() * second.dim());
    for (size_t a = 0; a < first.dim(); a++) {
        for (size_t b = 0; b < second.dim(); b++) {
            amps[a * second.dim() + b] = first.amps_[a] * second.amps_[b];
        }
    }
    return from_amplitudes(first.num_qubits_ + second.num_qubits_, std::move(amps));
}

uint64_t StateVec::qubit_mask(size_t qubit) const {
    if (qubit < 1 || qubit > num_qubits_) {
        throw std::out_of_range(
            "qubit " + std::to_string(qubit) + " outside [1, " + std::to_string(num_qubits_) + "]");
    }
    return uint64_t{1} << (num_qubits_ - qubit);
}

void StateVec::apply(const Gate &g) {
    uint64_t m = qubit_mask(g.qubit);
    size_t n = amps_.size();
    switch (g.kind) {
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            for (size_t i = 0; i < n; i++) {
                if (!(i & m)) {
                    Amplitude a = amps_[i];
                    Amplitude b = amps_[i | m];
                    amps_[i] = (a + b) * r;
                    amps_[i | m] = (a - b) * r;
                }
            }
            break;
        }
        case GateKind::X:
            for (size_t i = 0; i < n; i++) {
                if (!(i & m)) {
                    std::swap(amps_[i], amps_[i | m]);
                }
            }
            break;
        case GateKind::Z:
            for (size_t i = 0; i < n; i++) {
                if (i & m) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
        case GateKind::CNOT: {
            uint64_t t = qubit_mask(g.target);
            if (t == m) {
                throw std::invalid_argument("CNOT control equals target");
            }
            for (size_t i = 0; i < n; i++) {
                if ((i & m) && !(i & t)) {
                    std::swap(amps_[i], amps_[i | t]);
                }
            }
            break;
        }
    }
}

void StateVec::apply(std::span<const Gate> circuit) {
    for (const auto &g : circuit) {
        apply(g);
    }
}

double StateVec::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVec::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

StateVec apply_gate(StateVec s, const Gate &g) {
    s.apply(g);
    return s;
}

StateVec run_circuit(StateVec s, std::span<const Gate> circuit) {
    s.apply(circuit);
    return s;
}

Amplitude inner_product(const StateVec &a, const StateVec &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    Amplitude s = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t i = 0; i < x.size(); i++) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

double max_abs_diff(const StateVec &a, const StateVec &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("max_abs_diff: qubit count mismatch");
    }
    double d = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (size_t i = 0; i < x.size(); i++) {
        d = std::max(d, std::abs(x[i] - y[i]));
    }
    return d;
}

bool equal_up_to_phase(const StateVec &a, const StateVec &b, double tol) {
    return std::abs(inner_product(a, b)) >= 1 - tol;
}

}  // namespace cosetgame::qstate
