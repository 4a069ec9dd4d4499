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

#ifndef COSETGAME_QSTATE_GATE_H
#define COSETGAME_QSTATE_GATE_H

#include <cstddef>
#include <string>
#include <vector>

namespace cosetgame::qstate {

enum class GateKind { H, X, Z, CNOT };

/// One of H, X, Z on `qubit`, or CNOT from `qubit` (control) to `target`.
/// Qubits are 1-based.
struct Gate {
    GateKind kind;
    size_t qubit;
    size_t target = 0;

    static Gate h(size_t q) {
        return Gate{GateKind::H, q};
    }
    static Gate x(size_t q) {
        return Gate{GateKind::X, q};
    }
    static Gate z(size_t q) {
        return Gate{GateKind::Z, q};
    }
    static Gate cnot(size_t control, size_t target) {
        return Gate{GateKind::CNOT, control, target};
    }

    size_t control() const {
        return qubit;
    }
    bool is_cnot() const {
        return kind == GateKind::CNOT;
    }

    /// "H 1", "CNOT 1 2", ...
    std::string str() const;

    bool operator==(const Gate &other) const = default;
};

using Circuit = std::vector<Gate>;

}  // namespace cosetgame::qstate

#endif
