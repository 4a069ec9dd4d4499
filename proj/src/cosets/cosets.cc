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

#include "cosetgame/cosets/cosets.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cosetgame::cosets {

using qstate::Amplitude;
using qstate::Gate;

namespace {

bool supported_in(const BitVec &v, const std::vector<size_t> &allowed) {
    BitVec mask = BitVec::from_indices(v.size(), allowed);
    return (v.word() & ~mask.word()) == 0;
}

}  // namespace

CosetLabel::CosetLabel(Subspace w, BitVec x, BitVec z) : w_(std::move(w)), x_(x), z_(z) {
    size_t n = 2 * w_.half();
    if (x_.size() != n || z_.size() != n) {
        throw std::invalid_argument("CosetLabel: x and z must have length 2m");
    }
    if (!supported_in(x_, w_.non_pivots())) {
        throw std::invalid_argument("CosetLabel: x = " + x_.str() + " is not supported on the non-pivot columns");
    }
    if (!supported_in(z_, w_.pivots())) {
        throw std::invalid_argument("CosetLabel: z = " + z_.str() + " is not supported on the pivot columns");
    }
}

std::vector<CosetLabel> CosetLabel::all(const Subspace &w) {
    auto reps = f2::coset_reps(w);
    size_t n = w.ambient_dim();
    std::vector<CosetLabel> out;
    for (const auto &x : f2::span_of_units(n, reps.x_support)) {
        for (const auto &z : f2::span_of_units(n, reps.z_support)) {
            out.emplace_back(w, x, z);
        }
    }
    return out;
}

Circuit encoder_circuit(const Subspace &w) {
    Circuit c;
    for (size_t i : w.pivots()) {
        c.push_back(Gate::h(i));
    }
    // cross_pairs() is already sorted by (control, target).
    for (const auto &[i, j] : w.cross_pairs()) {
        c.push_back(Gate::cnot(i, j));
    }
    return c;
}

StateVec subspace_state(const Subspace &w) {
    size_t n = w.ambient_dim();
    auto elements = w.elements();
    double amp = 1.0 / std::sqrt(static_cast<double>(elements.size()));
    std::vector<Amplitude> amps(size_t{1} << n, Amplitude{0.0, 0.0});
    for (const auto &u : elements) {
        amps[u.word()] = amp;
    }
    return StateVec::from_amplitudes(n, std::move(amps));
}

StateVec coset_state_direct(const CosetLabel &label) {
    const auto &w = label.subspace();
    size_t n = w.ambient_dim();
    auto elements = w.elements();
    double amp = 1.0 / std::sqrt(static_cast<double>(elements.size()));
    std::vector<Amplitude> amps(size_t{1} << n, Amplitude{0.0, 0.0});
    for (const auto &u : elements) {
        amps[(label.x() + u).word()] = f2::dot(label.z(), u) ? -amp : amp;
    }
    return StateVec::from_amplitudes(n, std::move(amps));
}

StateVec coset_state_pauli(const CosetLabel &label) {
    StateVec s = subspace_state(label.subspace());
    for (size_t i : label.z().support()) {
        s.apply(Gate::z(i));
    }
    for (size_t i : label.x().support()) {
        s.apply(Gate::x(i));
    }
    return s;
}

StateVec coset_state_encoded(const CosetLabel &label) {
    StateVec s = StateVec::basis(label.x() + label.z());
    s.apply(encoder_circuit(label.subspace()));
    return s;
}

qstate::DensityOp averaged_bob_state(const Subspace &w, const BitVec &x) {
    size_t m = w.half();
    qstate::DensityOp rho(m);
    auto zs = f2::span_of_units(w.ambient_dim(), w.pivots());
    for (const auto &z : zs) {
        rho += qstate::partial_trace_second_half(coset_state_direct(CosetLabel(w, x, z)));
    }
    rho *= 1.0 / static_cast<double>(zs.size());
    return rho;
}

std::string format_circuit(const Circuit &circuit) {
    std::string out;
    for (const auto &g : circuit) {
        out += g.str();
        out += '\n';
    }
    return out;
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name)) {
            continue;
        }
        auto fail = [&]() {
            return std::invalid_argument("bad circuit line " + std::to_string(line_no) + ": '" + line + "'");
        };
        long long a = 0;
        long long b = 0;
        if (!(fields >> a) || a < 1) {
            throw fail();
        }
        if (name == "CNOT") {
            if (!(fields >> b) || b < 1 || a == b) {
                throw fail();
            }
            c.push_back(Gate::cnot(static_cast<size_t>(a), static_cast<size_t>(b)));
        } else if (name == "H") {
            c.push_back(Gate::h(static_cast<size_t>(a)));
        } else if (name == "X") {
            c.push_back(Gate::x(static_cast<size_t>(a)));
        } else if (name == "Z") {
            c.push_back(Gate::z(static_cast<size_t>(a)));
        } else {
            throw fail();
        }
        std::string extra;
        if (fields >> extra) {
            throw fail();
        }
    }
    return c;
}

}  // namespace cosetgame::cosets
