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

#include "cosetgame/qstate/measure.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cosetgame::qstate {

namespace {

// Branches below this probability are treated as impossible.
constexpr double DEGENERATE_BRANCH = 1e-12;

// <v|psi> restricted to the qubits covered by spec, leaving a vector over the other qubits.
std::vector<Amplitude> contract(const StateVec &s, const ProjectorSpec &spec, size_t first_qubit) {
    size_t n = s.num_qubits();
    size_t k = spec.size();
    if (first_qubit < 1 || first_qubit + k - 1 > n) {
        throw std::out_of_range("projector spec does not fit inside the register");
    }
    std::vector<std::array<Amplitude, 2>> bra(k);
    for (size_t t = 0; t < k; t++) {
        auto v = projector_vector(spec[t]);
        bra[t] = {std::conj(v[0]), std::conj(v[1])};
    }
    // Covered qubits occupy a contiguous block of index bits.
    size_t low_bits = n - (first_qubit + k - 1);
    uint64_t low_mask = (uint64_t{1} << low_bits) - 1;
    std::vector<Amplitude> out(size_t{1} << (n - k), Amplitude{0.0, 0.0});
    auto amps = s.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (amps[i] == Amplitude{0.0, 0.0}) {
            continue;
        }
        uint64_t block = (i >> low_bits) & ((uint64_t{1} << k) - 1);
        Amplitude coeff = 1.0;
        for (size_t t = 0; t < k; t++) {
            coeff *= bra[t][(block >> (k - 1 - t)) & 1];
        }
        uint64_t rest = ((i >> (low_bits + k)) << low_bits) | (i & low_mask);
        out[rest] += coeff * amps[i];
    }
    return out;
}

}  // namespace

Projector projector_for(MeasureBasis basis, bool outcome) {
    if (basis == MeasureBasis::Comp) {
        return outcome ? Projector::Comp1 : Projector::Comp0;
    }
    return outcome ? Projector::MinusI : Projector::PlusI;
}

std::array<Amplitude, 2> projector_vector(Projector p) {
    const double r = std::numbers::sqrt2 / 2;
    switch (p) {
        case Projector::Comp0:
            return {1.0, 0.0};
        case Projector::Comp1:
            return {0.0, 1.0};
        case Projector::PlusI:
            return {Amplitude(r, 0), Amplitude(0, r)};
        case Projector::MinusI:
            return {Amplitude(r, 0), Amplitude(0, -r)};
    }
    throw std::invalid_argument("unknown projector");
}

double project_prob(const StateVec &s, const ProjectorSpec &spec) {
    if (spec.size() != s.num_qubits()) {
        throw std::invalid_argument("project_prob: spec must cover every qubit");
    }
    if (spec.empty()) {
        return std::norm(s.amplitude(0));
    }
    return std::norm(contract(s, spec, 1)[0]);
}

double marginal_project_prob(const StateVec &s, const ProjectorSpec &spec, size_t first_qubit) {
    if (spec.empty()) {
        return s.norm_squared();
    }
    double p = 0;
    for (const auto &a : contract(s, spec, first_qubit)) {
        p += std::norm(a);
    }
    return p;
}

bool measure_qubit_inplace(StateVec &s, size_t qubit, MeasureBasis basis, Rng &rng) {
    uint64_t mask = s.qubit_mask(qubit);
    auto v0 = projector_vector(projector_for(basis, false));
    auto v1 = projector_vector(projector_for(basis, true));
    double p0 = 0;
    double p1 = 0;
    for (uint64_t i = 0; i < s.dim(); i++) {
        if (i & mask) {
            continue;
        }
        Amplitude a0 = s[i];
        Amplitude a1 = s[i | mask];
        p0 += std::norm(std::conj(v0[0]) * a0 + std::conj(v0[1]) * a1);
        p1 += std::norm(std::conj(v1[0]) * a0 + std::conj(v1[1]) * a1);
    }
    if (std::abs(p0 + p1 - 1.0) > TOLERANCE) {
        throw std::logic_error("measure_qubit: branch probabilities do not sum to 1");
    }
    bool outcome;
    if (p0 < DEGENERATE_BRANCH) {
        outcome = true;
    } else if (p1 < DEGENERATE_BRANCH) {
        outcome = false;
    } else {
        outcome = rng.uniform() >= p0 / (p0 + p1);
    }
    const auto &v = outcome ? v1 : v0;
    double scale = 1.0 / std::sqrt(outcome ? p1 : p0);
    for (uint64_t i = 0; i < s.dim(); i++) {
        if (i & mask) {
            continue;
        }
        Amplitude c = (std::conj(v[0]) * s[i] + std::conj(v[1]) * s[i | mask]) * scale;
        s[i] = v[0] * c;
        s[i | mask] = v[1] * c;
    }
    return outcome;
}

MeasureResult measure_qubit(const StateVec &s, size_t qubit, MeasureBasis basis, Rng &rng) {
    StateVec copy = s;
    bool outcome = measure_qubit_inplace(copy, qubit, basis, rng);
    return MeasureResult{outcome, std::move(copy)};
}

}  // namespace cosetgame::qstate
