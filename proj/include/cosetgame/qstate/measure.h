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

#ifndef COSETGAME_QSTATE_MEASURE_H
#define COSETGAME_QSTATE_MEASURE_H

#include <array>
#include <vector>

#include "cosetgame/qstate/rng.h"
#include "cosetgame/qstate/state_vec.h"

namespace cosetgame::qstate {

/// Rank-1 single-qubit projector. PlusI and MinusI project onto
/// (|0> + i|1>)/sqrt(2) and (|0> - i|1>)/sqrt(2).
enum class Projector { Comp0, Comp1, PlusI, MinusI };

/// One projector per qubit, in qubit order.
using ProjectorSpec = std::vector<Projector>;

/// Computational basis, or the {|+i>, |-i>} basis.
enum class MeasureBasis { Comp, ImagPair };

/// Outcome bit b in `basis` selects this projector: 0 -> |0> or |+i>, 1 -> |1> or |-i>.
Projector projector_for(MeasureBasis basis, bool outcome);

/// Components (<0|v>, <1|v>) of the projector's unit vector v.
std::array<Amplitude, 2> projector_vector(Projector p);

/// |<pi|s>|^2 for the product state |pi> described by `spec`, which must
/// cover every qubit of s.
double project_prob(const StateVec &s, const ProjectorSpec &spec);

/// Probability that qubits first_qubit .. first_qubit + spec.size() - 1 are
/// found in the product state `spec`, with every other qubit unmeasured.
double marginal_project_prob(const StateVec &s, const ProjectorSpec &spec, size_t first_qubit);

struct MeasureResult {
    bool outcome;
    StateVec collapsed;
};

/// Samples one qubit with Born probabilities and renormalizes the post-measurement state.
MeasureResult measure_qubit(const StateVec &s, size_t qubit, MeasureBasis basis, Rng &rng);

/// In-place variant of measure_qubit.
bool measure_qubit_inplace(StateVec &s, size_t qubit, MeasureBasis basis, Rng &rng);

}  // namespace cosetgame::qstate

#endif
