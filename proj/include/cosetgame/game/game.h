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

#ifndef COSETGAME_GAME_GAME_H
#define COSETGAME_GAME_GAME_H

#include <cstdint>
#include <optional>
#include <vector>

#include "cosetgame/bound/bound.h"
#include "cosetgame/f2/subspace.h"
#include "cosetgame/qstate/rng.h"
#include "cosetgame/strategy/strategy.h"

namespace cosetgame::game {

using bound::Rational;
using f2::BitVec;
using f2::Subspace;
using strategy::StrategySpec;

/// Largest m for which G(2m, m) is enumerated.
constexpr unsigned MAX_ENUMERATED_M = 3;
/// Largest m accepted by monte_carlo.
constexpr unsigned MAX_SIMULATED_M = 10;

/// Every subspace of G(2m, m) for 1 <= m <= 3, computed once and cached.
const std::vector<Subspace> &all_subspaces(unsigned m);

/// Uniform W in G(2m, m).
Subspace sample_subspace(unsigned m, Rng &rng);

/// Mean of win_probability_formula over G(2m, m), exactly. Requires 1 <= m <= 3.
Rational exact_value(unsigned m);

/// Success probabilities of the optimal strategy for one W, averaged over
/// all (x, z) by exact projector accounting on state vectors.
struct SuccessProbs {
    double joint = 0;
    double bob = 0;
    double charlie = 0;
};

/// Exact success probabilities for a single label (x, z).
SuccessProbs label_success(const StrategySpec &spec, const BitVec &x, const BitVec &z);

/// label_success averaged over every (x, z) of the strategy's subspace.
SuccessProbs subspace_success(const StrategySpec &spec);

/// subspace_success for the optimal strategy on W.
SuccessProbs subspace_success(const Subspace &w);

struct SimulatedValue {
    /// Mean joint success over the evaluated subspaces.
    double value = 0;
    /// Standard error of the mean; zero when every subspace was evaluated.
    double std_error = 0;
    size_t subspaces = 0;
};

/// Game value by state-vector simulation. For m <= 2 every subspace is used;
/// for m = 3, `sample` distinct subspaces drawn with `seed`, or all of them if
/// sample >= 1395.
SimulatedValue exact_value_simulated(unsigned m, size_t sample = 100, uint64_t seed = 0);

struct RoundResult {
    Subspace w;
    BitVec x;
    BitVec z;
    BitVec x_hat;
    BitVec z_hat;
    bool bob_correct = false;
    bool charlie_correct = false;
    bool joint_win = false;

    bool operator==(const RoundResult &other) const = default;
};

/// Prepares |W_{x,z}>, applies the local circuits, measures every qubit in its
/// strategy basis, decodes, and judges both guesses by coset membership.
RoundResult play_round(const Subspace &w, const BitVec &x, const BitVec &z, const StrategySpec &spec, Rng &rng);

struct GameStats {
    unsigned m = 0;
    uint64_t rounds = 0;
    uint64_t seed = 0;
    uint64_t joint_wins = 0;
    uint64_t bob_wins = 0;
    uint64_t charlie_wins = 0;

    double joint_rate() const;
    double bob_rate() const;
    double charlie_rate() const;

    bool operator==(const GameStats &other) const = default;
};

struct MonteCarloOptions {
    /// Worker threads; 0 and 1 both mean sequential.
    unsigned threads = 1;
    /// Play every round on this subspace instead of sampling W.
    std::optional<Subspace> fixed_subspace;
    /// When set, receives one RoundResult per round, in round order.
    std::vector<RoundResult> *transcript = nullptr;
};

/// Round t draws all of its randomness from Rng::substream(seed, t), so the
/// result does not depend on the thread count. Throws std::invalid_argument
/// for rounds == 0 or m outside [1, 10].
GameStats monte_carlo(unsigned m, uint64_t rounds, uint64_t seed, const MonteCarloOptions &options = {});

}  // namespace cosetgame::game

#endif
