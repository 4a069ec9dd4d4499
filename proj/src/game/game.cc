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

#include "cosetgame/game/game.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "cosetgame/cosets/cosets.h"
#include "cosetgame/qstate/measure.h"

namespace cosetgame::game {

using strategy::Side;

namespace {

void check_enumerable(unsigned m, const char *what) {
    if (m < 1 || m > MAX_ENUMERATED_M) {
        throw std::out_of_range(std::string(what) + ": m must be in [1, 3], got " + std::to_string(m));
    }
}

// a + b lies in W-perp iff it is orthogonal to every generator of W.
bool same_dual_coset(const Subspace &w, const BitVec &a, const BitVec &b) {
    BitVec d = a + b;
    for (const auto &row : w.generator().row_data()) {
        if (f2::dot(d, row)) {
            return false;
        }
    }
    return true;
}

BitVec random_on(size_t n, const std::vector<size_t> &coords, Rng &rng) {
    BitVec v(n);
    for (size_t c : coords) {
        v.set(c, rng.bit());
    }
    return v;
}

qstate::StateVec localized_state(const StrategySpec &spec, const BitVec &x, const BitVec &z) {
    const auto &lf = spec.form();
    auto s = cosets::coset_state_direct(cosets::CosetLabel(lf.w, x, z));
    s.apply(lf.bob_circuit);
    s.apply(lf.charlie_circuit);
    return s;
}

}  // namespace

const std::vector<Subspace> &all_subspaces(unsigned m) {
    check_enumerable(m, "all_subspaces");
    static const std::vector<Subspace> g1 = f2::enumerate_subspaces(2, 1);
    static const std::vector<Subspace> g2 = f2::enumerate_subspaces(4, 2);
    static const std::vector<Subspace> g3 = f2::enumerate_subspaces(6, 3);
    return m == 1 ? g1 : m == 2 ? g2 : g3;
}

Subspace sample_subspace(unsigned m, Rng &rng) {
    if (m >= 1 && m <= MAX_ENUMERATED_M) {
        const auto &all = all_subspaces(m);
        return all[rng.below(all.size())];
    }
    size_t n = 2 * size_t{m};
    if (m < 1 || n > f2::BitVec::MAX_LEN) {
        throw std::out_of_range("sample_subspace: unsupported m = " + std::to_string(m));
    }
    uint64_t mask = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    while (true) {
        f2::BitMat g(0, n);
        for (unsigned r = 0; r < m; r++) {
            g.append_row(BitVec(n, rng.next_u64() & mask));
        }
        if (g.rank() == m) {
            return Subspace::span(g);
        }
    }
}

Rational exact_value(unsigned m) {
    check_enumerable(m, "exact_value");
    Rational sum = 0;
    const auto &all = all_subspaces(m);
    for (const auto &w : all) {
        sum += strategy::win_probability_formula(w);
    }
    return sum / Rational(all.size());
}

SuccessProbs label_success(const StrategySpec &spec, const BitVec &x, const BitVec &z) {
    const auto &w = spec.form().w;
    size_t m = spec.m();
    auto s = localized_state(spec, x, z);
    SuccessProbs out;
    for (const auto &x_hat : spec.guesses(Side::Bob)) {
        if (!f2::same_coset(w, x, x_hat)) {
            continue;
        }
        auto bob = spec.bob_projectors(x_hat);
        out.bob += qstate::marginal_project_prob(s, bob, 1);
        for (const auto &z_hat : spec.guesses(Side::Charlie)) {
            if (!same_dual_coset(w, z, z_hat)) {
                continue;
            }
            auto both = bob;
            auto charlie = spec.charlie_projectors(z_hat);
            both.insert(both.end(), charlie.begin(), charlie.end());
            out.joint += qstate::project_prob(s, both);
        }
    }
    for (const auto &z_hat : spec.guesses(Side::Charlie)) {
        if (same_dual_coset(w, z, z_hat)) {
            out.charlie += qstate::marginal_project_prob(s, spec.charlie_projectors(z_hat), m + 1);
        }
    }
    return out;
}

SuccessProbs subspace_success(const StrategySpec &spec) {
    SuccessProbs total;
    auto labels = cosets::CosetLabel::all(spec.form().w);
    for (const auto &label : labels) {
        auto p = label_success(spec, label.x(), label.z());
        total.joint += p.joint;
        total.bob += p.bob;
        total.charlie += p.charlie;
    }
    double n = static_cast<double>(labels.size());
    return SuccessProbs{total.joint / n, total.bob / n, total.charlie / n};
}

SuccessProbs subspace_success(const Subspace &w) {
    return subspace_success(strategy::build_strategy(strategy::localize(w)));
}

SimulatedValue exact_value_simulated(unsigned m, size_t sample, uint64_t seed) {
    check_enumerable(m, "exact_value_simulated");
    const auto &all = all_subspaces(m);
    std::vector<size_t> chosen(all.size());
    std::iota(chosen.begin(), chosen.end(), size_t{0});
    bool exhaustive = m <= 2 || sample >= all.size();
    if (!exhaustive) {
        if (sample < 2) {
            throw std::invalid_argument("exact_value_simulated: sample must be at least 2");
        }
        // Partial Fisher-Yates: the first `sample` entries are a uniform subset.
        Rng rng(seed);
        for (size_t t = 0; t < sample; t++) {
            std::swap(chosen[t], chosen[t + rng.below(chosen.size() - t)]);
        }
        chosen.resize(sample);
    }

    std::vector<double> values;
    for (size_t idx : chosen) {
        values.push_back(subspace_success(all[idx]).joint);
    }
    double n = static_cast<double>(values.size());
    double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    SimulatedValue out{mean, 0.0, values.size()};
    if (!exhaustive) {
        double ss = 0;
        for (double v : values) {
            ss += (v - mean) * (v - mean);
        }
        double population = static_cast<double>(all.size());
        double fpc = (population - n) / (population - 1);
        out.std_error = std::sqrt(ss / (n - 1) / n * fpc);
    }
    return out;
}

RoundResult play_round(const Subspace &w, const BitVec &x, const BitVec &z, const StrategySpec &spec, Rng &rng) {
    if (!(spec.form().w == w)) {
        throw std::invalid_argument("play_round: strategy was built for a different subspace");
    }
    size_t m = spec.m();
    auto s = localized_state(spec, x, z);
    BitVec bob_bits(m);
    BitVec charlie_bits(m);
    auto bob_bases = spec.bases(Side::Bob);
    auto charlie_bases = spec.bases(Side::Charlie);
    for (size_t q = 1; q <= m; q++) {
        bob_bits.set(q, qstate::measure_qubit_inplace(s, q, bob_bases[q - 1], rng));
    }
    for (size_t q = 1; q <= m; q++) {
        charlie_bits.set(q, qstate::measure_qubit_inplace(s, m + q, charlie_bases[q - 1], rng));
    }
    RoundResult r;
    r.w = w;
    r.x = x;
    r.z = z;
    r.x_hat = spec.decode(bob_bits, Side::Bob);
    r.z_hat = spec.decode(charlie_bits, Side::Charlie);
    r.bob_correct = f2::same_coset(w, x, r.x_hat);
    r.charlie_correct = same_dual_coset(w, z, r.z_hat);
    r.joint_win = r.bob_correct && r.charlie_correct;
    return r;
}

double GameStats::joint_rate() const {
    return rounds ? static_cast<double>(joint_wins) / static_cast<double>(rounds) : 0.0;
}
double GameStats::bob_rate() const {
    return rounds ? static_cast<double>(bob_wins) / static_cast<double>(rounds) : 0.0;
}
double GameStats::charlie_rate() const {
    return rounds ? static_cast<double>(charlie_wins) / static_cast<double>(rounds) : 0.0;
}

GameStats monte_carlo(unsigned m, uint64_t rounds, uint64_t seed, const MonteCarloOptions &options) {
    if (rounds == 0) {
        throw std::invalid_argument("monte_carlo: rounds must be at least 1");
    }
    if (m < 1 || m > MAX_SIMULATED_M) {
        throw std::invalid_argument("monte_carlo: m must be in [1, 10], got " + std::to_string(m));
    }
    std::optional<StrategySpec> fixed_spec;
    if (options.fixed_subspace) {
        if (options.fixed_subspace->ambient_dim() != 2 * size_t{m} || options.fixed_subspace->dim() != m) {
            throw std::invalid_argument("monte_carlo: fixed subspace is not in G(2m, m)");
        }
        fixed_spec.emplace(strategy::build_strategy(strategy::localize(*options.fixed_subspace)));
    }
    if (options.transcript) {
        options.transcript->assign(rounds, RoundResult{});
    }

    struct Counts {
        uint64_t joint = 0;
        uint64_t bob = 0;
        uint64_t charlie = 0;
    };
    auto run_range = [&](uint64_t begin, uint64_t end, Counts &counts) {
        for (uint64_t t = begin; t < end; t++) {
            Rng rng = Rng::substream(seed, t);
            std::optional<StrategySpec> sampled;
            if (!fixed_spec) {
                sampled.emplace(strategy::build_strategy(strategy::localize(sample_subspace(m, rng))));
            }
            const StrategySpec &spec = fixed_spec ? *fixed_spec : *sampled;
            const auto &w = spec.form().w;
            auto reps = f2::coset_reps(w);
            BitVec x = random_on(w.ambient_dim(), reps.x_support, rng);
            BitVec z = random_on(w.ambient_dim(), reps.z_support, rng);
            RoundResult r = play_round(w, x, z, spec, rng);
            counts.joint += r.joint_win;
            counts.bob += r.bob_correct;
            counts.charlie += r.charlie_correct;
            if (options.transcript) {
                (*options.transcript)[t] = std::move(r);
            }
        }
    };

    uint64_t workers = std::clamp<uint64_t>(options.threads, 1, rounds);
    std::vector<Counts> counts(workers);
    if (workers == 1) {
        run_range(0, rounds, counts[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (uint64_t k = 0; k < workers; k++) {
            uint64_t begin = rounds * k / workers;
            uint64_t end = rounds * (k + 1) / workers;
            pool.emplace_back([&, k, begin, end]() {
                try {
                    run_range(begin, end, counts[k]);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    GameStats stats;
    stats.m = m;
    stats.rounds = rounds;
    stats.seed = seed;
    for (const auto &c : counts) {
        stats.joint_wins += c.joint;
        stats.bob_wins += c.bob;
        stats.charlie_wins += c.charlie;
    }
    return stats;
}

}  // namespace cosetgame::game
