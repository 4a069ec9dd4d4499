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

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cosetgame/bound/bound.h"
#include "cosetgame/cli/cli.h"
#include "cosetgame/cosets/cosets.h"
#include "cosetgame/f2/gaussian_binomial.h"
#include "cosetgame/game/game.h"
#include "cosetgame/strategy/strategy.h"

namespace cosetgame::cli {

namespace {

constexpr double TOL = 1e-9;
constexpr uint64_t VERIFY_SEED = 20260101;

struct CheckResult {
    bool ok;
    std::string detail;
};

std::vector<size_t> second_half(unsigned m) {
    std::vector<size_t> v(m);
    std::iota(v.begin(), v.end(), size_t{m} + 1);
    return v;
}

// Exhaustive at m <= 2, `count` seeded draws (with repetition) at m = 3.
std::vector<f2::Subspace> subspaces_for(unsigned m, size_t count) {
    const auto &all = game::all_subspaces(m);
    if (m <= 2 || count >= all.size()) {
        return all;
    }
    Rng rng(VERIFY_SEED);
    std::vector<f2::Subspace> out;
    for (size_t t = 0; t < count; t++) {
        out.push_back(all[rng.below(all.size())]);
    }
    return out;
}

CheckResult check_counting(unsigned m) {
    std::map<size_t, uint64_t> hist;
    for (const auto &w : game::all_subspaces(m)) {
        hist[f2::intersection_dim(w, second_half(m))]++;
    }
    std::vector<std::string> parts;
    bool ok = true;
    for (unsigned k = 0; k <= m; k++) {
        auto expected = bound::count_by_intersection(m, k);
        ok = ok && f2::BigInt(hist[k]) == expected;
        parts.push_back(fmt::format("k={}:{}", k, hist[k]));
    }
    return {ok, fmt::format("{}", fmt::join(parts, " "))};
}

CheckResult check_vandermonde(unsigned m) {
    auto lhs = bound::vandermonde_sum(m);
    auto rhs = f2::gaussian_binomial(2 * m, m);
    return {lhs == rhs, "C(2m,m)_2 = " + rhs.str()};
}

CheckResult check_envelope(unsigned m) {
    auto ub = bound::upper_bound(m);
    return {bound::rate_envelope(m).contains(ub), "upper_bound = " + bound::to_string(ub)};
}

CheckResult check_tightness(unsigned m) {
    auto v = game::exact_value(m);
    return {v == bound::upper_bound(m), "exact_value = " + bound::to_string(v)};
}

CheckResult check_encodings(unsigned m) {
    size_t checked = 0;
    double worst = 0;
    bool ok = true;
    auto run = [&](const cosets::CosetLabel &label) {
        auto direct = cosets::coset_state_direct(label);
        auto pauli = cosets::coset_state_pauli(label);
        auto encoded = cosets::coset_state_encoded(label);
        worst = std::max(worst, qstate::max_abs_diff(direct, pauli));
        ok = ok && qstate::max_abs_diff(direct, pauli) <= TOL && qstate::equal_up_to_phase(direct, encoded, TOL);
        checked++;
    };
    if (m <= 2) {
        for (const auto &w : game::all_subspaces(m)) {
            for (const auto &label : cosets::CosetLabel::all(w)) {
                run(label);
            }
        }
    } else {
        Rng rng(VERIFY_SEED);
        for (int t = 0; t < 200; t++) {
            auto w = game::sample_subspace(m, rng);
            auto reps = f2::coset_reps(w);
            f2::BitVec x(2 * m);
            f2::BitVec z(2 * m);
            for (size_t c : reps.x_support) {
                x.set(c, rng.bit());
            }
            for (size_t c : reps.z_support) {
                z.set(c, rng.bit());
            }
            run(cosets::CosetLabel(w, x, z));
        }
    }
    return {ok, fmt::format("{} labels, max |direct - pauli| = {:.3g}", checked, worst)};
}

CheckResult check_localized_form(unsigned m) {
    size_t checked = 0;
    bool ok = true;
    for (const auto &w : game::all_subspaces(m)) {
        auto lf = strategy::localize(w);
        for (const auto &label : cosets::CosetLabel::all(w)) {
            auto s = cosets::coset_state_direct(label);
            s.apply(lf.bob_circuit);
            s.apply(lf.charlie_circuit);
            auto expected = qstate::StateVec::basis(lf.localized_input(label.x(), label.z()));
            expected.apply(lf.residual_circuit());
            ok = ok && qstate::max_abs_diff(s, expected) <= TOL;
            checked++;
        }
    }
    return {ok, fmt::format("{} labels", checked)};
}

CheckResult check_povm_completeness(unsigned m) {
    double worst = 0;
    for (const auto &w : game::all_subspaces(m)) {
        auto spec = strategy::build_strategy(strategy::localize(w));
        for (auto side : {strategy::Side::Bob, strategy::Side::Charlie}) {
            auto dim = static_cast<Eigen::Index>(size_t{1} << m);
            Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
            for (const auto &g : spec.guesses(side)) {
                sum += strategy::povm_element(spec, side, g);
            }
            worst = std::max(worst, (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= TOL, fmt::format("max deviation {:.3g}", worst)};
}

CheckResult check_per_subspace(unsigned m) {
    double worst = 0;
    auto ws = subspaces_for(m, 100);
    for (const auto &w : ws) {
        double formula = bound::to_double(strategy::win_probability_formula(w));
        worst = std::max(worst, std::abs(game::subspace_success(w).joint - formula));
    }
    return {worst <= TOL, fmt::format("{} subspaces, max deviation {:.3g}", ws.size(), worst)};
}

CheckResult check_reduced_states(unsigned m) {
    auto ws = subspaces_for(m, 20);
    size_t pairs = 0;
    bool ok = true;
    std::vector<f2::BitVec> units;
    for (size_t i = m + 1; i <= 2 * m; i++) {
        units.push_back(f2::BitVec::unit(2 * m, i));
    }
    for (const auto &w : ws) {
        auto widened = f2::subspace_sum(w, f2::Subspace::span(2 * m, units));
        auto xs = f2::span_of_units(2 * m, w.non_pivots());
        std::vector<qstate::DensityOp> rho;
        for (const auto &x : xs) {
            rho.push_back(cosets::averaged_bob_state(w, x));
        }
        for (size_t a = 0; a < xs.size(); a++) {
            for (size_t b = a + 1; b < xs.size(); b++) {
                bool equal = qstate::frobenius_distance(rho[a], rho[b]) < TOL;
                bool orthogonal = std::abs(qstate::overlap(rho[a], rho[b])) < TOL;
                bool expect_equal = widened.contains(xs[a] + xs[b]);
                ok = ok && (expect_equal ? equal : orthogonal);
                pairs++;
            }
        }
    }
    return {ok, fmt::format("{} subspaces, {} pairs", ws.size(), pairs)};
}

CheckResult check_correlation(unsigned m) {
    size_t classical = 0;
    bool ok = true;
    for (const auto &w : game::all_subspaces(m)) {
        auto spec = strategy::build_strategy(strategy::localize(w));
        if (spec.form().num_pairs() != 0) {
            continue;
        }
        classical++;
        for (const auto &label : cosets::CosetLabel::all(w)) {
            auto p = game::label_success(spec, label.x(), label.z());
            bool deterministic = std::abs(p.joint) < TOL || std::abs(p.joint - 1) < TOL;
            ok = ok && deterministic && std::abs(p.bob - p.joint) < TOL && std::abs(p.charlie - p.joint) < TOL;
        }
    }
    return {ok, fmt::format("{} subspaces without Bell pairs", classical)};
}

CheckResult check_simulated_value(unsigned m) {
    auto sim = game::exact_value_simulated(m, 100, VERIFY_SEED);
    double exact = bound::to_double(game::exact_value(m));
    double tol = sim.std_error > 0 ? 3 * sim.std_error : TOL;
    return {std::abs(sim.value - exact) <= tol,
            fmt::format("{:.9f} over {} subspaces (tolerance {:.3g})", sim.value, sim.subspaces, tol)};
}

}  // namespace

int cmd_verify(unsigned m, std::ostream &out) {
    if (m < 1 || m > 3) {
        throw std::out_of_range("verify: m must be in [1, 3]");
    }
    const std::vector<std::pair<const char *, std::function<CheckResult(unsigned)>>> checks = {
        {"counting", check_counting},
        {"q_vandermonde", check_vandermonde},
        {"rate_envelope", check_envelope},
        {"tightness", check_tightness},
        {"encoding_identities", check_encodings},
        {"localized_form", check_localized_form},
        {"povm_completeness", check_povm_completeness},
        {"per_subspace_formula", check_per_subspace},
        {"reduced_states", check_reduced_states},
        {"classical_correlation", check_correlation},
        {"simulated_value", check_simulated_value},
    };
    bool all_ok = true;
    for (const auto &[name, fn] : checks) {
        auto r = fn(m);
        all_ok = all_ok && r.ok;
        fmt::print(out, "{} {}: {}\n", r.ok ? "PASS" : "FAIL", name, r.detail);
    }
    return all_ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

}  // namespace cosetgame::cli
