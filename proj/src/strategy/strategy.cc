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

#include "cosetgame/strategy/strategy.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cosetgame/qstate/state_vec.h"

namespace cosetgame::strategy {

using qstate::Gate;
using qstate::MeasureBasis;

namespace {

bool contains_index(const std::vector<size_t> &v, size_t i) {
    return std::find(v.begin(), v.end(), i) != v.end();
}

std::vector<size_t> filter(const std::vector<size_t> &v, size_t lo, size_t hi) {
    std::vector<size_t> out;
    for (size_t i : v) {
        if (lo <= i && i <= hi) {
            out.push_back(i);
        }
    }
    return out;
}

BitMat checked_inverse(const BitMat &f) {
    auto inv = f.inverse();
    if (!inv) {
        throw std::logic_error("localization produced a singular coordinate map");
    }
    return *inv;
}

// Pairs the two lists positionally; both must be ascending and of equal length.
std::vector<IndexPair> zip_ascending(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    if (a.size() != b.size()) {
        throw std::logic_error("h: domain and codomain sizes differ");
    }
    std::vector<IndexPair> out;
    for (size_t t = 0; t < a.size(); t++) {
        out.emplace_back(a[t], b[t]);
    }
    return out;
}

}  // namespace

LocalSeparation separate_local(const Subspace &w) {
    size_t m = w.half();
    LocalSeparation sep;
    for (const auto &[i, j] : w.cross_pairs()) {
        if (j <= m) {
            sep.bob_gates.push_back(Gate::cnot(i, j));
        } else if (i > m) {
            sep.charlie_gates.push_back(Gate::cnot(i, j));
        } else {
            sep.cross_pairs.emplace_back(i, j);
            if (!contains_index(sep.entangled_controls, i)) {
                sep.entangled_controls.push_back(i);
            }
        }
    }
    for (size_t i : w.pivots()) {
        if (i > m) {
            sep.charlie_gates.push_back(Gate::h(i));
        } else if (!contains_index(sep.entangled_controls, i)) {
            sep.bob_gates.push_back(Gate::h(i));
        }
    }
    return sep;
}

LocalizedForm single_out_bell_pairs(const Subspace &w, const LocalSeparation &sep) {
    size_t m = w.half();
    const auto &rows = sep.entangled_controls;
    std::vector<size_t> cols;
    for (size_t j : w.non_pivots()) {
        if (j > m) {
            cols.push_back(j);
        }
    }

    // Cross adjacency: M[r][c] = 1 iff (rows[r], cols[c]) is in J'.
    std::vector<std::vector<uint8_t>> mat(rows.size(), std::vector<uint8_t>(cols.size(), 0));
    for (const auto &[i, j] : sep.cross_pairs) {
        auto r = std::find(rows.begin(), rows.end(), i) - rows.begin();
        auto c = std::find(cols.begin(), cols.end(), j) - cols.begin();
        mat[r][c] = 1;
    }

    LocalizedForm lf;
    lf.w = w;
    lf.bob_circuit = sep.bob_gates;
    lf.charlie_circuit = sep.charlie_gates;
    lf.f1 = BitMat::identity(m);
    lf.f2 = BitMat::identity(m);

    // Bob's CNOT(a, b) on two controls adds row b to row a and maps y_a += y_b.
    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<size_t, size_t>> pivots;
    for (size_t c = 0; c < cols.size(); c++) {
        size_t r = 0;
        while (r < rows.size() && (used[r] || !mat[r][c])) {
            r++;
        }
        if (r == rows.size()) {
            continue;
        }
        used[r] = true;
        pivots.emplace_back(r, c);
        for (size_t r2 = 0; r2 < rows.size(); r2++) {
            if (r2 == r || !mat[r2][c]) {
                continue;
            }
            for (size_t k = 0; k < cols.size(); k++) {
                mat[r2][k] ^= mat[r][k];
            }
            lf.bob_circuit.push_back(Gate::cnot(rows[r2], rows[r]));
            lf.f1.row(rows[r2] - 1) ^= lf.f1.row(rows[r] - 1);
        }
    }

    // Charlie's CNOT(a, b) on two targets adds column a to column b and maps y_b += y_a.
    for (const auto &[r, p] : pivots) {
        for (size_t q = 0; q < cols.size(); q++) {
            if (q == p || !mat[r][q]) {
                continue;
            }
            mat[r][q] = 0;
            lf.charlie_circuit.push_back(Gate::cnot(cols[p], cols[q]));
            lf.f2.row(cols[q] - m - 1) ^= lf.f2.row(cols[p] - m - 1);
        }
        lf.residual_pairs.emplace_back(rows[r], cols[p]);
    }

    for (size_t r = 0; r < rows.size(); r++) {
        if (!used[r]) {
            lf.bob_circuit.push_back(Gate::h(rows[r]));
        }
    }

    lf.f1_inverse = checked_inverse(lf.f1);
    lf.f2_inverse = checked_inverse(lf.f2);

    std::vector<size_t> domain;
    for (size_t i : filter(w.pivots(), 1, m)) {
        bool paired = std::any_of(lf.residual_pairs.begin(), lf.residual_pairs.end(), [&](const IndexPair &pr) {
            return pr.first == i;
        });
        if (!paired) {
            domain.push_back(i);
        }
    }
    std::vector<size_t> codomain;
    for (size_t j : cols) {
        bool paired = std::any_of(lf.residual_pairs.begin(), lf.residual_pairs.end(), [&](const IndexPair &pr) {
            return pr.second == j;
        });
        if (!paired) {
            codomain.push_back(j);
        }
    }
    lf.h = zip_ascending(domain, codomain);
    return lf;
}

LocalizedForm localize(const Subspace &w) {
    return single_out_bell_pairs(w, separate_local(w));
}

LocalizedForm classical_form(const Subspace &w) {
    size_t m = w.half();
    LocalizedForm lf;
    lf.w = w;
    lf.f1 = lf.f1_inverse = BitMat::identity(m);
    lf.f2 = lf.f2_inverse = BitMat::identity(m);
    lf.h = zip_ascending(filter(w.pivots(), 1, m), filter(w.non_pivots(), m + 1, 2 * m));
    return lf;
}

BitVec LocalizedForm::localized_input(const BitVec &x, const BitVec &z) const {
    size_t n = 2 * m();
    BitVec v = x + z;
    return BitVec::concat(f1.apply(v.slice(1, n / 2)), f2.apply(v.slice(n / 2 + 1, n)));
}

Circuit LocalizedForm::residual_circuit() const {
    Circuit c;
    for (const auto &pr : residual_pairs) {
        c.push_back(Gate::h(pr.first));
    }
    for (const auto &[i, j] : residual_pairs) {
        c.push_back(Gate::cnot(i, j));
    }
    return c;
}

StrategySpec::StrategySpec(LocalizedForm lf) : lf_(std::move(lf)) {
    size_t m = lf_.m();
    bob_rules_.resize(m);
    charlie_rules_.resize(m);
    // Qubits whose own bit is needed: Bob's x coordinates and Charlie's z coordinates.
    for (size_t i : lf_.w.non_pivots()) {
        if (i <= m) {
            bob_rules_[i - 1] = QubitRule{MeasureBasis::Comp, i, false};
        }
    }
    for (size_t i : lf_.w.pivots()) {
        if (i > m) {
            charlie_rules_[i - m - 1] = QubitRule{MeasureBasis::Comp, i, false};
        }
    }
    // Unpaired qubits stand in for the partner coordinate under h.
    for (const auto &[i, j] : lf_.h) {
        bob_rules_[i - 1] = QubitRule{MeasureBasis::Comp, j, false};
        charlie_rules_[j - m - 1] = QubitRule{MeasureBasis::Comp, i, false};
    }
    // Bell pairs: +i for Bob means y_j = 0, +i for Charlie means y_i = 1.
    for (const auto &[i, j] : lf_.residual_pairs) {
        bob_rules_[i - 1] = QubitRule{MeasureBasis::ImagPair, j, false};
        charlie_rules_[j - m - 1] = QubitRule{MeasureBasis::ImagPair, i, true};
    }
}

const std::vector<QubitRule> &StrategySpec::rules(Side side) const {
    return side == Side::Bob ? bob_rules_ : charlie_rules_;
}

std::vector<MeasureBasis> StrategySpec::bases(Side side) const {
    std::vector<MeasureBasis> out;
    for (const auto &r : rules(side)) {
        out.push_back(r.basis);
    }
    return out;
}

BitVec StrategySpec::decode(const BitVec &outcomes, Side side) const {
    size_t m = lf_.m();
    if (outcomes.size() != m) {
        throw std::invalid_argument("decode: need one outcome per local qubit");
    }
    BitVec y(2 * m);
    const auto &rs = rules(side);
    for (size_t q = 0; q < m; q++) {
        y.set(rs[q].coord, outcomes.get(q + 1) != rs[q].invert);
    }
    BitVec guess =
        BitVec::concat(lf_.f1_inverse.apply(y.slice(1, m)), lf_.f2_inverse.apply(y.slice(m + 1, 2 * m)));
    return side == Side::Bob ? lf_.w.reduce(guess) : f2::dual_canonical_rep(lf_.w, guess);
}

BitVec StrategySpec::encode(const BitVec &guess, Side side) const {
    size_t m = lf_.m();
    BitVec y = BitVec::concat(lf_.f1.apply(guess.slice(1, m)), lf_.f2.apply(guess.slice(m + 1, 2 * m)));
    BitVec out(m);
    const auto &rs = rules(side);
    for (size_t q = 0; q < m; q++) {
        out.set(q + 1, y.get(rs[q].coord) != rs[q].invert);
    }
    return out;
}

qstate::ProjectorSpec StrategySpec::projectors(const BitVec &guess, Side side) const {
    BitVec bits = encode(guess, side);
    const auto &rs = rules(side);
    qstate::ProjectorSpec spec;
    for (size_t q = 0; q < rs.size(); q++) {
        spec.push_back(qstate::projector_for(rs[q].basis, bits.get(q + 1)));
    }
    return spec;
}

qstate::ProjectorSpec StrategySpec::bob_projectors(const BitVec &x_hat) const {
    return projectors(x_hat, Side::Bob);
}

qstate::ProjectorSpec StrategySpec::charlie_projectors(const BitVec &z_hat) const {
    return projectors(z_hat, Side::Charlie);
}

std::vector<BitVec> StrategySpec::guesses(Side side) const {
    auto reps = f2::coset_reps(lf_.w);
    return f2::span_of_units(lf_.w.ambient_dim(), side == Side::Bob ? reps.x_support : reps.z_support);
}

StrategySpec build_strategy(LocalizedForm lf) {
    return StrategySpec(std::move(lf));
}

Eigen::MatrixXcd povm_element(const StrategySpec &spec, Side side, const BitVec &guess) {
    size_t m = spec.m();
    size_t offset = side == Side::Bob ? 0 : m;
    const Circuit &local = side == Side::Bob ? spec.form().bob_circuit : spec.form().charlie_circuit;
    Circuit shifted;
    for (auto g : local) {
        g.qubit -= offset;
        if (g.is_cnot()) {
            g.target -= offset;
        }
        shifted.push_back(g);
    }
    auto dim = static_cast<Eigen::Index>(size_t{1} << m);
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index c = 0; c < dim; c++) {
        auto s = qstate::StateVec::basis(m, static_cast<uint64_t>(c));
        s.apply(shifted);
        for (Eigen::Index r = 0; r < dim; r++) {
            u(r, c) = s[static_cast<uint64_t>(r)];
        }
    }
    auto spec_p = side == Side::Bob ? spec.bob_projectors(guess) : spec.charlie_projectors(guess);
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (auto p : spec_p) {
        auto a = qstate::projector_vector(p);
        Eigen::VectorXcd next(v.size() * 2);
        for (Eigen::Index k = 0; k < v.size(); k++) {
            next(2 * k) = v(k) * a[0];
            next(2 * k + 1) = v(k) * a[1];
        }
        v = next;
    }
    return u.adjoint() * (v * v.adjoint()) * u;
}

BitVec decode(const BitVec &outcomes, const LocalizedForm &lf, Side side) {
    return StrategySpec(lf).decode(outcomes, side);
}

bound::Rational win_probability_formula(const Subspace &w) {
    size_t m = w.half();
    std::vector<size_t> second_half;
    for (size_t i = m + 1; i <= 2 * m; i++) {
        second_half.push_back(i);
    }
    size_t k = f2::intersection_dim(w, second_half);
    return bound::inverse_pow2(static_cast<unsigned>(m - k));
}

}  // namespace cosetgame::strategy
