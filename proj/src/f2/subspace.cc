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

#include "cosetgame/f2/subspace.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cosetgame::f2 {

Subspace::Subspace(RrefResult r) : gen_(std::move(r.mat)), pivots_(std::move(r.pivots)) {
    for (size_t row = 0; row < gen_.rows(); row++) {
        size_t i = pivots_[row];
        for (size_t j : gen_.row(row).support()) {
            if (j != i) {
                cross_pairs_.emplace_back(i, j);
            }
        }
    }
    std::sort(cross_pairs_.begin(), cross_pairs_.end());
}

Subspace Subspace::span(const BitMat &generators) {
    return Subspace(rref(generators));
}

Subspace Subspace::span(size_t ambient, std::span<const BitVec> generators) {
    return span(BitMat(ambient, std::vector<BitVec>(generators.begin(), generators.end())));
}

Subspace Subspace::parse(std::string_view text) {
    return span(BitMat::parse(text));
}

Subspace Subspace::zero(size_t ambient) {
    return span(BitMat(0, ambient));
}

size_t Subspace::half() const {
    if (ambient_dim() != 2 * dim()) {
        throw std::logic_error(
            "subspace of dimension " + std::to_string(dim()) + " in F2^" + std::to_string(ambient_dim()) +
            " is not half-dimensional");
    }
    return dim();
}

std::vector<size_t> Subspace::non_pivots() const {
    std::vector<size_t> out;
    size_t p = 0;
    for (size_t c = 1; c <= ambient_dim(); c++) {
        if (p < pivots_.size() && pivots_[p] == c) {
            p++;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

BitVec Subspace::reduce(const BitVec &v) const {
    if (v.size() != ambient_dim()) {
        throw std::invalid_argument("Subspace::reduce: length mismatch");
    }
    BitVec out = v;
    for (size_t r = 0; r < gen_.rows(); r++) {
        if (out.get(pivots_[r])) {
            out ^= gen_.row(r);
        }
    }
    return out;
}

bool Subspace::contains(const BitVec &v) const {
    return reduce(v).is_zero();
}

std::vector<BitVec> Subspace::elements() const {
    std::vector<BitVec> out;
    size_t k = dim();
    out.reserve(size_t{1} << k);
    for (uint64_t counter = 0; counter < (uint64_t{1} << k); counter++) {
        BitVec v(ambient_dim());
        for (size_t r = 0; r < k; r++) {
            if ((counter >> r) & 1) {
                v ^= gen_.row(r);
            }
        }
        out.push_back(v);
    }
    return out;
}

Subspace orthogonal_complement(const Subspace &w) {
    // One kernel vector per free column f: e_f plus e_{pivot(r)} for each row r with A_{r,f} = 1.
    size_t n = w.ambient_dim();
    std::vector<BitVec> basis;
    for (size_t f : w.non_pivots()) {
        BitVec v = BitVec::unit(n, f);
        for (size_t r = 0; r < w.dim(); r++) {
            if (w.generator().get(r, f)) {
                v.set(w.pivots()[r], true);
            }
        }
        basis.push_back(v);
    }
    return Subspace::span(n, basis);
}

Subspace subspace_sum(const Subspace &a, const Subspace &b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    }
    std::vector<BitVec> rows = a.generator().row_data();
    rows.insert(rows.end(), b.generator().row_data().begin(), b.generator().row_data().end());
    return Subspace::span(a.ambient_dim(), rows);
}

size_t intersection_dim(const Subspace &w, std::span<const size_t> coords) {
    // The restriction map W -> F2^{S^c} has kernel W ∩ span{e_i : i in S}.
    BitVec keep(w.ambient_dim());
    for (size_t c = 1; c <= w.ambient_dim(); c++) {
        keep.set(c, true);
    }
    for (size_t c : coords) {
        keep.set(c, false);
    }
    std::vector<BitVec> restricted;
    for (const auto &row : w.generator().row_data()) {
        restricted.push_back(BitVec(row.size(), row.word() & keep.word()));
    }
    return w.dim() - BitMat(w.ambient_dim(), restricted).rank();
}

CosetReps coset_reps(const Subspace &w) {
    return CosetReps{w.non_pivots(), w.pivots()};
}

bool same_coset(const Subspace &w, const BitVec &a, const BitVec &b) {
    return w.contains(a + b);
}

BitVec dual_canonical_rep(const Subspace &w, const BitVec &z) {
    BitVec out(w.ambient_dim());
    for (size_t r = 0; r < w.dim(); r++) {
        out.set(w.pivots()[r], dot(z, w.generator().row(r)));
    }
    return out;
}

SubspaceStream::SubspaceStream(size_t n, size_t k) : n_(n), k_(k) {
    if (k > n || n > BitVec::MAX_LEN) {
        throw std::invalid_argument(
            "enumerate_subspaces: need 0 <= k <= n <= 64, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    pivots_.resize(k);
    for (size_t t = 0; t < k; t++) {
        pivots_[t] = t + 1;
    }
    load_free_entries();
}

void SubspaceStream::load_free_entries() {
    free_entries_.clear();
    for (size_t c = 1; c <= n_; c++) {
        if (std::find(pivots_.begin(), pivots_.end(), c) != pivots_.end()) {
            continue;
        }
        for (size_t r = 0; r < k_; r++) {
            if (c > pivots_[r]) {
                free_entries_.emplace_back(r, c);
            }
        }
    }
    if (free_entries_.size() >= 64) {
        throw std::invalid_argument("enumerate_subspaces: too many free entries for a 64-bit counter");
    }
    counter_ = 0;
}

bool SubspaceStream::advance_pivots() {
    // Next k-combination of [1, n] in lexicographic order.
    size_t t = k_;
    while (t > 0 && pivots_[t - 1] == n_ - k_ + t) {
        t--;
    }
    if (t == 0) {
        return false;
    }
    pivots_[t - 1]++;
    for (size_t s = t; s < k_; s++) {
        pivots_[s] = pivots_[s - 1] + 1;
    }
    load_free_entries();
    return true;
}

std::optional<Subspace> SubspaceStream::next() {
    if (done_) {
        return std::nullopt;
    }
    if (counter_ == (uint64_t{1} << free_entries_.size())) {
        if (!advance_pivots()) {
            done_ = true;
            return std::nullopt;
        }
    }
    BitMat gen(k_, n_);
    for (size_t r = 0; r < k_; r++) {
        gen.set(r, pivots_[r], true);
    }
    for (size_t t = 0; t < free_entries_.size(); t++) {
        if ((counter_ >> t) & 1) {
            gen.set(free_entries_[t].first, free_entries_[t].second, true);
        }
    }
    counter_++;
    return Subspace::span(gen);
}

std::vector<Subspace> enumerate_subspaces(size_t n, size_t k) {
    std::vector<Subspace> out;
    SubspaceStream stream(n, k);
    while (auto w = stream.next()) {
        out.push_back(std::move(*w));
    }
    return out;
}

}  // namespace cosetgame::f2
