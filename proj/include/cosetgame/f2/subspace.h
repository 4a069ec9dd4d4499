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

#ifndef COSETGAME_F2_SUBSPACE_H
#define COSETGAME_F2_SUBSPACE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetgame/f2/bit_mat.h"

namespace cosetgame::f2 {

using IndexPair = std::pair<size_t, size_t>;

/// A linear subspace of F2^n, stored canonically by its RREF generator matrix.
///
/// Two Subspace values compare equal exactly when they are the same subspace.
/// The coset game works with the half-dimensional case n = 2m, dim = m; the
/// general case is kept because duals, sums and enumeration reuse it.
class Subspace {
   public:
    Subspace() = default;

    /// Row space of `generators`; any rank is accepted.
    static Subspace span(const BitMat &generators);
    static Subspace span(size_t ambient, std::span<const BitVec> generators);
    /// Parses matrix text and takes the row space; see BitMat::parse.
    static Subspace parse(std::string_view text);
    static Subspace zero(size_t ambient);

    size_t ambient_dim() const {
        return gen_.cols();
    }
    size_t dim() const {
        return gen_.rows();
    }
    /// m for a subspace of G(2m, m); throws std::logic_error otherwise.
    size_t half() const;

    const BitMat &generator() const {
        return gen_;
    }
    /// Pivot columns I (1-based, ascending).
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }
    /// Complement of the pivot columns, I^c.
    std::vector<size_t> non_pivots() const;
    /// J = {(i, j) : i in I, j in I^c, A_ij = 1}, sorted by (i, j).
    const std::vector<IndexPair> &cross_pairs() const {
        return cross_pairs_;
    }

    /// Reduces v against the pivots. The result is zero on I, lies in
    /// span{e_i : i in I^c}, and equals v modulo the subspace.
    BitVec reduce(const BitVec &v) const;
    bool contains(const BitVec &v) const;
    /// All 2^dim elements, indexed by the binary counter over rows.
    std::vector<BitVec> elements() const;

    bool operator==(const Subspace &other) const {
        return gen_ == other.gen_;
    }

   private:
    explicit Subspace(RrefResult r);

    BitMat gen_;
    std::vector<size_t> pivots_;
    std::vector<IndexPair> cross_pairs_;
};

Subspace orthogonal_complement(const Subspace &w);

/// W1 + W2.
Subspace subspace_sum(const Subspace &a, const Subspace &b);

/// dim(W ∩ span{e_i : i in coords}).
size_t intersection_dim(const Subspace &w, std::span<const size_t> coords);

/// Canonical coset representative sets: CS(W) = span{e_i : i in I^c} and
/// CS(W⊥) = span{e_i : i in I}.
struct CosetReps {
    std::vector<size_t> x_support;
    std::vector<size_t> z_support;
};
CosetReps coset_reps(const Subspace &w);

/// True iff a + b is in W.
bool same_coset(const Subspace &w, const BitVec &a, const BitVec &b);

/// The representative in span{e_i : i in I} of the coset z + W⊥, where I are
/// the pivots of W. Its i-th entry is the parity of z with the row of W whose
/// pivot is i.
BitVec dual_canonical_rep(const Subspace &w, const BitVec &z);

/// Streams every k-dimensional subspace of F2^n exactly once.
///
/// Order: pivot sets in lexicographic order; within a pivot set the free
/// entries (row r, column c > pivot r, c not a pivot) are ordered by column
/// and then row, and enumerated as a binary counter whose least significant
/// bit is the lowest column.
class SubspaceStream {
   public:
    SubspaceStream(size_t n, size_t k);

    std::optional<Subspace> next();

   private:
    bool advance_pivots();
    void load_free_entries();

    size_t n_;
    size_t k_;
    bool done_ = false;
    std::vector<size_t> pivots_;
    std::vector<IndexPair> free_entries_;
    uint64_t counter_ = 0;
};

std::vector<Subspace> enumerate_subspaces(size_t n, size_t k);

}  // namespace cosetgame::f2

#endif
