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

#ifndef COSETGAME_F2_BIT_MAT_H
#define COSETGAME_F2_BIT_MAT_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cosetgame/f2/bit_vec.h"

namespace cosetgame::f2 {

/// A dense matrix over F2 stored as a list of row vectors.
///
/// Rows are positions in a list and are indexed from 0. Columns are
/// coordinates and follow the 1-based convention of BitVec.
class BitMat {
   public:
    BitMat() = default;
    BitMat(size_t rows, size_t cols);
    BitMat(size_t cols, std::vector<BitVec> rows);

    /// Parses "101001,011101,000010" (rows joined by commas).
    static BitMat parse(std::string_view text);
    static BitMat identity(size_t n);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool empty() const {
        return rows_.empty();
    }

    const BitVec &row(size_t r) const {
        return rows_.at(r);
    }
    BitVec &row(size_t r) {
        return rows_.at(r);
    }
    const std::vector<BitVec> &row_data() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_.at(r).get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_.at(r).set(c, value);
    }
    void append_row(const BitVec &v);

    BitVec column(size_t c) const;
    BitMat transpose() const;

    /// M v, with v indexed by columns and the result indexed by rows.
    BitVec apply(const BitVec &v) const;
    BitMat operator*(const BitMat &rhs) const;

    size_t rank() const;
    std::optional<BitMat> inverse() const;

    std::string str() const;

    bool operator==(const BitMat &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    BitMat mat;
    /// 1-based pivot column of each remaining row.
    std::vector<size_t> pivots;
};

/// Reduced row echelon form. Zero rows are dropped, so `mat.rows()` is the rank.
RrefResult rref(const BitMat &mat);

}  // namespace cosetgame::f2

#endif
