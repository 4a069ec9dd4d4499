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

#include "cosetgame/f2/bit_mat.h"

#include <stdexcept>
#include <utility>

namespace cosetgame::f2 {

BitMat::BitMat(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMat::BitMat(size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("BitMat: row length does not match column count");
        }
    }
}

BitMat BitMat::parse(std::string_view text) {
    std::vector<BitVec> rows;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view piece = text.substr(start, end - start);
        while (!piece.empty() && piece.front() == ' ') {
            piece.remove_prefix(1);
        }
        while (!piece.empty() && piece.back() == ' ') {
            piece.remove_suffix(1);
        }
        if (piece.empty()) {
            throw std::invalid_argument("empty row in matrix text '" + std::string(text) + "'");
        }
        rows.push_back(BitVec::from_string(piece));
        start = end + 1;
    }
    size_t cols = rows.front().size();
    return BitMat(cols, std::move(rows));
}

BitMat BitMat::identity(size_t n) {
    BitMat m(n, n);
    for (size_t r = 0; r < n; r++) {
        m.set(r, r + 1, true);
    }
    return m;
}

void BitMat::append_row(const BitVec &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMat::append_row: length mismatch");
    }
    rows_.push_back(v);
}

BitVec BitMat::column(size_t c) const {
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r + 1, rows_[r].get(c));
    }
    return out;
}

BitMat BitMat::transpose() const {
    BitMat t(cols_, rows_.size());
    for (size_t c = 1; c <= cols_; c++) {
        t.rows_[c - 1] = column(c);
    }
    return t;
}

BitVec BitMat::apply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("BitMat::apply: length mismatch");
    }
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r + 1, dot(rows_[r], v));
    }
    return out;
}

BitMat BitMat::operator*(const BitMat &rhs) const {
    if (cols_ != rhs.rows()) {
        throw std::invalid_argument("BitMat product: shape mismatch");
    }
    BitMat out(rows_.size(), rhs.cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k = 1; k <= cols_; k++) {
            if (rows_[r].get(k)) {
                out.rows_[r] ^= rhs.rows_[k - 1];
            }
        }
    }
    return out;
}

size_t BitMat::rank() const {
    return rref(*this).mat.rows();
}

std::optional<BitMat> BitMat::inverse() const {
    size_t n = rows_.size();
    if (n != cols_) {
        return std::nullopt;
    }
    // Gauss-Jordan on [M | I].
    std::vector<BitVec> aug;
    aug.reserve(n);
    for (size_t r = 0; r < n; r++) {
        aug.push_back(BitVec::concat(rows_[r], BitVec::unit(n, r + 1)));
    }
    for (size_t c = 1; c <= n; c++) {
        size_t p = c - 1;
        while (p < n && !aug[p].get(c)) {
            p++;
        }
        if (p == n) {
            return std::nullopt;
        }
        std::swap(aug[p], aug[c - 1]);
        for (size_t r = 0; r < n; r++) {
            if (r != c - 1 && aug[r].get(c)) {
                aug[r] ^= aug[c - 1];
            }
        }
    }
    BitMat inv(n, n);
    for (size_t r = 0; r < n; r++) {
        inv.rows_[r] = aug[r].slice(n + 1, 2 * n);
    }
    return inv;
}

std::string BitMat::str() const {
    std::string s;
    for (size_t r = 0; r < rows_.size(); r++) {
        if (r) {
            s += ',';
        }
        s += rows_[r].str();
    }
    return s;
}

RrefResult rref(const BitMat &mat) {
    std::vector<BitVec> rows = mat.row_data();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 1; c <= mat.cols() && next < rows.size(); c++) {
        size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[next]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        next++;
    }
    rows.resize(next);
    return RrefResult{BitMat(mat.cols(), std::move(rows)), std::move(pivots)};
}

}  // namespace cosetgame::f2
