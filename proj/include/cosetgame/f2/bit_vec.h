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

#ifndef COSETGAME_F2_BIT_VEC_H
#define COSETGAME_F2_BIT_VEC_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cosetgame::f2 {

/// A vector over F2 with at most 64 coordinates, packed into one word.
///
/// Coordinates are 1-based. Coordinate 1 is stored in the most significant
/// used bit, so `word()` is exactly the computational basis index of the
/// ket |v> when qubit 1 is read as the leftmost character of the bit string.
/// Bits above `size()` are always zero.
class BitVec {
   public:
    static constexpr size_t MAX_LEN = 64;

    BitVec() = default;
    explicit BitVec(size_t len);
    BitVec(size_t len, uint64_t word);

    /// Parses a string of '0'/'1' characters; the first character is coordinate 1.
    static BitVec from_string(std::string_view bits);
    /// The unit vector e_i.
    static BitVec unit(size_t len, size_t index);
    static BitVec from_indices(size_t len, std::span<const size_t> indices);
    static BitVec concat(const BitVec &first, const BitVec &second);

    size_t size() const {
        return len_;
    }
    uint64_t word() const {
        return word_;
    }

    bool get(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);

    bool is_zero() const {
        return word_ == 0;
    }
    size_t weight() const;
    /// Ascending 1-based coordinates of the nonzero entries.
    std::vector<size_t> support() const;
    /// Coordinates first..last inclusive, renumbered from 1.
    BitVec slice(size_t first, size_t last) const;

    BitVec &operator^=(const BitVec &other);
    BitVec &operator+=(const BitVec &other) {
        return *this ^= other;
    }

    std::string str() const;

    bool operator==(const BitVec &other) const = default;
    std::strong_ordering operator<=>(const BitVec &other) const = default;

   private:
    uint64_t bit_mask(size_t index) const;

    size_t len_ = 0;
    uint64_t word_ = 0;
};

BitVec operator^(BitVec a, const BitVec &b);
BitVec operator+(BitVec a, const BitVec &b);

/// Parity of the coordinatewise product.
bool dot(const BitVec &a, const BitVec &b);

/// Every vector of span{e_i : i in indices}, in binary counter order where the
/// first listed index is the least significant counter bit.
std::vector<BitVec> span_of_units(size_t len, std::span<const size_t> indices);

}  // namespace cosetgame::f2

#endif
