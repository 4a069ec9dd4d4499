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

#include "cosetgame/f2/bit_vec.h"

#include <bit>
#include <stdexcept>

namespace cosetgame::f2 {

namespace {

uint64_t low_mask(size_t len) {
    return len >= 64 ? ~uint64_t{0} : (uint64_t{1} << len) - 1;
}

}  // namespace

BitVec::BitVec(size_t len) : len_(len) {
    if (len > MAX_LEN) {
        throw std::invalid_argument("BitVec length " + std::to_string(len) + " exceeds 64");
    }
}

BitVec::BitVec(size_t len, uint64_t word) : BitVec(len) {
    if (word & ~low_mask(len)) {
        throw std::invalid_argument("BitVec word has bits beyond its length");
    }
    word_ = word;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        char c = bits[k];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("not a binary string: '" + std::string(bits) + "'");
        }
        v.set(k + 1, c == '1');
    }
    return v;
}

BitVec BitVec::unit(size_t len, size_t index) {
    BitVec v(len);
    v.set(index, true);
    return v;
}

BitVec BitVec::from_indices(size_t len, std::span<const size_t> indices) {
    BitVec v(len);
    for (size_t i : indices) {
        v.set(i, true);
    }
    return v;
}

BitVec BitVec::concat(const BitVec &first, const BitVec &second) {
    BitVec v(first.len_ + second.len_);
    v.word_ = (second.len_ >= 64 ? 0 : first.word_ << second.len_) | second.word_;
    return v;
}

uint64_t BitVec::bit_mask(size_t index) const {
    if (index < 1 || index > len_) {
        throw std::out_of_range(
            "coordinate " + std::to_string(index) + " outside [1, " + std::to_string(len_) + "]");
    }
    return uint64_t{1} << (len_ - index);
}

bool BitVec::get(size_t index) const {
    return (word_ & bit_mask(index)) != 0;
}

void BitVec::set(size_t index, bool value) {
    uint64_t m = bit_mask(index);
    word_ = value ? (word_ | m) : (word_ & ~m);
}

void BitVec::flip(size_t index) {
    word_ ^= bit_mask(index);
}

size_t BitVec::weight() const {
    return static_cast<size_t>(std::popcount(word_));
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> out;
    for (size_t i = 1; i <= len_; i++) {
        if (get(i)) {
            out.push_back(i);
        }
    }
    return out;
}

BitVec BitVec::slice(size_t first, size_t last) const {
    if (first < 1 || last > len_ || first > last + 1) {
        throw std::out_of_range("bad slice bounds");
    }
    size_t n = last + 1 - first;
    return BitVec(n, (word_ >> (len_ - last)) & low_mask(n));
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (len_ != other.len_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    word_ ^= other.word_;
    return *this;
}

std::string BitVec::str() const {
    std::string s(len_, '0');
    for (size_t i = 1; i <= len_; i++) {
        if (get(i)) {
            s[i - 1] = '1';
        }
    }
    return s;
}

BitVec operator^(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
}

BitVec operator+(BitVec a, const BitVec &b) {
    a ^= b;
    return a;
}

bool dot(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: length mismatch");
    }
    return (std::popcount(a.word() & b.word()) & 1) != 0;
}

std::vector<BitVec> span_of_units(size_t len, std::span<const size_t> indices) {
    if (indices.size() >= 63) {
        throw std::invalid_argument("span_of_units: too many generators");
    }
    std::vector<BitVec> out;
    out.reserve(size_t{1} << indices.size());
    for (uint64_t counter = 0; counter < (uint64_t{1} << indices.size()); counter++) {
        BitVec v(len);
        for (size_t t = 0; t < indices.size(); t++) {
            if ((counter >> t) & 1) {
                v.set(indices[t], true);
            }
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace cosetgame::f2
