// Copyright 2026 The poni Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "poni/rng.h"

namespace poni {

/// A bit-packed vector over GF(2). Bit i lives in word i / 64 at position
/// i % 64. Unused high bits of the last word are always zero.
class F2Vector {
   public:
    F2Vector() = default;
    explicit F2Vector(size_t n);

    /// Parses a string of '0'/'1' characters; character i is bit i.
    static F2Vector from_bits(std::string_view bits);
    static F2Vector unit(size_t n, size_t index);
    static F2Vector random(size_t n, Rng &rng);

    size_t size() const { return n_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value);
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    bool is_zero() const;
    size_t popcount() const;
    /// Index of the lowest set bit, or size() if zero.
    size_t first_one() const;
    /// Inner product over GF(2).
    bool dot(const F2Vector &other) const;

    F2Vector &operator^=(const F2Vector &other);
    F2Vector operator^(const F2Vector &other) const {
        F2Vector r = *this;
        r ^= other;
        return r;
    }
    F2Vector &operator+=(const F2Vector &other) { return *this ^= other; }
    F2Vector operator+(const F2Vector &other) const { return *this ^ other; }
    bool operator==(const F2Vector &other) const = default;
    bool operator<(const F2Vector &other) const;

    std::span<const uint64_t> words() const { return {words_.data(), words_.size()}; }
    std::span<uint64_t> words() { return {words_.data(), words_.size()}; }

    /// Low 64 bits as an integer (bit i -> 2^i). Handy for small-n enumeration.
    uint64_t to_u64() const { return words_.empty() ? 0 : words_[0]; }
    static F2Vector from_u64(size_t n, uint64_t value);

    std::string to_string() const;

    /// ceil(n/8) bytes, bit i stored in byte i/8 at bit position i%8.
    std::vector<uint8_t> to_bytes() const;
    static F2Vector from_bytes(size_t n, std::span<const uint8_t> bytes);
    size_t byte_size() const { return (n_ + 7) / 8; }

   private:
    void check_same_size(const F2Vector &other) const;

    size_t n_ = 0;
    // Inline storage covers n <= 128 without touching the heap.
    boost::container::small_vector<uint64_t, 2> words_;
};

struct F2VectorHash {
    size_t operator()(const F2Vector &v) const;
};

/// A dense matrix over GF(2) stored as rows of equal ambient dimension.
class F2Matrix {
   public:
    F2Matrix() = default;
    explicit F2Matrix(size_t cols) : cols_(cols) {}
    F2Matrix(size_t cols, std::vector<F2Vector> rows);

    size_t num_rows() const { return rows_.size(); }
    size_t num_cols() const { return cols_; }
    const std::vector<F2Vector> &rows() const { return rows_; }
    const F2Vector &row(size_t i) const { return rows_[i]; }
    void push_row(F2Vector row);

    /// Matrix-vector product: result bit i is row(i) . v.
    F2Vector operator*(const F2Vector &v) const;
    bool operator==(const F2Matrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

}  // namespace poni
