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

#include "poni/f2.h"

#include <bit>

#include "poni/errors.h"

namespace poni {

F2Vector::F2Vector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

F2Vector F2Vector::from_bits(std::string_view bits) {
    F2Vector v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("F2Vector::from_bits: expected '0' or '1'");
        }
    }
    return v;
}

F2Vector F2Vector::unit(size_t n, size_t index) {
    F2Vector v(n);
    v.set(index, true);
    return v;
}

F2Vector F2Vector::random(size_t n, Rng &rng) {
    F2Vector v(n);
    for (auto &w : v.words_) {
        w = rng();
    }
    if (n % 64 != 0) {
        v.words_.back() &= (uint64_t{1} << (n % 64)) - 1;
    }
    return v;
}

F2Vector F2Vector::from_u64(size_t n, uint64_t value) {
    F2Vector v(n);
    if (!v.words_.empty()) {
        if (n < 64) {
            value &= (uint64_t{1} << n) - 1;
        }
        v.words_[0] = value;
    }
    return v;
}

void F2Vector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

bool F2Vector::is_zero() const {
    for (auto w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t F2Vector::popcount() const {
    size_t c = 0;
    for (auto w : words_) {
        c += std::popcount(w);
    }
    return c;
}

size_t F2Vector::first_one() const {
    for (size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return k * 64 + std::countr_zero(words_[k]);
        }
    }
    return n_;
}

bool F2Vector::dot(const F2Vector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

F2Vector &F2Vector::operator^=(const F2Vector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

bool F2Vector::operator<(const F2Vector &other) const {
    if (n_ != other.n_) {
        return n_ < other.n_;
    }
    for (size_t k = words_.size(); k-- > 0;) {
        if (words_[k] != other.words_[k]) {
            return words_[k] < other.words_[k];
        }
    }
    return false;
}

std::string F2Vector::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::vector<uint8_t> F2Vector::to_bytes() const {
    std::vector<uint8_t> out(byte_size(), 0);
    for (size_t b = 0; b < out.size(); ++b) {
        out[b] = static_cast<uint8_t>(words_[b / 8] >> (8 * (b % 8)));
    }
    return out;
}

F2Vector F2Vector::from_bytes(size_t n, std::span<const uint8_t> bytes) {
    F2Vector v(n);
    if (bytes.size() != v.byte_size()) {
        throw DecodeError("F2Vector::from_bytes: wrong byte count");
    }
    for (size_t b = 0; b < bytes.size(); ++b) {
        v.words_[b / 8] |= uint64_t{bytes[b]} << (8 * (b % 8));
    }
    if (n % 64 != 0 && !v.words_.empty() && (v.words_.back() >> (n % 64)) != 0) {
        throw DecodeError("F2Vector::from_bytes: padding bits set");
    }
    return v;
}

void F2Vector::check_same_size(const F2Vector &other) const {
    if (n_ != other.n_) {
        throw DimensionMismatch("F2Vector: ambient dimensions differ (" + std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
    }
}

size_t F2VectorHash::operator()(const F2Vector &v) const {
    uint64_t h = v.size();
    for (auto w : v.words()) {
        h = splitmix64(h ^ w);
    }
    return static_cast<size_t>(h);
}

F2Matrix::F2Matrix(size_t cols, std::vector<F2Vector> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw DimensionMismatch("F2Matrix: row length differs from column count");
        }
    }
}

void F2Matrix::push_row(F2Vector row) {
    if (row.size() != cols_) {
        throw DimensionMismatch("F2Matrix::push_row: row length differs from column count");
    }
    rows_.push_back(std::move(row));
}

F2Vector F2Matrix::operator*(const F2Vector &v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("F2Matrix * F2Vector: dimension mismatch");
    }
    F2Vector out(rows_.size());
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].dot(v)) {
            out.set(i, true);
        }
    }
    return out;
}

}  // namespace poni
