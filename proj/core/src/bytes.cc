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

#include "poni/bytes.h"

#include "poni/errors.h"
#include "poni/subspace.h"

namespace poni {

void ByteWriter::u16(uint16_t v) {
    u8(static_cast<uint8_t>(v >> 8));
    u8(static_cast<uint8_t>(v));
}

void ByteWriter::u32(uint32_t v) {
    u16(static_cast<uint16_t>(v >> 16));
    u16(static_cast<uint16_t>(v));
}

void ByteWriter::u64(uint64_t v) {
    u32(static_cast<uint32_t>(v >> 32));
    u32(static_cast<uint32_t>(v));
}

void ByteWriter::blob(std::span<const uint8_t> data) {
    u32(static_cast<uint32_t>(data.size()));
    bytes(data);
}

void ByteWriter::vector(const F2Vector &v) {
    auto b = v.to_bytes();
    bytes(b);
}

void ByteWriter::subspace(const Subspace &s) {
    u16(static_cast<uint16_t>(s.dim()));
    for (const auto &row : s.basis()) {
        vector(row);
    }
}

uint8_t ByteReader::u8() { return bytes(1)[0]; }

uint16_t ByteReader::u16() {
    auto b = bytes(2);
    return static_cast<uint16_t>((b[0] << 8) | b[1]);
}

uint32_t ByteReader::u32() {
    uint32_t hi = u16();
    return (hi << 16) | u16();
}

uint64_t ByteReader::u64() {
    uint64_t hi = u32();
    return (hi << 32) | u32();
}

std::span<const uint8_t> ByteReader::bytes(size_t count) {
    if (count > remaining()) {
        throw DecodeError("ByteReader: truncated input");
    }
    auto out = data_.subspan(pos_, count);
    pos_ += count;
    return out;
}

std::vector<uint8_t> ByteReader::blob() {
    uint32_t len = u32();
    auto b = bytes(len);
    return {b.begin(), b.end()};
}

F2Vector ByteReader::vector(size_t n) { return F2Vector::from_bytes(n, bytes((n + 7) / 8)); }

Subspace ByteReader::subspace(size_t n) {
    size_t dim = u16();
    if (dim > n) {
        throw DecodeError("ByteReader::subspace: dimension exceeds ambient dimension");
    }
    std::vector<F2Vector> rows;
    rows.reserve(dim);
    for (size_t i = 0; i < dim; ++i) {
        rows.push_back(vector(n));
    }
    auto [s, rank] = rref(F2Matrix(n, rows));
    if (rank != dim || s.basis() != rows) {
        throw DecodeError("ByteReader::subspace: basis is not in canonical form");
    }
    return s;
}

void ByteReader::expect_done() const {
    if (!done()) {
        throw DecodeError("ByteReader: trailing bytes");
    }
}

std::string to_hex(std::span<const uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 15]);
    }
    return s;
}

static int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<uint8_t> from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw DecodeError("from_hex: odd number of digits");
    }
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i) {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw DecodeError("from_hex: invalid digit");
        }
        out[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return out;
}

}  // namespace poni
