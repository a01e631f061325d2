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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poni/f2.h"

namespace poni {

class Subspace;

/// Appends big-endian integers and GF(2) objects to a byte buffer.
class ByteWriter {
   public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v);
    void u32(uint32_t v);
    void u64(uint64_t v);
    void bytes(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    /// u32 length prefix followed by the bytes.
    void blob(std::span<const uint8_t> data);
    void vector(const F2Vector &v);
    void subspace(const Subspace &s);

    const std::vector<uint8_t> &data() const { return buf_; }
    std::vector<uint8_t> take() { return std::move(buf_); }

   private:
    std::vector<uint8_t> buf_;
};

/// Reads what ByteWriter writes. Throws DecodeError on truncation.
class ByteReader {
   public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8();
    uint16_t u16();
    uint32_t u32();
    uint64_t u64();
    std::span<const uint8_t> bytes(size_t count);
    std::vector<uint8_t> blob();
    F2Vector vector(size_t n);
    Subspace subspace(size_t n);

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return remaining() == 0; }
    void expect_done() const;

   private:
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

std::string to_hex(std::span<const uint8_t> bytes);
/// Throws DecodeError on odd length or non-hex characters.
std::vector<uint8_t> from_hex(std::string_view hex);

}  // namespace poni
