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

#include "poni/backends.h"

#include <openssl/evp.h>

#include <stdexcept>

#include "poni/bytes.h"
#include "poni/errors.h"

namespace poni {

namespace {

constexpr size_t kKeyIdSize = 16;
constexpr uint8_t kPkeTag = 'P';
constexpr uint8_t kAheTag = 'H';

std::vector<uint8_t> random_key_id(Rng &rng) {
    std::vector<uint8_t> id(kKeyIdSize);
    for (size_t i = 0; i < kKeyIdSize; i += 8) {
        uint64_t w = rng();
        for (size_t j = 0; j < 8; ++j) {
            id[i + j] = static_cast<uint8_t>(w >> (8 * j));
        }
    }
    return id;
}

void check_key(const std::vector<uint8_t> &key, const char *what) {
    if (key.size() != kKeyIdSize) {
        throw BackendError(std::string(what) + ": malformed key");
    }
}

struct AheCiphertext {
    std::vector<uint8_t> key_id;
    F2Vector value;
};

AheCiphertext parse_ahe(std::span<const uint8_t> ct) {
    try {
        ByteReader r(ct);
        if (r.u8() != kAheTag) {
            throw BackendError("ahe: not an AHE ciphertext");
        }
        auto id = r.bytes(kKeyIdSize);
        size_t n = r.u16();
        F2Vector v = r.vector(n);
        r.expect_done();
        return AheCiphertext{{id.begin(), id.end()}, std::move(v)};
    } catch (const DecodeError &e) {
        throw BackendError(std::string("ahe: corrupt ciphertext: ") + e.what());
    }
}

std::vector<uint8_t> write_ahe(const std::vector<uint8_t> &key_id, const F2Vector &v) {
    ByteWriter w;
    w.u8(kAheTag);
    w.bytes(key_id);
    w.u16(static_cast<uint16_t>(v.size()));
    w.vector(v);
    return w.take();
}

}  // namespace

PrfStream::PrfStream(const Prf &prf, std::span<const uint8_t> key, uint64_t index)
    : prf_(prf), key_(key.begin(), key.end()), index_(index) {}

uint8_t PrfStream::next_byte() {
    if (pos_ == block_.size()) {
        block_ = prf_.block(key_, index_, block_no_++);
        pos_ = 0;
    }
    return block_[pos_++];
}

F2Vector PrfStream::next_vector(size_t n) {
    std::vector<uint8_t> bytes((n + 7) / 8);
    for (auto &b : bytes) {
        b = next_byte();
    }
    if (n % 8 != 0) {
        bytes.back() &= static_cast<uint8_t>((1u << (n % 8)) - 1);
    }
    return F2Vector::from_bytes(n, bytes);
}

BackendKeyPair TransparentPke::keygen(Rng &rng) const {
    auto id = random_key_id(rng);
    return BackendKeyPair{PublicKey{id}, SecretKey{id}};
}

std::vector<uint8_t> TransparentPke::encrypt(const PublicKey &pk, std::span<const uint8_t> plaintext, Rng &) const {
    check_key(pk.bytes, "pke encrypt");
    ByteWriter w;
    w.u8(kPkeTag);
    w.bytes(pk.bytes);
    w.blob(plaintext);
    return w.take();
}

std::vector<uint8_t> TransparentPke::decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const {
    check_key(sk.bytes, "pke decrypt");
    try {
        ByteReader r(ciphertext);
        if (r.u8() != kPkeTag) {
            throw BackendError("pke: not a PKE ciphertext");
        }
        auto id = r.bytes(kKeyIdSize);
        if (!std::equal(id.begin(), id.end(), sk.bytes.begin())) {
            throw BackendError("pke: ciphertext was encrypted under a different key");
        }
        auto pt = r.blob();
        r.expect_done();
        return pt;
    } catch (const DecodeError &e) {
        throw BackendError(std::string("pke: corrupt ciphertext: ") + e.what());
    }
}

BackendKeyPair TransparentAhe::keygen(Rng &rng) const {
    auto id = random_key_id(rng);
    return BackendKeyPair{PublicKey{id}, SecretKey{id}};
}

std::vector<uint8_t> TransparentAhe::encrypt(const PublicKey &pk, const F2Vector &plaintext, Rng &) const {
    check_key(pk.bytes, "ahe encrypt");
    return write_ahe(pk.bytes, plaintext);
}

F2Vector TransparentAhe::decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const {
    check_key(sk.bytes, "ahe decrypt");
    auto ct = parse_ahe(ciphertext);
    if (ct.key_id != sk.bytes) {
        throw BackendError("ahe: ciphertext was encrypted under a different key");
    }
    return std::move(ct.value);
}

std::vector<uint8_t> TransparentAhe::eval_add_constant(std::span<const uint8_t> ciphertext, const F2Vector &c) const {
    auto ct = parse_ahe(ciphertext);
    if (ct.value.size() != c.size()) {
        throw BackendError("ahe: constant has the wrong length");
    }
    return write_ahe(ct.key_id, ct.value ^ c);
}

std::vector<uint8_t> TransparentAhe::eval_add(std::span<const uint8_t> lhs, std::span<const uint8_t> rhs) const {
    auto a = parse_ahe(lhs);
    auto b = parse_ahe(rhs);
    if (a.key_id != b.key_id) {
        throw BackendError("ahe: operands are under different keys");
    }
    if (a.value.size() != b.value.size()) {
        throw BackendError("ahe: operands have different lengths");
    }
    return write_ahe(a.key_id, a.value ^ b.value);
}

std::array<uint8_t, 32> Sha256Prf::block(std::span<const uint8_t> key, uint64_t index, uint64_t block) const {
    ByteWriter w;
    w.bytes(key);
    w.u64(index);
    w.u64(block);
    std::array<uint8_t, 32> out{};
    unsigned int len = 0;
    if (EVP_Digest(w.data().data(), w.data().size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != 32) {
        throw std::runtime_error("Sha256Prf: digest failed");
    }
    return out;
}

Backends Backends::reference() {
    static const TransparentPke pke;
    static const TransparentAhe ahe;
    static const Sha256Prf prf;
    return Backends{&pke, &ahe, &prf};
}

}  // namespace poni
