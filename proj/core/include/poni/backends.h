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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "poni/f2.h"
#include "poni/rng.h"

namespace poni {

struct PublicKey {
    std::vector<uint8_t> bytes;
    bool operator==(const PublicKey &) const = default;
};

struct SecretKey {
    std::vector<uint8_t> bytes;
    bool operator==(const SecretKey &) const = default;
};

struct BackendKeyPair {
    PublicKey pk;
    SecretKey sk;
};

/// Public-key encryption of byte strings.
class PkeBackend {
   public:
    virtual ~PkeBackend() = default;
    virtual std::string name() const = 0;
    virtual BackendKeyPair keygen(Rng &rng) const = 0;
    virtual std::vector<uint8_t> encrypt(const PublicKey &pk, std::span<const uint8_t> plaintext, Rng &rng) const = 0;
    /// Throws BackendError on a key mismatch or a corrupt ciphertext.
    virtual std::vector<uint8_t> decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const = 0;
};

/// Additively homomorphic encryption over F_2^n.
class AheBackend {
   public:
    virtual ~AheBackend() = default;
    virtual std::string name() const = 0;
    virtual BackendKeyPair keygen(Rng &rng) const = 0;
    virtual std::vector<uint8_t> encrypt(const PublicKey &pk, const F2Vector &plaintext, Rng &rng) const = 0;
    virtual F2Vector decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const = 0;
    /// Enc(a), c -> Enc(a + c).
    virtual std::vector<uint8_t> eval_add_constant(std::span<const uint8_t> ciphertext, const F2Vector &c) const = 0;
    /// Enc(a), Enc(b) -> Enc(a + b), both under the same key.
    virtual std::vector<uint8_t> eval_add(std::span<const uint8_t> lhs, std::span<const uint8_t> rhs) const = 0;
};

/// Deterministic keyed byte stream: block `block` of the stream for (key, index).
class Prf {
   public:
    virtual ~Prf() = default;
    virtual std::string name() const = 0;
    virtual std::array<uint8_t, 32> block(std::span<const uint8_t> key, uint64_t index, uint64_t block) const = 0;
};

/// Byte-at-a-time reader over a Prf's stream for one (key, index).
class PrfStream {
   public:
    PrfStream(const Prf &prf, std::span<const uint8_t> key, uint64_t index);

    uint8_t next_byte();
    /// ceil(n/8) fresh bytes, padding bits cleared.
    F2Vector next_vector(size_t n);

   private:
    const Prf &prf_;
    std::vector<uint8_t> key_;
    uint64_t index_;
    uint64_t block_no_ = 0;
    std::array<uint8_t, 32> block_{};
    size_t pos_ = 32;
};

// Reference backends. They check correctness and information flow only:
// ciphertexts carry their plaintext in the clear, tagged with a key id that
// decryption checks. They provide NO confidentiality.

class TransparentPke final : public PkeBackend {
   public:
    std::string name() const override { return "transparent-pke (INSECURE)"; }
    BackendKeyPair keygen(Rng &rng) const override;
    std::vector<uint8_t> encrypt(const PublicKey &pk, std::span<const uint8_t> plaintext, Rng &rng) const override;
    std::vector<uint8_t> decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const override;
};

class TransparentAhe final : public AheBackend {
   public:
    std::string name() const override { return "transparent-ahe (INSECURE)"; }
    BackendKeyPair keygen(Rng &rng) const override;
    std::vector<uint8_t> encrypt(const PublicKey &pk, const F2Vector &plaintext, Rng &rng) const override;
    F2Vector decrypt(const SecretKey &sk, std::span<const uint8_t> ciphertext) const override;
    std::vector<uint8_t> eval_add_constant(std::span<const uint8_t> ciphertext, const F2Vector &c) const override;
    std::vector<uint8_t> eval_add(std::span<const uint8_t> lhs, std::span<const uint8_t> rhs) const override;
};

/// SHA-256(key || index (u64 BE) || block (u64 BE)).
class Sha256Prf final : public Prf {
   public:
    std::string name() const override { return "sha256-counter"; }
    std::array<uint8_t, 32> block(std::span<const uint8_t> key, uint64_t index, uint64_t block) const override;
};

struct Backends {
    const PkeBackend *pke;
    const AheBackend *ahe;
    const Prf *prf;

    /// Process-wide transparent PKE/AHE and SHA-256 PRF.
    static Backends reference();
};

}  // namespace poni
