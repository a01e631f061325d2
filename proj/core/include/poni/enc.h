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
#include <optional>
#include <span>
#include <vector>

#include "poni/backends.h"
#include "poni/coset_state.h"
#include "poni/osp.h"
#include "poni/poni.h"
#include "poni/subspace.h"

namespace poni {

inline constexpr size_t kPrfKeySize = 16;

struct VerificationKey {
    std::array<uint8_t, kPrfKeySize> prf_key{};
    /// Next index to issue. Starts at 1; indices in [1, counter) have been used.
    uint64_t counter = 1;

    bool issued(uint64_t index) const { return index >= 1 && index < counter; }

    std::vector<uint8_t> to_bytes() const;
    static VerificationKey from_bytes(std::span<const uint8_t> data);
};

struct PublicKeyBundle {
    PublicKey pke;
    PublicKey ahe;
};

struct SecretKeyBundle {
    SecretKey pke;
    SecretKey ahe;
};

struct KeyPair {
    PublicKeyBundle pk;
    SecretKeyBundle sk;

    std::vector<uint8_t> public_bytes() const;
    std::vector<uint8_t> secret_bytes() const;
    static PublicKeyBundle parse_public(std::span<const uint8_t> data);
    static SecretKeyBundle parse_secret(std::span<const uint8_t> data);
};

/// Plaintext of ct1: rows of M_S and the masked message.
struct MaskedMessage {
    F2Matrix M_S;
    F2Vector masked;

    std::vector<uint8_t> encode() const;
    static MaskedMessage decode(std::span<const uint8_t> data, size_t lambda);
};

class Ciphertext {
   public:
    size_t lambda = 0;
    uint64_t index = 0;
    std::optional<CosetState> quantum;
    std::vector<uint8_t> ct1;
    std::vector<uint8_t> ct2;

    /// "PONI1" | version | lambda u16 | index u64 | blob | ct1 | ct2, each of
    /// the last three u32 length-prefixed. An empty blob means no register.
    std::vector<uint8_t> to_record() const;
    static Ciphertext from_record(std::span<const uint8_t> record);
};

inline constexpr uint8_t kRecordVersion = 1;

struct EncryptResult {
    Ciphertext ct;
    VerificationKey next_vk;
};

/// (S, x) for one index: rows drawn from the PRF stream until 2*lambda/6 are
/// independent, then x reduced mod S.
std::pair<Subspace, F2Vector> prf_to_coset(const Prf &prf, std::span<const uint8_t> prf_key, uint64_t index,
                                           size_t lambda);

class PoniEncryption {
   public:
    explicit PoniEncryption(size_t lambda, Backends backends = Backends::reference());

    size_t lambda() const { return profile_.n; }
    const DimensionProfile &profile() const { return profile_; }
    size_t message_bits() const { return profile_.d_S; }
    const Backends &backends() const { return backends_; }

    KeyPair keygen(Rng &rng) const;
    VerificationKey vkgen(Rng &rng) const;

    std::pair<Subspace, F2Vector> coset_for(const VerificationKey &vk, uint64_t index) const;

    /// Encrypts under index vk.counter and returns the advanced key.
    EncryptResult encrypt(const PublicKeyBundle &pk, const F2Vector &m, const VerificationKey &vk, Rng &rng) const;

    /// Consumes the quantum register.
    F2Vector decrypt(const SecretKeyBundle &sk, Ciphertext ct, Rng &rng) const;

    MaskedMessage open_ct1(const SecretKeyBundle &sk, const Ciphertext &ct) const;
    F2Vector open_ct2(const SecretKeyBundle &sk, const Ciphertext &ct) const;

   private:
    DimensionProfile profile_;
    Backends backends_;
};

/// Verifier side of a ciphertext audit. Wraps the coset verifier; on Acc it
/// follows the decision with PONI_CORRECTION carrying Enc_ahe(z').
class EncVerifierSession : public FrameHandler {
   public:
    EncVerifierSession(const PoniEncryption &scheme, const VerificationKey &vk, const PublicKey &pk_ahe,
                       uint64_t index, OspSender &osp, uint64_t session, Rng &rng);

    std::vector<Frame> start();
    std::vector<Frame> handle(const Frame &in) override;

    bool done() const { return inner_.done(); }
    bool aborted() const { return inner_.aborted(); }
    Decision decision() const { return inner_.result().decision; }
    const CosetVerifier &inner() const { return inner_; }

   private:
    std::vector<Frame> after(std::vector<Frame> out);

    const PoniEncryption &scheme_;
    PublicKey pk_ahe_;
    Rng &rng_;
    CosetVerifier inner_;
    bool correction_sent_ = false;
};

/// Prover side of a ciphertext audit over one stored ciphertext.
class EncProverSession : public FrameHandler {
   public:
    EncProverSession(Backends backends, Ciphertext ct, OspReceiver &osp, Rng &rng);

    std::vector<Frame> handle(const Frame &in) override;

    /// True once the session has run to its end (Rej, or Acc plus correction).
    bool completed() const { return completed_; }
    std::optional<Decision> decision() const { return prover_.decision(); }
    uint64_t index() const { return ct_.index; }
    /// The updated ciphertext. Valid once completed().
    Ciphertext take_ciphertext();

   private:
    Backends backends_;
    Ciphertext ct_;
    CosetProver prover_;
    bool awaiting_correction_ = false;
    bool completed_ = false;
};

}  // namespace poni
