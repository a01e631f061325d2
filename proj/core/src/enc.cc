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

#include "poni/enc.h"

#include <algorithm>

#include "poni/bytes.h"
#include "poni/errors.h"

namespace poni {

namespace {

constexpr std::array<uint8_t, 5> kRecordMagic = {'P', 'O', 'N', 'I', '1'};

void write_key(ByteWriter &w, const std::vector<uint8_t> &key) { w.blob(key); }

}  // namespace

std::vector<uint8_t> VerificationKey::to_bytes() const {
    ByteWriter w;
    w.bytes(prf_key);
    w.u64(counter);
    return w.take();
}

VerificationKey VerificationKey::from_bytes(std::span<const uint8_t> data) {
    ByteReader r(data);
    VerificationKey vk;
    auto key = r.bytes(kPrfKeySize);
    std::copy(key.begin(), key.end(), vk.prf_key.begin());
    vk.counter = r.u64();
    r.expect_done();
    if (vk.counter == 0) {
        throw DecodeError("verification key: counter must be at least 1");
    }
    return vk;
}

std::vector<uint8_t> KeyPair::public_bytes() const {
    ByteWriter w;
    write_key(w, pk.pke.bytes);
    write_key(w, pk.ahe.bytes);
    return w.take();
}

std::vector<uint8_t> KeyPair::secret_bytes() const {
    ByteWriter w;
    write_key(w, sk.pke.bytes);
    write_key(w, sk.ahe.bytes);
    return w.take();
}

PublicKeyBundle KeyPair::parse_public(std::span<const uint8_t> data) {
    ByteReader r(data);
    PublicKeyBundle pk{PublicKey{r.blob()}, PublicKey{r.blob()}};
    r.expect_done();
    return pk;
}

SecretKeyBundle KeyPair::parse_secret(std::span<const uint8_t> data) {
    ByteReader r(data);
    SecretKeyBundle sk{SecretKey{r.blob()}, SecretKey{r.blob()}};
    r.expect_done();
    return sk;
}

std::vector<uint8_t> MaskedMessage::encode() const {
    ByteWriter w;
    w.u16(static_cast<uint16_t>(M_S.num_rows()));
    w.u16(static_cast<uint16_t>(M_S.num_cols()));
    for (const auto &row : M_S.rows()) {
        w.vector(row);
    }
    w.vector(masked);
    return w.take();
}

MaskedMessage MaskedMessage::decode(std::span<const uint8_t> data, size_t lambda) {
    ByteReader r(data);
    size_t rows = r.u16();
    size_t cols = r.u16();
    if (cols != lambda || rows > lambda) {
        throw DecodeError("ct1: matrix shape does not match lambda");
    }
    F2Matrix m(cols);
    for (size_t i = 0; i < rows; ++i) {
        m.push_row(r.vector(cols));
    }
    F2Vector masked = r.vector(rows);
    r.expect_done();
    return MaskedMessage{std::move(m), std::move(masked)};
}

std::vector<uint8_t> Ciphertext::to_record() const {
    ByteWriter w;
    w.bytes(kRecordMagic);
    w.u8(kRecordVersion);
    w.u16(static_cast<uint16_t>(lambda));
    w.u64(index);
    if (quantum) {
        w.blob(quantum->to_blob());
    } else {
        w.u32(0);
    }
    w.blob(ct1);
    w.blob(ct2);
    return w.take();
}

Ciphertext Ciphertext::from_record(std::span<const uint8_t> record) {
    ByteReader r(record);
    auto magic = r.bytes(kRecordMagic.size());
    if (!std::equal(magic.begin(), magic.end(), kRecordMagic.begin())) {
        throw DecodeError("ciphertext record: bad magic");
    }
    if (uint8_t v = r.u8(); v != kRecordVersion) {
        throw DecodeError("ciphertext record: unsupported version " + std::to_string(v));
    }
    Ciphertext ct;
    ct.lambda = r.u16();
    ct.index = r.u64();
    auto blob = r.blob();
    if (!blob.empty()) {
        ct.quantum = CosetState::from_blob(blob);
        if (ct.quantum->ambient_dim() != ct.lambda) {
            throw DecodeError("ciphertext record: register width does not match lambda");
        }
    }
    ct.ct1 = r.blob();
    ct.ct2 = r.blob();
    r.expect_done();
    return ct;
}

std::pair<Subspace, F2Vector> prf_to_coset(const Prf &prf, std::span<const uint8_t> prf_key, uint64_t index,
                                           size_t lambda) {
    auto profile = DimensionProfile::standard(lambda);
    PrfStream stream(prf, prf_key, index);
    std::vector<F2Vector> rows;
    Subspace acc = Subspace::zero(lambda);
    while (acc.dim() < profile.d_S) {
        F2Vector row = stream.next_vector(lambda);
        if (!acc.contains(row)) {
            rows.push_back(std::move(row));
            acc = Subspace::span(lambda, rows);
        }
    }
    F2Vector x = acc.canonical_rep(stream.next_vector(lambda));
    return {std::move(acc), std::move(x)};
}

PoniEncryption::PoniEncryption(size_t lambda, Backends backends)
    : profile_(DimensionProfile::standard(lambda)), backends_(backends) {}

KeyPair PoniEncryption::keygen(Rng &rng) const {
    auto pke = backends_.pke->keygen(rng);
    auto ahe = backends_.ahe->keygen(rng);
    return KeyPair{PublicKeyBundle{pke.pk, ahe.pk}, SecretKeyBundle{pke.sk, ahe.sk}};
}

VerificationKey PoniEncryption::vkgen(Rng &rng) const {
    VerificationKey vk;
    for (auto &b : vk.prf_key) {
        b = static_cast<uint8_t>(rng());
    }
    vk.counter = 1;
    return vk;
}

std::pair<Subspace, F2Vector> PoniEncryption::coset_for(const VerificationKey &vk, uint64_t index) const {
    return prf_to_coset(*backends_.prf, vk.prf_key, index, lambda());
}

EncryptResult PoniEncryption::encrypt(const PublicKeyBundle &pk, const F2Vector &m, const VerificationKey &vk,
                                      Rng &rng) const {
    if (m.size() != message_bits()) {
        throw DimensionMismatch("encrypt: message must be " + std::to_string(message_bits()) + " bits, got " +
                                std::to_string(m.size()));
    }
    if (vk.counter == 0 || vk.counter == UINT64_MAX) {
        throw std::invalid_argument("encrypt: verification key counter exhausted");
    }
    const size_t n = lambda();
    auto [S, x] = coset_for(vk, vk.counter);
    F2Vector z = dual(S).canonical_rep(F2Vector::random(n, rng));

    F2Matrix M_S(n, S.basis());
    MaskedMessage payload{M_S, (M_S * z) ^ m};

    Ciphertext ct;
    ct.lambda = n;
    ct.index = vk.counter;
    ct.ct1 = backends_.pke->encrypt(pk.pke, payload.encode(), rng);
    ct.ct2 = backends_.ahe->encrypt(pk.ahe, F2Vector(n), rng);
    ct.quantum.emplace(std::move(S), x, z);

    VerificationKey next = vk;
    ++next.counter;
    return EncryptResult{std::move(ct), next};
}

MaskedMessage PoniEncryption::open_ct1(const SecretKeyBundle &sk, const Ciphertext &ct) const {
    try {
        return MaskedMessage::decode(backends_.pke->decrypt(sk.pke, ct.ct1), lambda());
    } catch (const DecodeError &e) {
        throw BackendError(std::string("ct1 plaintext is malformed: ") + e.what());
    }
}

F2Vector PoniEncryption::open_ct2(const SecretKeyBundle &sk, const Ciphertext &ct) const {
    F2Vector z_cor = backends_.ahe->decrypt(sk.ahe, ct.ct2);
    if (z_cor.size() != lambda()) {
        throw BackendError("ct2 plaintext has the wrong length");
    }
    return z_cor;
}

F2Vector PoniEncryption::decrypt(const SecretKeyBundle &sk, Ciphertext ct, Rng &rng) const {
    if (ct.lambda != lambda()) {
        throw DimensionMismatch("decrypt: ciphertext lambda does not match the scheme");
    }
    if (!ct.quantum) {
        throw std::invalid_argument("decrypt: ciphertext has no quantum register");
    }
    MaskedMessage opened = open_ct1(sk, ct);
    F2Vector z_cor = open_ct2(sk, ct);
    F2Vector z_prime = measure_hadamard(std::move(*ct.quantum), rng);
    ct.quantum.reset();
    return (opened.M_S * (z_prime ^ z_cor)) ^ opened.masked;
}

EncVerifierSession::EncVerifierSession(const PoniEncryption &scheme, const VerificationKey &vk,
                                       const PublicKey &pk_ahe, uint64_t index, OspSender &osp, uint64_t session,
                                       Rng &rng)
    : scheme_(scheme),
      pk_ahe_(pk_ahe),
      rng_(rng),
      inner_(
          [&] {
              auto [S, x] = scheme.coset_for(vk, index);
              return CosetVerifierCtx(Coset(std::move(S), x), scheme.profile());
          }(),
          osp, session, index, rng) {}

std::vector<Frame> EncVerifierSession::start() { return inner_.start(); }

std::vector<Frame> EncVerifierSession::handle(const Frame &in) { return after(inner_.handle(in)); }

std::vector<Frame> EncVerifierSession::after(std::vector<Frame> out) {
    if (inner_.done() && !inner_.aborted() && !correction_sent_ && inner_.result().decision == Decision::Acc) {
        auto ct = scheme_.backends().ahe->encrypt(pk_ahe_, inner_.result().z_correction, rng_);
        out.push_back(to_frame(PoniCorrectionMsg{inner_.session(), std::move(ct)}));
        correction_sent_ = true;
    }
    return out;
}

namespace {

CosetState take_quantum(Ciphertext &ct) {
    if (!ct.quantum) {
        throw std::invalid_argument("audit: ciphertext has no quantum register");
    }
    CosetState st = std::move(*ct.quantum);
    ct.quantum.reset();
    return st;
}

}  // namespace

EncProverSession::EncProverSession(Backends backends, Ciphertext ct, OspReceiver &osp, Rng &rng)
    : backends_(backends), ct_(std::move(ct)), prover_(take_quantum(ct_), osp, rng) {}

std::vector<Frame> EncProverSession::handle(const Frame &in) {
    if (completed_) {
        throw ProtocolError("audit: session already completed");
    }
    if (awaiting_correction_) {
        auto msg = parse_poni_correction(in);
        if (msg.session != prover_.session()) {
            throw ProtocolError("audit: correction for another session");
        }
        try {
            ct_.ct2 = backends_.ahe->eval_add(ct_.ct2, msg.ciphertext);
        } catch (const BackendError &e) {
            throw ProtocolError(std::string("audit: bad correction: ") + e.what());
        }
        ct_.quantum = prover_.take_register();
        awaiting_correction_ = false;
        completed_ = true;
        return {};
    }
    auto out = prover_.handle(in);
    if (prover_.state() == CosetProver::State::Done) {
        if (prover_.decision() == Decision::Acc) {
            awaiting_correction_ = true;
        } else {
            ct_.quantum = prover_.take_register();
            completed_ = true;
        }
    }
    return out;
}

Ciphertext EncProverSession::take_ciphertext() {
    if (!completed_) {
        throw std::logic_error("audit: session has not completed");
    }
    return std::move(ct_);
}

}  // namespace poni
