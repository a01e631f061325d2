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
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "poni/enc.h"

namespace poni {

/// Another session already holds the index.
class StoreBusy : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class CiphertextStore;

/// Exclusive hold on one stored ciphertext. Releasing without commit() leaves
/// the stored record untouched.
class StoreLease {
   public:
    StoreLease(CiphertextStore &store, Ciphertext ct);
    StoreLease(StoreLease &&other) noexcept;
    StoreLease &operator=(StoreLease &&other) noexcept;
    ~StoreLease();

    uint64_t index() const { return index_; }
    Ciphertext &ciphertext() { return ct_; }
    Ciphertext take() { return std::move(ct_); }
    /// Persists `updated` and releases the hold.
    void commit(const Ciphertext &updated);
    void release();

   private:
    CiphertextStore *store_;
    uint64_t index_;
    Ciphertext ct_;
};

/// Prover-side ciphertext storage keyed by index.
class CiphertextStore {
   public:
    virtual ~CiphertextStore() = default;

    void put(const Ciphertext &ct);
    bool contains(uint64_t index);
    std::vector<uint64_t> indices();
    /// nullopt when the index is unknown; throws StoreBusy when it is checked out.
    std::optional<StoreLease> checkout(uint64_t index);
    /// Removes and returns the ciphertext. Throws StoreBusy when checked out.
    std::optional<Ciphertext> take(uint64_t index);

   protected:
    virtual std::optional<std::vector<uint8_t>> read(uint64_t index) = 0;
    virtual void write(uint64_t index, const std::vector<uint8_t> &record) = 0;
    virtual void erase(uint64_t index) = 0;
    virtual std::vector<uint64_t> list() = 0;

   private:
    friend class StoreLease;
    void unlock(uint64_t index);

    std::mutex mu_;
    std::set<uint64_t> locked_;
};

class MemoryStore final : public CiphertextStore {
   protected:
    std::optional<std::vector<uint8_t>> read(uint64_t index) override;
    void write(uint64_t index, const std::vector<uint8_t> &record) override;
    void erase(uint64_t index) override;
    std::vector<uint64_t> list() override;

   private:
    std::mutex mu_;
    std::map<uint64_t, std::vector<uint8_t>> records_;
};

/// One record file per index: <dir>/ct-<index>.rec, replaced atomically.
class FileStore final : public CiphertextStore {
   public:
    explicit FileStore(std::filesystem::path dir);
    const std::filesystem::path &dir() const { return dir_; }
    std::filesystem::path path_for(uint64_t index) const;

   protected:
    std::optional<std::vector<uint8_t>> read(uint64_t index) override;
    void write(uint64_t index, const std::vector<uint8_t> &record) override;
    void erase(uint64_t index) override;
    std::vector<uint64_t> list() override;

   private:
    std::filesystem::path dir_;
};

/// Prover endpoint serving audits out of a store. Expects PONI_START first;
/// answers ERROR(busy) or ERROR(unknown index) when the ciphertext cannot be
/// checked out. The record is rewritten only when the session completes.
class StoreProver : public FrameHandler {
   public:
    StoreProver(Backends backends, CiphertextStore &store, OspReceiver &osp, Rng &rng);

    std::vector<Frame> handle(const Frame &in) override;

    bool finished() const { return finished_; }
    std::optional<Decision> decision() const { return decision_; }

   private:
    Backends backends_;
    CiphertextStore &store_;
    OspReceiver &osp_;
    Rng &rng_;
    std::optional<StoreLease> lease_;
    std::optional<EncProverSession> session_;
    std::optional<Decision> decision_;
    bool finished_ = false;
};

struct AuditResult {
    Decision decision = Decision::Rej;
    Transcript transcript;
};

/// One in-process ciphertext audit of `index` against `store`.
AuditResult audit(CiphertextStore &store, uint64_t index, const PoniEncryption &scheme, const VerificationKey &vk,
                  const PublicKey &pk_ahe, OspSender &osp_sender, OspReceiver &osp_receiver, Rng &rng,
                  uint64_t session = 1);

}  // namespace poni
