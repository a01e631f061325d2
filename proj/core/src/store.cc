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

#include "poni/store.h"

#include <fstream>
#include <iterator>
#include <string>

#include "poni/errors.h"

namespace poni {

StoreLease::StoreLease(CiphertextStore &store, Ciphertext ct) : store_(&store), index_(ct.index), ct_(std::move(ct)) {}

StoreLease::StoreLease(StoreLease &&other) noexcept
    : store_(std::exchange(other.store_, nullptr)), index_(other.index_), ct_(std::move(other.ct_)) {}

StoreLease &StoreLease::operator=(StoreLease &&other) noexcept {
    if (this != &other) {
        release();
        store_ = std::exchange(other.store_, nullptr);
        index_ = other.index_;
        ct_ = std::move(other.ct_);
    }
    return *this;
}

StoreLease::~StoreLease() { release(); }

void StoreLease::commit(const Ciphertext &updated) {
    if (store_ == nullptr) {
        throw std::logic_error("lease already released");
    }
    if (updated.index != index_) {
        throw std::invalid_argument("lease commit: index changed");
    }
    store_->write(index_, updated.to_record());
    release();
}

void StoreLease::release() {
    if (store_ != nullptr) {
        std::exchange(store_, nullptr)->unlock(index_);
    }
}

void CiphertextStore::put(const Ciphertext &ct) {
    std::lock_guard lock(mu_);
    if (locked_.count(ct.index) != 0) {
        throw StoreBusy("index " + std::to_string(ct.index) + " is checked out");
    }
    write(ct.index, ct.to_record());
}

bool CiphertextStore::contains(uint64_t index) { return read(index).has_value(); }

std::vector<uint64_t> CiphertextStore::indices() { return list(); }

std::optional<StoreLease> CiphertextStore::checkout(uint64_t index) {
    std::lock_guard lock(mu_);
    if (locked_.count(index) != 0) {
        throw StoreBusy("index " + std::to_string(index) + " is checked out");
    }
    auto record = read(index);
    if (!record) {
        return std::nullopt;
    }
    Ciphertext ct = Ciphertext::from_record(*record);
    if (ct.index != index) {
        throw DecodeError("store: record index does not match its slot");
    }
    locked_.insert(index);
    return StoreLease(*this, std::move(ct));
}

std::optional<Ciphertext> CiphertextStore::take(uint64_t index) {
    std::lock_guard lock(mu_);
    if (locked_.count(index) != 0) {
        throw StoreBusy("index " + std::to_string(index) + " is checked out");
    }
    auto record = read(index);
    if (!record) {
        return std::nullopt;
    }
    Ciphertext ct = Ciphertext::from_record(*record);
    erase(index);
    return ct;
}

void CiphertextStore::unlock(uint64_t index) {
    std::lock_guard lock(mu_);
    locked_.erase(index);
}

std::optional<std::vector<uint8_t>> MemoryStore::read(uint64_t index) {
    std::lock_guard lock(mu_);
    auto it = records_.find(index);
    if (it == records_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void MemoryStore::write(uint64_t index, const std::vector<uint8_t> &record) {
    std::lock_guard lock(mu_);
    records_[index] = record;
}

void MemoryStore::erase(uint64_t index) {
    std::lock_guard lock(mu_);
    records_.erase(index);
}

std::vector<uint64_t> MemoryStore::list() {
    std::lock_guard lock(mu_);
    std::vector<uint64_t> out;
    for (const auto &[k, _] : records_) {
        out.push_back(k);
    }
    return out;
}

FileStore::FileStore(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path FileStore::path_for(uint64_t index) const {
    return dir_ / ("ct-" + std::to_string(index) + ".rec");
}

std::optional<std::vector<uint8_t>> FileStore::read(uint64_t index) {
    std::ifstream in(path_for(index), std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void FileStore::write(uint64_t index, const std::vector<uint8_t> &record) {
    auto target = path_for(index);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char *>(record.data()), static_cast<std::streamsize>(record.size()));
        out.flush();
        if (!out) {
            throw std::runtime_error("store: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

void FileStore::erase(uint64_t index) { std::filesystem::remove(path_for(index)); }

std::vector<uint64_t> FileStore::list() {
    std::vector<uint64_t> out;
    for (const auto &entry : std::filesystem::directory_iterator(dir_)) {
        auto name = entry.path().filename().string();
        if (name.size() > 7 && name.rfind("ct-", 0) == 0 && name.ends_with(".rec")) {
            try {
                out.push_back(std::stoull(name.substr(3, name.size() - 7)));
            } catch (const std::exception &) {
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StoreProver::StoreProver(Backends backends, CiphertextStore &store, OspReceiver &osp, Rng &rng)
    : backends_(backends), store_(store), osp_(osp), rng_(rng) {}

std::vector<Frame> StoreProver::handle(const Frame &in) {
    if (finished_) {
        throw ProtocolError("prover: session is over");
    }
    if (!session_) {
        auto start = parse_poni_start(in);
        std::optional<StoreLease> lease;
        try {
            lease = store_.checkout(start.index);
        } catch (const StoreBusy &e) {
            finished_ = true;
            return {to_frame(ErrorMsg{ErrorCode::Busy, e.what()})};
        }
        if (!lease) {
            finished_ = true;
            return {to_frame(ErrorMsg{ErrorCode::UnknownIndex, "no ciphertext with index " +
                                                                    std::to_string(start.index)})};
        }
        if (!lease->ciphertext().quantum) {
            finished_ = true;
            return {to_frame(ErrorMsg{ErrorCode::Internal, "ciphertext has no quantum register"})};
        }
        session_.emplace(backends_, lease->take(), osp_, rng_);
        lease_ = std::move(lease);
        return session_->handle(in);
    }
    std::vector<Frame> out;
    try {
        out = session_->handle(in);
    } catch (...) {
        finished_ = true;
        lease_.reset();
        throw;
    }
    if (session_->completed()) {
        decision_ = session_->decision();
        lease_->commit(session_->take_ciphertext());
        lease_.reset();
        finished_ = true;
    }
    return out;
}

AuditResult audit(CiphertextStore &store, uint64_t index, const PoniEncryption &scheme, const VerificationKey &vk,
                  const PublicKey &pk_ahe, OspSender &osp_sender, OspReceiver &osp_receiver, Rng &rng,
                  uint64_t session) {
    AuditResult result;
    if (!vk.issued(index)) {
        return result;
    }
    EncVerifierSession verifier(scheme, vk, pk_ahe, index, osp_sender, session, rng);
    StoreProver prover(scheme.backends(), store, osp_receiver, rng);
    exchange(verifier.start(), verifier, Party::Verifier, prover, result.transcript);
    if (verifier.done() && !verifier.aborted()) {
        result.decision = verifier.decision();
    }
    return result;
}

}  // namespace poni
