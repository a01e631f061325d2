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
#include <utility>
#include <vector>

#include "poni/coset_state.h"
#include "poni/rng.h"
#include "poni/subspace.h"
#include "poni/wire.h"

namespace poni {

/// The sender's Pauli masks: the receiver holds |T_{x_osp, z_osp}>.
struct OspSenderOutput {
    F2Vector x_osp;
    F2Vector z_osp;
};

struct OspTranscript {
    uint64_t session_id = 0;
    Transcript messages;

    /// Bytes the receiver saw (the OSP_PREPARE frame).
    std::vector<uint8_t> receiver_view() const { return received_bytes(messages, Party::Prover); }
};

/// Sender half of an oblivious coset-state preparation.
class OspSender {
   public:
    virtual ~OspSender() = default;
    /// Starts a preparation of |T_{x,z}> for the receiver; returns the masks
    /// and the OSP_PREPARE frame to send.
    virtual std::pair<OspSenderOutput, Frame> prepare(const Subspace &T, uint64_t session, Rng &rng) = 0;
};

/// Receiver half. Returns the prepared register and the OSP_ACK frame.
class OspReceiver {
   public:
    virtual ~OspReceiver() = default;
    virtual std::pair<CosetState, Frame> receive(const Frame &prepare) = 0;
};

/// Ideal functionality: masks are uniform over co(T) x co(T^perp) and the
/// register is handed to the receiver in-process, exactly. The wire carries
/// only (session, n). Thread-safe.
class IdealOsp : public OspSender, public OspReceiver {
   public:
    std::pair<OspSenderOutput, Frame> prepare(const Subspace &T, uint64_t session, Rng &rng) override;
    std::pair<CosetState, Frame> receive(const Frame &prepare) override;

    size_t pending() const;

   private:
    mutable std::mutex mu_;
    std::map<uint64_t, CosetState> mailbox_;
};

/// Ideal functionality whose out-of-band hand-off goes through a directory
/// shared by two processes on one host. One file per session.
class FileChannelOsp : public OspSender, public OspReceiver {
   public:
    explicit FileChannelOsp(std::filesystem::path dir);

    std::pair<OspSenderOutput, Frame> prepare(const Subspace &T, uint64_t session, Rng &rng) override;
    std::pair<CosetState, Frame> receive(const Frame &prepare) override;

    const std::filesystem::path &dir() const { return dir_; }

   private:
    std::filesystem::path slot(uint64_t session) const;

    std::filesystem::path dir_;
};

/// Draws the ideal functionality's masks for T.
OspSenderOutput sample_osp_masks(const Subspace &T, Rng &rng);

struct IdealOspRun {
    OspSenderOutput sender;
    CosetState state;
    OspTranscript transcript;
};

/// One complete ideal preparation: sender output, receiver register, transcript.
IdealOspRun ideal_osp(const Subspace &T, uint64_t session, Rng &rng);

}  // namespace poni
