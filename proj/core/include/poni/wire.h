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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poni/f2.h"

namespace poni {

/// Wire frame layout: payload length (u32 BE), type (u8), payload.
enum class MessageType : uint8_t {
    OspPrepare = 0x01,
    OspAck = 0x02,
    PoniStart = 0x10,
    PoniV = 0x11,
    PoniDecision = 0x12,
    PoniCorrection = 0x13,
    Error = 0xFF,
};

inline constexpr size_t kFrameHeaderSize = 5;
inline constexpr size_t kMaxFramePayload = size_t{1} << 20;

bool is_known_message_type(uint8_t type);
const char *message_type_name(MessageType type);

struct Frame {
    MessageType type = MessageType::Error;
    std::vector<uint8_t> payload;

    bool operator==(const Frame &) const = default;
};

std::vector<uint8_t> encode_frame(const Frame &frame);

enum class DecodeStatus {
    Ok,
    NeedMore,
    TooLong,
    UnknownType,
};

struct FrameDecodeResult {
    DecodeStatus status = DecodeStatus::NeedMore;
    std::optional<Frame> frame;
    /// Bytes used from the front of the buffer when status is Ok.
    size_t consumed = 0;
};

/// Decodes one frame from the front of buf. Never throws.
FrameDecodeResult decode_frame(std::span<const uint8_t> buf);

enum class ErrorCode : uint8_t {
    Busy = 1,
    UnknownIndex = 2,
    Malformed = 3,
    Protocol = 4,
    Internal = 5,
};

enum class Decision : uint8_t {
    Rej = 0,
    Acc = 1,
};

inline const char *decision_name(Decision d) { return d == Decision::Acc ? "Acc" : "Rej"; }

// Typed payloads. Every message except Error leads with the u64 session id.

struct PoniStartMsg {
    uint64_t session = 0;
    uint64_t index = 0;
};
struct OspPrepareMsg {
    uint64_t session = 0;
    uint16_t n = 0;
};
struct OspAckMsg {
    uint64_t session = 0;
};
/// session, n (u16), v as ceil(n/8) bytes.
struct PoniVMsg {
    uint64_t session = 0;
    F2Vector v;
};
struct PoniDecisionMsg {
    uint64_t session = 0;
    Decision decision = Decision::Rej;
};
/// session, u32 length, backend ciphertext bytes.
struct PoniCorrectionMsg {
    uint64_t session = 0;
    std::vector<uint8_t> ciphertext;
};
struct ErrorMsg {
    ErrorCode code = ErrorCode::Internal;
    std::string message;
};

Frame to_frame(const PoniStartMsg &m);
Frame to_frame(const OspPrepareMsg &m);
Frame to_frame(const OspAckMsg &m);
Frame to_frame(const PoniVMsg &m);
Frame to_frame(const PoniDecisionMsg &m);
Frame to_frame(const PoniCorrectionMsg &m);
Frame to_frame(const ErrorMsg &m);

// Parsers throw ProtocolError on a type mismatch and DecodeError on a bad payload.
PoniStartMsg parse_poni_start(const Frame &f);
OspPrepareMsg parse_osp_prepare(const Frame &f);
OspAckMsg parse_osp_ack(const Frame &f);
PoniVMsg parse_poni_v(const Frame &f);
PoniDecisionMsg parse_poni_decision(const Frame &f);
PoniCorrectionMsg parse_poni_correction(const Frame &f);
ErrorMsg parse_error(const Frame &f);

enum class Party : uint8_t {
    Verifier = 0,
    Prover = 1,
};

struct TranscriptEntry {
    Party from = Party::Verifier;
    Frame frame;

    bool operator==(const TranscriptEntry &) const = default;
};

using Transcript = std::vector<TranscriptEntry>;

/// Concatenated encoded frames that `receiver` saw.
std::vector<uint8_t> received_bytes(const Transcript &t, Party receiver);
/// Per entry: sender byte then the encoded frame.
std::vector<uint8_t> serialize_transcript(const Transcript &t);

}  // namespace poni
