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

#include "poni/wire.h"

#include "poni/bytes.h"
#include "poni/errors.h"

namespace poni {

bool is_known_message_type(uint8_t type) {
    switch (type) {
        case 0x01:
        case 0x02:
        case 0x10:
        case 0x11:
        case 0x12:
        case 0x13:
        case 0xFF:
            return true;
        default:
            return false;
    }
}

const char *message_type_name(MessageType type) {
    switch (type) {
        case MessageType::OspPrepare:
            return "OSP_PREPARE";
        case MessageType::OspAck:
            return "OSP_ACK";
        case MessageType::PoniStart:
            return "PONI_START";
        case MessageType::PoniV:
            return "PONI_V";
        case MessageType::PoniDecision:
            return "PONI_DECISION";
        case MessageType::PoniCorrection:
            return "PONI_CORRECTION";
        case MessageType::Error:
            return "ERROR";
    }
    return "UNKNOWN";
}

std::vector<uint8_t> encode_frame(const Frame &frame) {
    if (frame.payload.size() > kMaxFramePayload) {
        throw std::invalid_argument("encode_frame: payload exceeds the frame size limit");
    }
    ByteWriter w;
    w.u32(static_cast<uint32_t>(frame.payload.size()));
    w.u8(static_cast<uint8_t>(frame.type));
    w.bytes(frame.payload);
    return w.take();
}

FrameDecodeResult decode_frame(std::span<const uint8_t> buf) {
    FrameDecodeResult r;
    if (buf.size() < kFrameHeaderSize) {
        r.status = DecodeStatus::NeedMore;
        return r;
    }
    size_t len = (size_t{buf[0]} << 24) | (size_t{buf[1]} << 16) | (size_t{buf[2]} << 8) | size_t{buf[3]};
    if (len > kMaxFramePayload) {
        r.status = DecodeStatus::TooLong;
        return r;
    }
    if (!is_known_message_type(buf[4])) {
        r.status = DecodeStatus::UnknownType;
        return r;
    }
    if (buf.size() < kFrameHeaderSize + len) {
        r.status = DecodeStatus::NeedMore;
        return r;
    }
    Frame f;
    f.type = static_cast<MessageType>(buf[4]);
    f.payload.assign(buf.begin() + kFrameHeaderSize, buf.begin() + kFrameHeaderSize + len);
    r.status = DecodeStatus::Ok;
    r.frame = std::move(f);
    r.consumed = kFrameHeaderSize + len;
    return r;
}

namespace {

Frame make(MessageType t, ByteWriter &w) { return Frame{t, w.take()}; }

ByteReader open(const Frame &f, MessageType expected) {
    if (f.type != expected) {
        throw ProtocolError(std::string("expected ") + message_type_name(expected) + ", got " +
                            message_type_name(f.type));
    }
    return ByteReader(f.payload);
}

}  // namespace

Frame to_frame(const PoniStartMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    w.u64(m.index);
    return make(MessageType::PoniStart, w);
}

Frame to_frame(const OspPrepareMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    w.u16(m.n);
    return make(MessageType::OspPrepare, w);
}

Frame to_frame(const OspAckMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    return make(MessageType::OspAck, w);
}

Frame to_frame(const PoniVMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    w.u16(static_cast<uint16_t>(m.v.size()));
    w.vector(m.v);
    return make(MessageType::PoniV, w);
}

Frame to_frame(const PoniDecisionMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    w.u8(static_cast<uint8_t>(m.decision));
    return make(MessageType::PoniDecision, w);
}

Frame to_frame(const PoniCorrectionMsg &m) {
    ByteWriter w;
    w.u64(m.session);
    w.blob(m.ciphertext);
    return make(MessageType::PoniCorrection, w);
}

Frame to_frame(const ErrorMsg &m) {
    ByteWriter w;
    w.u8(static_cast<uint8_t>(m.code));
    w.bytes(std::span(reinterpret_cast<const uint8_t *>(m.message.data()), m.message.size()));
    return make(MessageType::Error, w);
}

PoniStartMsg parse_poni_start(const Frame &f) {
    auto r = open(f, MessageType::PoniStart);
    PoniStartMsg m;
    m.session = r.u64();
    m.index = r.u64();
    r.expect_done();
    return m;
}

OspPrepareMsg parse_osp_prepare(const Frame &f) {
    auto r = open(f, MessageType::OspPrepare);
    OspPrepareMsg m;
    m.session = r.u64();
    m.n = r.u16();
    r.expect_done();
    return m;
}

OspAckMsg parse_osp_ack(const Frame &f) {
    auto r = open(f, MessageType::OspAck);
    OspAckMsg m;
    m.session = r.u64();
    r.expect_done();
    return m;
}

PoniVMsg parse_poni_v(const Frame &f) {
    auto r = open(f, MessageType::PoniV);
    PoniVMsg m;
    m.session = r.u64();
    size_t n = r.u16();
    m.v = r.vector(n);
    r.expect_done();
    return m;
}

PoniDecisionMsg parse_poni_decision(const Frame &f) {
    auto r = open(f, MessageType::PoniDecision);
    PoniDecisionMsg m;
    m.session = r.u64();
    uint8_t d = r.u8();
    if (d > 1) {
        throw DecodeError("PONI_DECISION: decision byte must be 0 or 1");
    }
    m.decision = static_cast<Decision>(d);
    r.expect_done();
    return m;
}

PoniCorrectionMsg parse_poni_correction(const Frame &f) {
    auto r = open(f, MessageType::PoniCorrection);
    PoniCorrectionMsg m;
    m.session = r.u64();
    m.ciphertext = r.blob();
    r.expect_done();
    return m;
}

ErrorMsg parse_error(const Frame &f) {
    auto r = open(f, MessageType::Error);
    ErrorMsg m;
    m.code = static_cast<ErrorCode>(r.u8());
    auto rest = r.bytes(r.remaining());
    m.message.assign(rest.begin(), rest.end());
    return m;
}

std::vector<uint8_t> received_bytes(const Transcript &t, Party receiver) {
    std::vector<uint8_t> out;
    for (const auto &e : t) {
        if (e.from != receiver) {
            auto b = encode_frame(e.frame);
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    return out;
}

std::vector<uint8_t> serialize_transcript(const Transcript &t) {
    std::vector<uint8_t> out;
    for (const auto &e : t) {
        out.push_back(static_cast<uint8_t>(e.from));
        auto b = encode_frame(e.frame);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

}  // namespace poni
