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

#include "poni/osp.h"

#include <fstream>
#include <iterator>

#include "poni/errors.h"

namespace poni {

OspSenderOutput sample_osp_masks(const Subspace &T, Rng &rng) {
    size_t n = T.ambient_dim();
    F2Vector x = T.canonical_rep(F2Vector::random(n, rng));
    F2Vector z = dual(T).canonical_rep(F2Vector::random(n, rng));
    return OspSenderOutput{std::move(x), std::move(z)};
}

std::pair<OspSenderOutput, Frame> IdealOsp::prepare(const Subspace &T, uint64_t session, Rng &rng) {
    OspSenderOutput out = sample_osp_masks(T, rng);
    CosetState st(T, out.x_osp, out.z_osp);
    {
        std::lock_guard lock(mu_);
        mailbox_.insert_or_assign(session, std::move(st));
    }
    Frame f = to_frame(OspPrepareMsg{session, static_cast<uint16_t>(T.ambient_dim())});
    return {std::move(out), std::move(f)};
}

std::pair<CosetState, Frame> IdealOsp::receive(const Frame &prepare) {
    auto msg = parse_osp_prepare(prepare);
    std::lock_guard lock(mu_);
    auto it = mailbox_.find(msg.session);
    if (it == mailbox_.end()) {
        throw ProtocolError("OSP: no preparation pending for this session");
    }
    CosetState st = std::move(it->second);
    mailbox_.erase(it);
    if (st.ambient_dim() != msg.n) {
        throw ProtocolError("OSP: register size does not match OSP_PREPARE");
    }
    return {std::move(st), to_frame(OspAckMsg{msg.session})};
}

size_t IdealOsp::pending() const {
    std::lock_guard lock(mu_);
    return mailbox_.size();
}

FileChannelOsp::FileChannelOsp(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path FileChannelOsp::slot(uint64_t session) const {
    return dir_ / ("osp-" + std::to_string(session) + ".state");
}

std::pair<OspSenderOutput, Frame> FileChannelOsp::prepare(const Subspace &T, uint64_t session, Rng &rng) {
    OspSenderOutput out = sample_osp_masks(T, rng);
    auto blob = CosetState(T, out.x_osp, out.z_osp).to_blob();
    auto target = slot(session);
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f.write(reinterpret_cast<const char *>(blob.data()), static_cast<std::streamsize>(blob.size()));
        if (!f) {
            throw std::runtime_error("OSP channel: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
    Frame f = to_frame(OspPrepareMsg{session, static_cast<uint16_t>(T.ambient_dim())});
    return {std::move(out), std::move(f)};
}

std::pair<CosetState, Frame> FileChannelOsp::receive(const Frame &prepare) {
    auto msg = parse_osp_prepare(prepare);
    auto path = slot(msg.session);
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ProtocolError("OSP: no preparation pending for this session");
    }
    std::vector<uint8_t> blob((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    f.close();
    std::filesystem::remove(path);
    CosetState st = CosetState::from_blob(blob);
    if (st.ambient_dim() != msg.n) {
        throw ProtocolError("OSP: register size does not match OSP_PREPARE");
    }
    return {std::move(st), to_frame(OspAckMsg{msg.session})};
}

IdealOspRun ideal_osp(const Subspace &T, uint64_t session, Rng &rng) {
    IdealOsp osp;
    auto [out, prepare] = osp.prepare(T, session, rng);
    auto [state, ack] = osp.receive(prepare);
    OspTranscript t;
    t.session_id = session;
    t.messages.push_back({Party::Verifier, std::move(prepare)});
    t.messages.push_back({Party::Prover, std::move(ack)});
    return IdealOspRun{std::move(out), std::move(state), std::move(t)};
}

}  // namespace poni
