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

#include "poni/poni.h"

#include <deque>

#include "poni/errors.h"

namespace poni {

CosetVerifierCtx::CosetVerifierCtx(Coset coset, DimensionProfile profile_)
    : s_plus_x(std::move(coset)), profile(profile_) {
    if (profile.n != s_plus_x.ambient_dim()) {
        throw DimensionMismatch("CosetVerifierCtx: profile dimension differs from the coset's ambient dimension");
    }
    if (profile.d_T < s_plus_x.space().dim() || profile.d_T > profile.n) {
        throw std::invalid_argument("CosetVerifierCtx: d_T must lie in [dim S, n]");
    }
}

void CosetVerifierCtx::begin_session(Rng &rng) {
    T = sample_superspace(s_plus_x.space(), profile.d_T, rng);
    x_T = T.canonical_rep(s_plus_x.offset());
    osp_out.reset();
}

PoniResult verifier_check(const F2Vector &v, const CosetVerifierCtx &ctx) {
    if (!ctx.osp_out) {
        throw std::logic_error("verifier_check: OSP phase has not completed");
    }
    bool inside = ctx.T.canonical_rep(v ^ ctx.osp_out->x_osp ^ ctx.x_T).is_zero();
    return PoniResult{inside ? Decision::Acc : Decision::Rej, ctx.osp_out->z_osp};
}

CosetVerifier::CosetVerifier(CosetVerifierCtx ctx, OspSender &osp, uint64_t session, uint64_t index, Rng &rng)
    : ctx_(std::move(ctx)), osp_(osp), session_(session), index_(index), rng_(rng) {
    result_.z_correction = F2Vector(ctx_.profile.n);
}

std::vector<Frame> CosetVerifier::start() {
    if (started_) {
        throw std::logic_error("CosetVerifier::start called twice");
    }
    started_ = true;
    ctx_.begin_session(rng_);
    auto [out, prepare] = osp_.prepare(ctx_.T, session_, rng_);
    ctx_.osp_out = std::move(out);
    std::vector<Frame> frames;
    frames.push_back(to_frame(PoniStartMsg{session_, index_}));
    frames.push_back(std::move(prepare));
    return frames;
}

std::vector<Frame> CosetVerifier::abort() {
    aborted_ = true;
    state_ = State::Done;
    result_.decision = Decision::Rej;
    std::vector<Frame> frames;
    frames.push_back(to_frame(PoniDecisionMsg{session_, Decision::Rej}));
    return frames;
}

std::vector<Frame> CosetVerifier::handle(const Frame &in) {
    if (state_ == State::Done) {
        return {};
    }
    if (!started_ || in.type == MessageType::Error) {
        return abort();
    }
    try {
        switch (state_) {
            case State::Init: {
                auto ack = parse_osp_ack(in);
                if (ack.session != session_) {
                    return abort();
                }
                state_ = State::OspDone;
                return {};
            }
            case State::OspDone: {
                auto msg = parse_poni_v(in);
                if (msg.session != session_ || msg.v.size() != ctx_.profile.n) {
                    return abort();
                }
                state_ = State::GotV;
                result_ = verifier_check(msg.v, ctx_);
                state_ = State::Done;
                std::vector<Frame> frames;
                frames.push_back(to_frame(PoniDecisionMsg{session_, result_.decision}));
                return frames;
            }
            default:
                return abort();
        }
    } catch (const ProtocolError &) {
        return abort();
    } catch (const DecodeError &) {
        return abort();
    }
}

CosetProver::CosetProver(CosetState reg, OspReceiver &osp, Rng &rng)
    : register_(std::move(reg)), osp_(osp), rng_(rng) {}

CosetProver::CosetProver(PoniResponder responder, OspReceiver &osp, Rng &rng)
    : responder_(std::move(responder)), osp_(osp), rng_(rng) {}

std::vector<Frame> CosetProver::handle(const Frame &in) {
    if (in.type == MessageType::Error) {
        state_ = State::Done;
        return {};
    }
    switch (state_) {
        case State::Idle: {
            auto msg = parse_poni_start(in);
            session_ = msg.session;
            index_ = msg.index;
            state_ = State::Started;
            return {};
        }
        case State::Started: {
            auto prep = parse_osp_prepare(in);
            if (prep.session != session_) {
                throw ProtocolError("OSP_PREPARE for a different session");
            }
            auto [osp_register, ack] = osp_.receive(in);
            F2Vector v;
            if (responder_) {
                v = responder_(std::move(osp_register), rng_);
            } else {
                if (!register_) {
                    throw ProtocolError("prover holds no register");
                }
                if (register_->ambient_dim() != osp_register.ambient_dim()) {
                    throw ProtocolError("OSP register size differs from the held register");
                }
                auto out = transversal_cnot_measure(std::move(*register_), std::move(osp_register), rng_);
                register_ = std::move(out.residual);
                v = std::move(out.value);
            }
            state_ = State::Responded;
            std::vector<Frame> frames;
            frames.push_back(std::move(ack));
            frames.push_back(to_frame(PoniVMsg{session_, std::move(v)}));
            return frames;
        }
        case State::Responded: {
            auto msg = parse_poni_decision(in);
            if (msg.session != session_) {
                throw ProtocolError("PONI_DECISION for a different session");
            }
            decision_ = msg.decision;
            state_ = State::Done;
            return {};
        }
        case State::Done:
            break;
    }
    throw ProtocolError(std::string("unexpected ") + message_type_name(in.type) + " after the session ended");
}

void exchange(std::vector<Frame> opening, FrameHandler &first, Party first_party, FrameHandler &second,
              Transcript &transcript) {
    Party second_party = first_party == Party::Verifier ? Party::Prover : Party::Verifier;
    std::deque<TranscriptEntry> queue;
    for (auto &f : opening) {
        queue.push_back({first_party, std::move(f)});
    }
    bool first_failed = false;
    bool second_failed = false;
    while (!queue.empty()) {
        TranscriptEntry e = std::move(queue.front());
        queue.pop_front();
        transcript.push_back(e);
        bool to_second = e.from == first_party;
        FrameHandler &target = to_second ? second : first;
        bool &failed = to_second ? second_failed : first_failed;
        Party target_party = to_second ? second_party : first_party;
        if (failed) {
            continue;
        }
        std::vector<Frame> replies;
        try {
            replies = target.handle(e.frame);
        } catch (const std::exception &ex) {
            failed = true;
            ErrorCode code = dynamic_cast<const ProtocolError *>(&ex) ? ErrorCode::Protocol
                             : dynamic_cast<const DecodeError *>(&ex) ? ErrorCode::Malformed
                                                                       : ErrorCode::Internal;
            replies.clear();
            replies.push_back(to_frame(ErrorMsg{code, ex.what()}));
        }
        for (auto &r : replies) {
            queue.push_back({target_party, std::move(r)});
        }
    }
}

PoniRun run_poni(CosetState prover_state, CosetVerifierCtx verifier_ctx, IdealOsp &osp, Rng &rng, uint64_t session,
                 uint64_t index) {
    CosetVerifier verifier(std::move(verifier_ctx), osp, session, index, rng);
    CosetProver prover(std::move(prover_state), osp, rng);
    PoniRun run;
    exchange(verifier.start(), verifier, Party::Verifier, prover, run.transcript);
    run.result = verifier.result();
    run.residual = prover.take_register();
    return run;
}

}  // namespace poni
