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
#include <functional>
#include <optional>
#include <vector>

#include "poni/coset_state.h"
#include "poni/osp.h"
#include "poni/rng.h"
#include "poni/subspace.h"
#include "poni/wire.h"

namespace poni {

/// Anything that reacts to incoming frames with outgoing frames.
class FrameHandler {
   public:
    virtual ~FrameHandler() = default;
    virtual std::vector<Frame> handle(const Frame &in) = 0;
};

/// Verifier's knowledge of the tested coset S + x plus per-session secrets.
struct CosetVerifierCtx {
    Coset s_plus_x;
    DimensionProfile profile;

    // Per session.
    Subspace T;
    F2Vector x_T;
    std::optional<OspSenderOutput> osp_out;

    CosetVerifierCtx(Coset coset, DimensionProfile profile);

    /// Samples a fresh uniform superspace T of S with dim d_T and sets x_T = Can_T(x).
    void begin_session(Rng &rng);
};

struct PoniResult {
    Decision decision = Decision::Rej;
    /// z' from the OSP; the prover's register now carries an extra Z^{z'}.
    F2Vector z_correction;
};

/// Acc iff v + x_osp lies in T + x_T.
PoniResult verifier_check(const F2Vector &v, const CosetVerifierCtx &ctx);

/// Verifier side of one coset PoNI session.
///
/// start() emits PONI_START and OSP_PREPARE. The session then expects OSP_ACK
/// and PONI_V, in that order, and answers with PONI_DECISION. Anything else
/// aborts the session with Rej.
class CosetVerifier : public FrameHandler {
   public:
    enum class State { Init, OspDone, GotV, Done };

    CosetVerifier(CosetVerifierCtx ctx, OspSender &osp, uint64_t session, uint64_t index, Rng &rng);

    std::vector<Frame> start();
    std::vector<Frame> handle(const Frame &in) override;

    State state() const { return state_; }
    bool done() const { return state_ == State::Done; }
    bool aborted() const { return aborted_; }
    const PoniResult &result() const { return result_; }
    const CosetVerifierCtx &ctx() const { return ctx_; }
    uint64_t session() const { return session_; }

   private:
    std::vector<Frame> abort();

    CosetVerifierCtx ctx_;
    OspSender &osp_;
    uint64_t session_;
    uint64_t index_;
    Rng &rng_;
    State state_ = State::Init;
    bool started_ = false;
    bool aborted_ = false;
    PoniResult result_;
};

/// Answers a session given the register prepared by the OSP; returns v.
using PoniResponder = std::function<F2Vector(CosetState osp_register, Rng &rng)>;

/// Prover side of one coset PoNI session. Throws ProtocolError on any
/// out-of-order or malformed frame.
class CosetProver : public FrameHandler {
   public:
    enum class State { Idle, Started, Responded, Done };

    /// Honest prover: CNOT from the held register onto the OSP register, then
    /// measure the OSP register and send the outcome.
    CosetProver(CosetState reg, OspReceiver &osp, Rng &rng);
    /// Prover driven by an arbitrary strategy.
    CosetProver(PoniResponder responder, OspReceiver &osp, Rng &rng);

    std::vector<Frame> handle(const Frame &in) override;

    State state() const { return state_; }
    uint64_t session() const { return session_; }
    uint64_t index() const { return index_; }
    std::optional<Decision> decision() const { return decision_; }
    /// The held register (the residual after a session). Empty for strategy provers.
    std::optional<CosetState> take_register() { return std::exchange(register_, std::nullopt); }
    const std::optional<CosetState> &held_register() const { return register_; }

   private:
    std::optional<CosetState> register_;
    PoniResponder responder_;
    OspReceiver &osp_;
    Rng &rng_;
    State state_ = State::Idle;
    uint64_t session_ = 0;
    uint64_t index_ = 0;
    std::optional<Decision> decision_;
};

/// Shuttles frames between two in-process peers until neither has output.
/// Frames from `first` are recorded as sent by `first_party`. A ProtocolError
/// or DecodeError thrown by `second` is fed back to `first` as an ERROR frame.
void exchange(std::vector<Frame> opening, FrameHandler &first, Party first_party, FrameHandler &second,
              Transcript &transcript);

struct PoniRun {
    PoniResult result;
    std::optional<CosetState> residual;
    Transcript transcript;
};

/// Runs one full coset PoNI with an honest prover holding `prover_state`.
PoniRun run_poni(CosetState prover_state, CosetVerifierCtx verifier, IdealOsp &osp, Rng &rng, uint64_t session = 1,
                 uint64_t index = 0);

}  // namespace poni
