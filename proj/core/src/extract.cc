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

#include "poni/extract.h"

#include "poni/errors.h"

namespace poni {

namespace {

std::vector<F2Vector> stacked_bases(const Subspace &S, const Subspace &C1, const Subspace &C2) {
    std::vector<F2Vector> rows;
    rows.reserve(S.dim() + C1.dim() + C2.dim());
    rows.insert(rows.end(), S.basis().begin(), S.basis().end());
    rows.insert(rows.end(), C1.basis().begin(), C1.basis().end());
    rows.insert(rows.end(), C2.basis().begin(), C2.basis().end());
    return rows;
}

}  // namespace

CosetRemainder::CosetRemainder(const Subspace &T1, const Subspace &T2)
    : n_(T1.ambient_dim()),
      S_(intersect(T1, T2)),
      C1_(complement_in(S_, T1)),
      decomposer_(n_, stacked_bases(S_, C1_, complement_in(S_, T2))) {}

Coset CosetRemainder::operator()(const F2Vector &x1, const F2Vector &x2) const {
    if (x1.size() != n_ || x2.size() != n_) {
        throw DimensionMismatch("coset_remainder: inputs live in different ambient spaces");
    }
    auto coeffs = decomposer_.coefficients(x1 ^ x2);
    if (!coeffs) {
        throw PromiseViolation("coset_remainder: x1 - x2 is not in T1 + T2");
    }
    F2Vector c1(n_);
    for (size_t i = 0; i < C1_.dim(); ++i) {
        if (coeffs->get(S_.dim() + i)) {
            c1 ^= C1_.basis()[i];
        }
    }
    return Coset(S_, x1 ^ c1);
}

Coset coset_remainder(const RemainderInput &in) {
    if (in.T2.ambient_dim() != in.T1.ambient_dim()) {
        throw DimensionMismatch("coset_remainder: inputs live in different ambient spaces");
    }
    return CosetRemainder(in.T1, in.T2)(in.x1, in.x2);
}

Coset coset_remainder_partial(const Subspace &T1, const Subspace &T2, const F2Vector &x1, const F2Vector &x2) {
    return coset_remainder(RemainderInput{T1, T2, x1, x2});
}

ExtractionTrace extract_traced(const Subspace &R, const Subspace &T, const F2Vector &x_T, FrameHandler &prover,
                               OspSender &osp, Rng &rng, uint64_t session) {
    if (!T.contains(R)) {
        throw ContainmentError("extract: R must be contained in T");
    }
    ExtractionTrace trace;
    trace.T_R = sample_superspace(R, T.dim(), rng);
    trace.intersection_is_R = intersect(T, trace.T_R) == R;

    auto [osp_out, prepare] = osp.prepare(trace.T_R, session, rng);
    trace.osp = std::move(osp_out);

    std::vector<Frame> outbox;
    outbox.push_back(to_frame(PoniStartMsg{session, 0}));
    outbox.push_back(std::move(prepare));
    std::optional<F2Vector> v;
    for (const auto &f : outbox) {
        for (const auto &reply : prover.handle(f)) {
            if (reply.type == MessageType::PoniV) {
                auto msg = parse_poni_v(reply);
                if (msg.session == session) {
                    v = std::move(msg.v);
                }
            }
        }
    }
    if (!v || v->size() != T.ambient_dim()) {
        throw ProtocolError("extract: prover did not answer with a vector");
    }
    trace.v = *v;
    trace.remainder = coset_remainder_partial(T, trace.T_R, x_T, trace.v ^ trace.osp.x_osp);
    trace.output = trace.remainder.offset();
    return trace;
}

F2Vector extract(const Subspace &R, const Subspace &T, const F2Vector &x_T, FrameHandler &prover, OspSender &osp,
                 Rng &rng, uint64_t session) {
    return extract_traced(R, T, x_T, prover, osp, rng, session).output;
}

}  // namespace poni
