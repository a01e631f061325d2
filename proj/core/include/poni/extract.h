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

#include "poni/osp.h"
#include "poni/poni.h"
#include "poni/rng.h"
#include "poni/subspace.h"

namespace poni {

/// Inputs to the coset-remainder computation. The caller promises there is
/// an x with x1 in T1 + x and x2 in T2 + x.
struct RemainderInput {
    Subspace T1;
    Subspace T2;
    F2Vector x1;
    F2Vector x2;
};

/// Recovers (T1 n T2) + x from x1 in T1 + x and x2 in T2 + x.
///
/// With S = T1 n T2 and complements C_b of S in T_b, the difference x1 + x2
/// splits uniquely as s + c1 + c2 over S (+) C1 (+) C2; the result is
/// S + (x1 + c1). Throws PromiseViolation when x1 + x2 is outside T1 + T2,
/// which is exactly when no such x exists.
Coset coset_remainder(const RemainderInput &in);

/// coset_remainder for a fixed pair (T1, T2), with the linear algebra done once.
class CosetRemainder {
   public:
    CosetRemainder(const Subspace &T1, const Subspace &T2);

    const Subspace &intersection() const { return S_; }
    Coset operator()(const F2Vector &x1, const F2Vector &x2) const;

   private:
    size_t n_;
    Subspace S_;
    Subspace C1_;
    SpanDecomposer decomposer_;
};

/// Same computation, used when T1 contains some S with T1 n T2 inside S and
/// x2 is only known to lie in T2 + S + x. Every element of the result then
/// lies in S + x. The S-containment part of the promise cannot be checked
/// here; only the span condition raises PromiseViolation.
Coset coset_remainder_partial(const Subspace &T1, const Subspace &T2, const F2Vector &x1, const F2Vector &x2);

struct ExtractionTrace {
    Subspace T_R;
    OspSenderOutput osp;
    F2Vector v;
    Coset remainder;
    F2Vector output;
    /// Whether T n T_R came out equal to R.
    bool intersection_is_R = false;
};

/// Runs one extraction against `prover`, which must be waiting for a new
/// session. Samples T_R as a uniform dim(T)-dimensional superspace of R,
/// acts as OSP sender with T_R (and so learns x_osp), collects the prover's
/// v without sending a decision, and feeds (T, T_R, x_T, v + x_osp) to the
/// remainder computation.
ExtractionTrace extract_traced(const Subspace &R, const Subspace &T, const F2Vector &x_T, FrameHandler &prover,
                               OspSender &osp, Rng &rng, uint64_t session = 1);

/// The offset of extract_traced's remainder coset.
F2Vector extract(const Subspace &R, const Subspace &T, const F2Vector &x_T, FrameHandler &prover, OspSender &osp,
                 Rng &rng, uint64_t session = 1);

}  // namespace poni
