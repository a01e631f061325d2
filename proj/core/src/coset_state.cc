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

#include "poni/coset_state.h"

#include "poni/bytes.h"
#include "poni/errors.h"

namespace poni {

CosetState::CosetState(Subspace space, const F2Vector &x, const F2Vector &z)
    : space_(std::move(space)), dual_(dual(space_)) {
    if (x.size() != space_.ambient_dim() || z.size() != space_.ambient_dim()) {
        throw DimensionMismatch("CosetState: x and z must match the subspace ambient dimension");
    }
    x_ = space_.canonical_rep(x);
    z_ = dual_.canonical_rep(z);
}

CosetState CosetState::basis_state(const F2Vector &v) {
    return CosetState(Subspace::zero(v.size()), v, F2Vector(v.size()));
}

std::vector<uint8_t> CosetState::to_blob() const {
    ByteWriter w;
    w.u16(static_cast<uint16_t>(ambient_dim()));
    w.subspace(space_);
    w.vector(x_);
    w.vector(z_);
    return w.take();
}

CosetState CosetState::from_blob(std::span<const uint8_t> blob) {
    ByteReader r(blob);
    size_t n = r.u16();
    Subspace s = r.subspace(n);
    F2Vector x = r.vector(n);
    F2Vector z = r.vector(n);
    r.expect_done();
    CosetState st(std::move(s), x, z);
    if (st.x() != x || st.z() != z) {
        throw DecodeError("CosetState::from_blob: x or z is not canonical");
    }
    return st;
}

CosetState new_coset_state(Subspace space, const F2Vector &x, const F2Vector &z) {
    return CosetState(std::move(space), x, z);
}

F2Vector measure_computational(CosetState st, Rng &rng) { return st.space().random_element(rng) ^ st.x(); }

F2Vector measure_hadamard(CosetState st, Rng &rng) { return st.dual_space().random_element(rng) ^ st.z(); }

CosetState apply_pauli(CosetState st, const F2Vector &x_mask, const F2Vector &z_mask) {
    return CosetState(st.space(), st.x() ^ x_mask, st.z() ^ z_mask);
}

MeasureOutcome transversal_cnot_measure(CosetState src, CosetState tgt, Rng &rng) {
    if (src.ambient_dim() != tgt.ambient_dim()) {
        throw DimensionMismatch("transversal_cnot_measure: registers have different sizes");
    }
    // Sampling (s, t) uniformly from S x T and setting v = s + t + x + x' gives
    // the exact joint law of outcome and collapsed branch.
    F2Vector s = src.space().random_element(rng);
    F2Vector t = tgt.space().random_element(rng);
    F2Vector v = s ^ t ^ src.x() ^ tgt.x();
    Subspace kept = intersect(src.space(), tgt.space());
    CosetState residual(std::move(kept), src.x() ^ s, src.z() ^ tgt.z());
    return MeasureOutcome{std::move(v), std::move(residual)};
}

}  // namespace poni
