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
#include <optional>
#include <span>
#include <vector>

#include "poni/f2.h"
#include "poni/rng.h"
#include "poni/subspace.h"

namespace poni {

/// Symbolic register holding |S_{x,z}> = Z^z X^x sum_{s in S} |s>, up to global phase.
///
/// x is kept canonical modulo S and z canonical modulo S^perp, so two values
/// denote the same physical state exactly when their fields are equal.
/// Registers cannot be copied; measurements take them by value.
class CosetState {
   public:
    CosetState(Subspace space, const F2Vector &x, const F2Vector &z);
    /// The computational basis state |v>.
    static CosetState basis_state(const F2Vector &v);

    CosetState(CosetState &&) = default;
    CosetState &operator=(CosetState &&) = default;
    CosetState(const CosetState &) = delete;
    CosetState &operator=(const CosetState &) = delete;

    size_t ambient_dim() const { return space_.ambient_dim(); }
    const Subspace &space() const { return space_; }
    const Subspace &dual_space() const { return dual_; }
    const F2Vector &x() const { return x_; }
    const F2Vector &z() const { return z_; }

    /// S + x: the computational-basis support.
    Coset support() const { return Coset(space_, x_); }
    /// S^perp + z: the Hadamard-basis support.
    Coset hadamard_support() const { return Coset(dual_, z_); }

    bool same_state(const CosetState &other) const {
        return space_ == other.space_ && x_ == other.x_ && z_ == other.z_;
    }

    /// n (u16 BE), dim (u16 BE), basis rows, x, z.
    std::vector<uint8_t> to_blob() const;
    static CosetState from_blob(std::span<const uint8_t> blob);

   private:
    Subspace space_;
    Subspace dual_;
    F2Vector x_;
    F2Vector z_;
};

CosetState new_coset_state(Subspace space, const F2Vector &x, const F2Vector &z);

/// Uniform element of S + x. Consumes the register.
F2Vector measure_computational(CosetState st, Rng &rng);
/// Uniform element of S^perp + z. Consumes the register.
F2Vector measure_hadamard(CosetState st, Rng &rng);
/// X^{x_mask} Z^{z_mask} applied to the register.
CosetState apply_pauli(CosetState st, const F2Vector &x_mask, const F2Vector &z_mask);

/// A measured value and, when another register survives, its post-measurement state.
struct MeasureOutcome {
    F2Vector value;
    std::optional<CosetState> residual;
};

/// Transversal CNOT from src (|S_{x,z}>) onto tgt (|T_{x',z'}>), then a
/// computational-basis measurement of tgt.
///
/// The outcome v is uniform over (S + T) + x + x'. Writing v = s + t + x + x'
/// with s in S and t in T, src is left in |(S n T)_{x + s, z + z'}>. When
/// S is inside T this is |S_{x, z + z'}>.
MeasureOutcome transversal_cnot_measure(CosetState src, CosetState tgt, Rng &rng);

}  // namespace poni
