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

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "poni/coset_state.h"
#include "poni/rng.h"

namespace poni {

/// Dense statevector used as an independent oracle for the symbolic simulator.
/// Qubit i corresponds to bit i of the basis index.
class Statevector {
   public:
    using Amplitude = std::complex<double>;
    static constexpr size_t kMaxQubits = 24;

    /// |0...0> on num_qubits qubits.
    explicit Statevector(size_t num_qubits);
    static Statevector basis(size_t num_qubits, uint64_t index);

    size_t num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude &operator[](uint64_t index) { return amps_[index]; }
    const Amplitude &operator[](uint64_t index) const { return amps_[index]; }

    double norm() const;

    /// this (x) high, with this on the low qubits.
    Statevector tensor(const Statevector &high) const;

    void apply_x(uint64_t mask);
    void apply_z(uint64_t mask);
    void apply_hadamard(size_t offset, size_t width);
    /// CNOT from qubit i onto qubit width + i, for each i < width.
    void apply_transversal_cnot(size_t width);

    /// Outcome probabilities of a computational measurement of qubits [offset, offset + width).
    std::vector<double> outcome_probabilities(size_t offset, size_t width) const;
    /// Probability of `outcome` on [offset, offset + width) and the normalized
    /// state of the remaining qubits given that outcome.
    std::pair<double, Statevector> project(size_t offset, size_t width, uint64_t outcome) const;

   private:
    size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

std::complex<double> inner_product(const Statevector &a, const Statevector &b);
/// |<a|b>|^2.
double fidelity(const Statevector &a, const Statevector &b);

/// Literal amplitudes 2^{-dim/2} (-1)^{(s+x).z} on s + x. Requires n <= 12.
Statevector to_statevector(const CosetState &st);

/// Joint register of two n-qubit registers with CNOT applied from the first onto the second.
Statevector oracle_cnot(const Statevector &control, const Statevector &target);
Statevector oracle_hadamard_all(Statevector sv);

/// Projective computational measurement of qubits [offset, offset + width).
struct OracleMeasurement {
    uint64_t outcome;
    double probability;
    Statevector residual;
};
OracleMeasurement oracle_measure(const Statevector &sv, size_t offset, size_t width, Rng &rng);

}  // namespace poni
