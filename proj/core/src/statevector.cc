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

#include "poni/statevector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "poni/errors.h"

namespace poni {

Statevector::Statevector(size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("Statevector: too many qubits");
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector Statevector::basis(size_t num_qubits, uint64_t index) {
    Statevector sv(num_qubits);
    sv.amps_[0] = 0.0;
    sv.amps_.at(index) = 1.0;
    return sv;
}

double Statevector::norm() const {
    double acc = 0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

Statevector Statevector::tensor(const Statevector &high) const {
    Statevector out(num_qubits_ + high.num_qubits_);
    for (uint64_t h = 0; h < high.amps_.size(); ++h) {
        for (uint64_t l = 0; l < amps_.size(); ++l) {
            out.amps_[l | (h << num_qubits_)] = amps_[l] * high.amps_[h];
        }
    }
    return out;
}

void Statevector::apply_x(uint64_t mask) {
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        uint64_t j = i ^ mask;
        if (i < j) {
            std::swap(amps_[i], amps_[j]);
        }
    }
}

void Statevector::apply_z(uint64_t mask) {
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (std::popcount(i & mask) & 1) {
            amps_[i] = -amps_[i];
        }
    }
}

void Statevector::apply_hadamard(size_t offset, size_t width) {
    const double scale = 1.0 / std::sqrt(2.0);
    for (size_t q = offset; q < offset + width; ++q) {
        uint64_t bit = uint64_t{1} << q;
        for (uint64_t i = 0; i < amps_.size(); ++i) {
            if (i & bit) {
                continue;
            }
            Amplitude a = amps_[i];
            Amplitude b = amps_[i | bit];
            amps_[i] = (a + b) * scale;
            amps_[i | bit] = (a - b) * scale;
        }
    }
}

void Statevector::apply_transversal_cnot(size_t width) {
    if (2 * width > num_qubits_) {
        throw std::invalid_argument("apply_transversal_cnot: not enough qubits");
    }
    uint64_t low_mask = (uint64_t{1} << width) - 1;
    std::vector<Amplitude> out(amps_.size());
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        uint64_t control = i & low_mask;
        out[i ^ (control << width)] = amps_[i];
    }
    amps_ = std::move(out);
}

std::vector<double> Statevector::outcome_probabilities(size_t offset, size_t width) const {
    std::vector<double> probs(size_t{1} << width, 0.0);
    uint64_t mask = (uint64_t{1} << width) - 1;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        probs[(i >> offset) & mask] += std::norm(amps_[i]);
    }
    return probs;
}

std::pair<double, Statevector> Statevector::project(size_t offset, size_t width, uint64_t outcome) const {
    if (offset + width > num_qubits_) {
        throw std::invalid_argument("Statevector::project: range out of bounds");
    }
    Statevector rest(num_qubits_ - width);
    rest.amps_[0] = 0.0;
    uint64_t mask = (uint64_t{1} << width) - 1;
    uint64_t low_mask = (uint64_t{1} << offset) - 1;
    double prob = 0;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i >> offset) & mask) != outcome) {
            continue;
        }
        uint64_t j = (i & low_mask) | ((i >> (offset + width)) << offset);
        rest.amps_[j] = amps_[i];
        prob += std::norm(amps_[i]);
    }
    if (prob > 0) {
        double scale = 1.0 / std::sqrt(prob);
        for (auto &a : rest.amps_) {
            a *= scale;
        }
    }
    return {prob, std::move(rest)};
}

std::complex<double> inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionMismatch("inner_product: qubit counts differ");
    }
    std::complex<double> acc = 0;
    for (uint64_t i = 0; i < a.amplitudes().size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const Statevector &a, const Statevector &b) { return std::norm(inner_product(a, b)); }

Statevector to_statevector(const CosetState &st) {
    size_t n = st.ambient_dim();
    if (n > 12) {
        throw std::invalid_argument("to_statevector: n = " + std::to_string(n) + " exceeds the oracle cap of 12");
    }
    Statevector sv(n);
    sv[0] = 0.0;
    double amp = std::pow(2.0, -0.5 * static_cast<double>(st.space().dim()));
    for (const auto &s : st.space().elements()) {
        F2Vector v = s ^ st.x();
        sv[v.to_u64()] = v.dot(st.z()) ? -amp : amp;
    }
    return sv;
}

Statevector oracle_cnot(const Statevector &control, const Statevector &target) {
    if (control.num_qubits() != target.num_qubits()) {
        throw DimensionMismatch("oracle_cnot: registers have different sizes");
    }
    Statevector joint = control.tensor(target);
    joint.apply_transversal_cnot(control.num_qubits());
    return joint;
}

Statevector oracle_hadamard_all(Statevector sv) {
    sv.apply_hadamard(0, sv.num_qubits());
    return sv;
}

OracleMeasurement oracle_measure(const Statevector &sv, size_t offset, size_t width, Rng &rng) {
    auto probs = sv.outcome_probabilities(offset, width);
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    uint64_t outcome = probs.size() - 1;
    double acc = 0;
    for (uint64_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        if (u < acc) {
            outcome = k;
            break;
        }
    }
    // Guard against landing on a zero-probability tail through rounding.
    while (probs[outcome] == 0 && outcome > 0) {
        --outcome;
    }
    auto [p, residual] = sv.project(offset, width, outcome);
    return OracleMeasurement{outcome, p, std::move(residual)};
}

}  // namespace poni
