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

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "poni/f2.h"
#include "poni/rng.h"

namespace poni {

/// A linear subspace of F_2^n, stored as its reduced row-echelon basis.
///
/// The RREF basis is unique for a given row space, so two Subspace values
/// describe the same set exactly when their bases are bitwise identical.
class Subspace {
   public:
    Subspace() = default;

    static Subspace zero(size_t n);
    static Subspace full(size_t n);
    /// Row space of the given vectors (which may be dependent).
    static Subspace span(size_t n, std::span<const F2Vector> rows);

    size_t ambient_dim() const { return n_; }
    size_t dim() const { return basis_.size(); }
    const std::vector<F2Vector> &basis() const { return basis_; }
    /// Pivot column of each basis row, strictly increasing.
    const std::vector<size_t> &pivots() const { return pivots_; }
    F2Matrix basis_matrix() const { return F2Matrix(n_, basis_); }

    /// The unique member of v + S that is zero in every pivot column.
    F2Vector canonical_rep(const F2Vector &v) const;
    bool contains(const F2Vector &v) const;
    bool contains(const Subspace &other) const;

    /// sum_i bit_i(coeffs) * basis[i]. Requires dim() <= 64.
    F2Vector element(uint64_t coeffs) const;
    F2Vector random_element(Rng &rng) const;
    /// Every element, in coefficient order. Requires dim() <= 24.
    std::vector<F2Vector> elements() const;

    bool operator==(const Subspace &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<F2Vector> basis_;
    std::vector<size_t> pivots_;

    friend std::pair<Subspace, size_t> rref(const F2Matrix &m);
};

/// Reduced row-echelon form of m's row space, and its rank.
std::pair<Subspace, size_t> rref(const F2Matrix &m);

F2Vector canonical_rep(const Subspace &s, const F2Vector &x);
/// co(S): every canonical representative mod s, i.e. the span of the unit
/// vectors at s's non-pivot columns.
Subspace co_space(const Subspace &s);
Subspace intersect(const Subspace &a, const Subspace &b);
Subspace sum(const Subspace &a, const Subspace &b);
/// {v : v.s = 0 for all s in a}.
Subspace dual(const Subspace &a);
/// A C with C + sub = sup and C n sub = {0}. Built greedily: sup's basis rows
/// are adjoined to sub's basis in order, keeping those that are independent.
Subspace complement_in(const Subspace &sub, const Subspace &sup);

/// Uniform k-dimensional subspace of sup.
Subspace sample_subspace(const Subspace &sup, size_t k, Rng &rng);
/// Uniform k-dimensional superspace of sub inside F_2^n.
Subspace sample_superspace(const Subspace &sub, size_t k, Rng &rng);

/// Number of k-dimensional subspaces of F_2^d.
boost::multiprecision::cpp_int gaussian_binomial(size_t d, size_t k);

/// Some v with m * v = b, or nullopt when the system is inconsistent.
std::optional<F2Vector> solve_affine(const F2Matrix &m, const F2Vector &b);

/// Coefficients c (one bit per row) with sum_i c_i rows[i] = v, or nullopt
/// if v is outside the span. The rows must share one ambient dimension.
std::optional<F2Vector> decompose(std::span<const F2Vector> rows, const F2Vector &v);

/// decompose() with the elimination done once for a fixed list of rows.
class SpanDecomposer {
   public:
    SpanDecomposer(size_t n, std::span<const F2Vector> rows);

    size_t num_rows() const { return k_; }
    std::optional<F2Vector> coefficients(const F2Vector &v) const;

   private:
    size_t n_;
    size_t k_;
    std::vector<F2Vector> reduced_;
    std::vector<F2Vector> combos_;
    std::vector<size_t> pivots_;
};

/// An affine coset S + x with x stored as its canonical representative.
class Coset {
   public:
    Coset() = default;
    Coset(Subspace space, const F2Vector &x);

    const Subspace &space() const { return space_; }
    const F2Vector &offset() const { return offset_; }
    size_t ambient_dim() const { return space_.ambient_dim(); }

    bool contains(const F2Vector &v) const;
    /// True when every element of this coset lies in other.
    bool is_subset_of(const Coset &other) const;
    F2Vector random_element(Rng &rng) const { return space_.random_element(rng) ^ offset_; }
    std::vector<F2Vector> elements() const;

    bool operator==(const Coset &other) const = default;

   private:
    Subspace space_;
    F2Vector offset_;
};

/// Dimensions (d_R, d_S, d_T, d_W) inside an ambient space of dimension n.
struct DimensionProfile {
    size_t n = 0;
    size_t d_R = 0;
    size_t d_S = 0;
    size_t d_T = 0;
    size_t d_W = 0;

    /// d_R = n/6, d_S = 2n/6, d_T = 3n/6, d_W = 4n/6. n must be a positive multiple of 6.
    static DimensionProfile standard(size_t n);
    /// d_W = d_T + d_S - d_R. Requires d_R <= d_S <= d_T and d_W <= n.
    static DimensionProfile custom(size_t n, size_t d_R, size_t d_S, size_t d_T);

    /// d_R < d_S < d_T < d_W <= n.
    bool is_strict() const { return d_R < d_S && d_S < d_T && d_T < d_W && d_W <= n; }
    bool operator==(const DimensionProfile &) const = default;
};

}  // namespace poni
