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

#include "poni/subspace.h"

#include <stdexcept>
#include <string>

#include "poni/errors.h"

namespace poni {

namespace {

/// Row-reduces in place; on return rows holds the RREF basis (zero rows dropped).
std::vector<size_t> reduce_rows(std::vector<F2Vector> &rows, size_t n) {
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < rows.size(); ++col) {
        size_t r = rank;
        while (r < rows.size() && !rows[r].get(col)) {
            ++r;
        }
        if (r == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i != rank && rows[i].get(col)) {
                rows[i] ^= rows[rank];
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

/// Fully reduced (but unordered) basis that grows one vector at a time.
class GrowingBasis {
   public:
    explicit GrowingBasis(size_t n) : n_(n) {}

    F2Vector reduce(F2Vector v) const {
        for (size_t j = 0; j < rows_.size(); ++j) {
            if (v.get(pivots_[j])) {
                v ^= rows_[j];
            }
        }
        return v;
    }

    /// Adds v if independent of the current rows; returns whether it was added.
    bool add(const F2Vector &v) {
        F2Vector r = reduce(v);
        if (r.is_zero()) {
            return false;
        }
        size_t p = r.first_one();
        for (auto &row : rows_) {
            if (row.get(p)) {
                row ^= r;
            }
        }
        rows_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    size_t dim() const { return rows_.size(); }
    Subspace span() const { return Subspace::span(n_, rows_); }

   private:
    size_t n_;
    std::vector<F2Vector> rows_;
    std::vector<size_t> pivots_;
};

void check_same_ambient(const Subspace &a, const Subspace &b, const char *what) {
    if (a.ambient_dim() != b.ambient_dim()) {
        throw DimensionMismatch(std::string(what) + ": ambient dimensions differ (" +
                                std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) + ")");
    }
}

}  // namespace

std::pair<Subspace, size_t> rref(const F2Matrix &m) {
    Subspace s;
    s.n_ = m.num_cols();
    s.basis_ = m.rows();
    s.pivots_ = reduce_rows(s.basis_, s.n_);
    size_t rank = s.basis_.size();
    return {std::move(s), rank};
}

Subspace Subspace::zero(size_t n) {
    Subspace s;
    s.n_ = n;
    return s;
}

Subspace Subspace::full(size_t n) {
    std::vector<F2Vector> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        rows.push_back(F2Vector::unit(n, i));
    }
    return span(n, rows);
}

Subspace Subspace::span(size_t n, std::span<const F2Vector> rows) {
    return rref(F2Matrix(n, std::vector<F2Vector>(rows.begin(), rows.end()))).first;
}

F2Vector Subspace::canonical_rep(const F2Vector &v) const {
    if (v.size() != n_) {
        throw DimensionMismatch("canonical_rep: vector dimension " + std::to_string(v.size()) +
                                " does not match subspace ambient dimension " + std::to_string(n_));
    }
    F2Vector r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= basis_[i];
        }
    }
    return r;
}

Subspace co_space(const Subspace &s) {
    const size_t n = s.ambient_dim();
    std::vector<bool> pivot(n, false);
    for (size_t p : s.pivots()) {
        pivot[p] = true;
    }
    std::vector<F2Vector> rows;
    for (size_t j = 0; j < n; ++j) {
        if (!pivot[j]) {
            rows.push_back(F2Vector::unit(n, j));
        }
    }
    return Subspace::span(n, rows);
}

bool Subspace::contains(const F2Vector &v) const { return canonical_rep(v).is_zero(); }

bool Subspace::contains(const Subspace &other) const {
    check_same_ambient(*this, other, "Subspace::contains");
    for (const auto &row : other.basis_) {
        if (!contains(row)) {
            return false;
        }
    }
    return true;
}

F2Vector Subspace::element(uint64_t coeffs) const {
    if (basis_.size() > 64) {
        throw std::invalid_argument("Subspace::element: dimension exceeds 64");
    }
    F2Vector v(n_);
    for (size_t i = 0; i < basis_.size(); ++i) {
        if ((coeffs >> i) & 1) {
            v ^= basis_[i];
        }
    }
    return v;
}

F2Vector Subspace::random_element(Rng &rng) const {
    F2Vector v(n_);
    uint64_t word = 0;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i % 64 == 0) {
            word = rng();
        }
        if ((word >> (i % 64)) & 1) {
            v ^= basis_[i];
        }
    }
    return v;
}

std::vector<F2Vector> Subspace::elements() const {
    if (basis_.size() > 24) {
        throw std::invalid_argument("Subspace::elements: dimension too large to enumerate");
    }
    std::vector<F2Vector> out;
    out.reserve(size_t{1} << basis_.size());
    for (uint64_t c = 0; c < (uint64_t{1} << basis_.size()); ++c) {
        out.push_back(element(c));
    }
    return out;
}

F2Vector canonical_rep(const Subspace &s, const F2Vector &x) { return s.canonical_rep(x); }

Subspace sum(const Subspace &a, const Subspace &b) {
    check_same_ambient(a, b, "sum");
    std::vector<F2Vector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), rows);
}

Subspace dual(const Subspace &a) {
    size_t n = a.ambient_dim();
    const auto &pivots = a.pivots();
    std::vector<F2Vector> rows;
    rows.reserve(n - a.dim());
    size_t next_pivot = 0;
    for (size_t f = 0; f < n; ++f) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        F2Vector v = F2Vector::unit(n, f);
        for (size_t i = 0; i < a.dim(); ++i) {
            if (a.basis()[i].get(f)) {
                v.set(pivots[i], true);
            }
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

Subspace intersect(const Subspace &a, const Subspace &b) {
    check_same_ambient(a, b, "intersect");
    // Zassenhaus: reduce [a_i | a_i] and [b_j | 0]; rows whose left half
    // vanishes carry a basis of a n b in their right half.
    const size_t n = a.ambient_dim();
    std::vector<F2Vector> rows;
    rows.reserve(a.dim() + b.dim());
    auto widen = [n](const F2Vector &left, const F2Vector *right) {
        F2Vector w(2 * n);
        for (size_t i = 0; i < n; ++i) {
            if (left.get(i)) {
                w.set(i, true);
                if (right != nullptr) {
                    w.set(n + i, true);
                }
            }
        }
        return w;
    };
    for (const auto &r : a.basis()) {
        rows.push_back(widen(r, &r));
    }
    for (const auto &r : b.basis()) {
        rows.push_back(widen(r, nullptr));
    }
    auto pivots = reduce_rows(rows, 2 * n);
    std::vector<F2Vector> meet;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (pivots[i] < n) {
            continue;
        }
        F2Vector v(n);
        for (size_t j = 0; j < n; ++j) {
            if (rows[i].get(n + j)) {
                v.set(j, true);
            }
        }
        meet.push_back(std::move(v));
    }
    return Subspace::span(n, meet);
}

Subspace complement_in(const Subspace &sub, const Subspace &sup) {
    check_same_ambient(sub, sup, "complement_in");
    if (!sup.contains(sub)) {
        throw ContainmentError("complement_in: sub is not contained in sup");
    }
    GrowingBasis acc(sub.ambient_dim());
    for (const auto &row : sub.basis()) {
        acc.add(row);
    }
    std::vector<F2Vector> chosen;
    for (const auto &row : sup.basis()) {
        if (acc.add(row)) {
            chosen.push_back(row);
        }
    }
    return Subspace::span(sub.ambient_dim(), chosen);
}

Subspace sample_subspace(const Subspace &sup, size_t k, Rng &rng) {
    if (k > sup.dim()) {
        throw std::invalid_argument("sample_subspace: k = " + std::to_string(k) + " exceeds dim(sup) = " +
                                    std::to_string(sup.dim()));
    }
    GrowingBasis acc(sup.ambient_dim());
    while (acc.dim() < k) {
        acc.add(sup.random_element(rng));
    }
    return acc.span();
}

Subspace sample_superspace(const Subspace &sub, size_t k, Rng &rng) {
    size_t n = sub.ambient_dim();
    if (k < sub.dim() || k > n) {
        throw std::invalid_argument("sample_superspace: k = " + std::to_string(k) + " outside [dim(sub), n] = [" +
                                    std::to_string(sub.dim()) + ", " + std::to_string(n) + "]");
    }
    GrowingBasis acc(n);
    for (const auto &row : sub.basis()) {
        acc.add(row);
    }
    while (acc.dim() < k) {
        acc.add(F2Vector::random(n, rng));
    }
    return acc.span();
}

boost::multiprecision::cpp_int gaussian_binomial(size_t d, size_t k) {
    using boost::multiprecision::cpp_int;
    if (k > d) {
        throw std::invalid_argument("gaussian_binomial: k > d");
    }
    cpp_int num = 1;
    cpp_int den = 1;
    for (size_t i = 0; i < k; ++i) {
        num *= (cpp_int(1) << (d - i)) - 1;
        den *= (cpp_int(1) << (i + 1)) - 1;
    }
    return num / den;
}

std::optional<F2Vector> solve_affine(const F2Matrix &m, const F2Vector &b) {
    if (b.size() != m.num_rows()) {
        throw DimensionMismatch("solve_affine: right-hand side length differs from row count");
    }
    size_t n = m.num_cols();
    std::vector<F2Vector> aug;
    aug.reserve(m.num_rows());
    for (size_t i = 0; i < m.num_rows(); ++i) {
        F2Vector row(n + 1);
        for (size_t j = 0; j < n; ++j) {
            if (m.row(i).get(j)) {
                row.set(j, true);
            }
        }
        row.set(n, b.get(i));
        aug.push_back(std::move(row));
    }
    auto pivots = reduce_rows(aug, n + 1);
    F2Vector v(n);
    for (size_t i = 0; i < aug.size(); ++i) {
        if (pivots[i] == n) {
            return std::nullopt;
        }
        v.set(pivots[i], aug[i].get(n));
    }
    return v;
}

SpanDecomposer::SpanDecomposer(size_t n, std::span<const F2Vector> rows) : n_(n), k_(rows.size()) {
    for (size_t i = 0; i < k_; ++i) {
        if (rows[i].size() != n_) {
            throw DimensionMismatch("decompose: rows have mixed ambient dimensions");
        }
        F2Vector r = rows[i];
        F2Vector c = F2Vector::unit(k_, i);
        for (size_t j = 0; j < reduced_.size(); ++j) {
            if (r.get(pivots_[j])) {
                r ^= reduced_[j];
                c ^= combos_[j];
            }
        }
        if (r.is_zero()) {
            continue;
        }
        size_t p = r.first_one();
        for (size_t j = 0; j < reduced_.size(); ++j) {
            if (reduced_[j].get(p)) {
                reduced_[j] ^= r;
                combos_[j] ^= c;
            }
        }
        reduced_.push_back(std::move(r));
        combos_.push_back(std::move(c));
        pivots_.push_back(p);
    }
}

std::optional<F2Vector> SpanDecomposer::coefficients(const F2Vector &v) const {
    if (v.size() != n_) {
        throw DimensionMismatch("decompose: vector dimension does not match the rows");
    }
    F2Vector rest = v;
    F2Vector coeffs(k_);
    for (size_t j = 0; j < reduced_.size(); ++j) {
        if (rest.get(pivots_[j])) {
            rest ^= reduced_[j];
            coeffs ^= combos_[j];
        }
    }
    if (!rest.is_zero()) {
        return std::nullopt;
    }
    return coeffs;
}

std::optional<F2Vector> decompose(std::span<const F2Vector> rows, const F2Vector &v) {
    return SpanDecomposer(v.size(), rows).coefficients(v);
}

Coset::Coset(Subspace space, const F2Vector &x) : space_(std::move(space)), offset_(space_.canonical_rep(x)) {}

bool Coset::contains(const F2Vector &v) const { return space_.canonical_rep(v) == offset_; }

bool Coset::is_subset_of(const Coset &other) const {
    return other.space_.contains(space_) && other.contains(offset_);
}

std::vector<F2Vector> Coset::elements() const {
    auto out = space_.elements();
    for (auto &v : out) {
        v ^= offset_;
    }
    return out;
}

DimensionProfile DimensionProfile::standard(size_t n) {
    if (n == 0 || n % 6 != 0) {
        throw std::invalid_argument("DimensionProfile::standard: n must be a positive multiple of 6, got " +
                                    std::to_string(n));
    }
    return DimensionProfile{n, n / 6, 2 * n / 6, 3 * n / 6, 4 * n / 6};
}

DimensionProfile DimensionProfile::custom(size_t n, size_t d_R, size_t d_S, size_t d_T) {
    if (!(d_R <= d_S && d_S <= d_T && d_T + d_S - d_R <= n)) {
        throw std::invalid_argument("DimensionProfile::custom: need d_R <= d_S <= d_T and d_T + d_S - d_R <= n");
    }
    return DimensionProfile{n, d_R, d_S, d_T, d_T + d_S - d_R};
}

}  // namespace poni
