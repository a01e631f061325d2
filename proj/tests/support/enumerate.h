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

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <unordered_set>
#include <vector>

#include "poni/subspace.h"

namespace poni::testing {

/// A subspace of F_2^n for n <= 6, with its element set as a 64-bit mask.
struct SmallSubspace {
    Subspace space;
    uint64_t mask = 0;
    std::vector<uint8_t> elements;
};

/// Translate a set mask by v: {e ^ v : e in set}.
inline uint64_t translate_mask(uint64_t mask, uint64_t v) {
    uint64_t out = 0;
    while (mask != 0) {
        int e = std::countr_zero(mask);
        mask &= mask - 1;
        out |= uint64_t{1} << (static_cast<uint64_t>(e) ^ v);
    }
    return out;
}

/// Every subspace of F_2^n, grown one vector at a time from {0}.
inline std::vector<SmallSubspace> all_subspaces(size_t n) {
    const uint64_t size = uint64_t{1} << n;
    std::vector<uint64_t> masks{1};
    std::unordered_set<uint64_t> seen{1};
    for (size_t i = 0; i < masks.size(); ++i) {
        for (uint64_t v = 1; v < size; ++v) {
            if ((masks[i] >> v) & 1) {
                continue;
            }
            uint64_t grown = masks[i] | translate_mask(masks[i], v);
            if (seen.insert(grown).second) {
                masks.push_back(grown);
            }
        }
    }
    std::vector<SmallSubspace> out;
    out.reserve(masks.size());
    for (uint64_t m : masks) {
        SmallSubspace s;
        s.mask = m;
        std::vector<F2Vector> rows;
        for (uint64_t e = 0; e < size; ++e) {
            if ((m >> e) & 1) {
                s.elements.push_back(static_cast<uint8_t>(e));
                rows.push_back(F2Vector::from_u64(n, e));
            }
        }
        s.space = Subspace::span(n, rows);
        out.push_back(std::move(s));
    }
    return out;
}

/// Calls fn once for every subspace of F_2^n by walking reduced echelon
/// forms: a pivot set plus every filling of the free entries.
inline void for_each_subspace(size_t n, const std::function<void(const Subspace &)> &fn) {
    for (uint64_t pivot_mask = 0; pivot_mask < (uint64_t{1} << n); ++pivot_mask) {
        std::vector<size_t> pivots;
        for (size_t j = 0; j < n; ++j) {
            if ((pivot_mask >> j) & 1) {
                pivots.push_back(j);
            }
        }
        std::vector<std::pair<size_t, size_t>> free;
        for (size_t i = 0; i < pivots.size(); ++i) {
            for (size_t j = pivots[i] + 1; j < n; ++j) {
                if (((pivot_mask >> j) & 1) == 0) {
                    free.emplace_back(i, j);
                }
            }
        }
        for (uint64_t fill = 0; fill < (uint64_t{1} << free.size()); ++fill) {
            std::vector<F2Vector> rows;
            for (size_t p : pivots) {
                rows.push_back(F2Vector::unit(n, p));
            }
            for (size_t f = 0; f < free.size(); ++f) {
                if ((fill >> f) & 1) {
                    rows[free[f].first].set(free[f].second, true);
                }
            }
            fn(Subspace::span(n, rows));
        }
    }
}

}  // namespace poni::testing
