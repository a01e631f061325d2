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
#include <map>
#include <vector>

#include "poni/f2.h"
#include "poni/rng.h"
#include "poni/subspace.h"

namespace poni::testing {

inline Subspace random_subspace(size_t n, Rng &rng) {
    return sample_subspace(Subspace::full(n), uniform_below(rng, n + 1), rng);
}

inline Subspace random_subspace(size_t n, size_t k, Rng &rng) { return sample_subspace(Subspace::full(n), k, rng); }

/// Basis rows as small integers; a stable key for n <= 64.
inline std::vector<uint64_t> key_of(const Subspace &s) {
    std::vector<uint64_t> k;
    for (const auto &b : s.basis()) {
        k.push_back(b.to_u64());
    }
    return k;
}

/// Histogram of draws against a fixed list of categories.
template <typename Key>
std::vector<uint64_t> histogram(const std::map<Key, uint64_t> &counts, const std::vector<Key> &categories) {
    std::vector<uint64_t> h;
    for (const auto &c : categories) {
        auto it = counts.find(c);
        h.push_back(it == counts.end() ? 0 : it->second);
    }
    return h;
}

}  // namespace poni::testing
