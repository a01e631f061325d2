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
#include <vector>

namespace poni {

/// p +- 3 sigma for a binomial rate over n trials, clamped to [0, 1].
struct BinomialBand {
    double p = 0;
    double sigma = 0;
    double lo = 0;
    double hi = 1;

    bool contains(double rate) const { return rate >= lo && rate <= hi; }
};

BinomialBand binomial_band(double p, uint64_t n, double width = 3.0);

struct ChiSquareResult {
    double statistic = 0;
    size_t dof = 0;
    double p_value = 1;
};

/// Upper tail of the chi-square distribution.
double chi_square_sf(double statistic, size_t dof);

/// Homogeneity test between two histograms over the same bins. Bins empty
/// on both sides are dropped.
ChiSquareResult chi_square_two_sample(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b);

/// Goodness of fit against equal expected counts.
ChiSquareResult chi_square_uniform(const std::vector<uint64_t> &counts);

}  // namespace poni
