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

#include "poni/stats.h"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <stdexcept>

namespace poni {

BinomialBand binomial_band(double p, uint64_t n, double width) {
    if (n == 0) {
        throw std::invalid_argument("binomial_band: no trials");
    }
    BinomialBand b;
    b.p = p;
    b.sigma = std::sqrt(p * (1 - p) / static_cast<double>(n));
    b.lo = std::max(0.0, p - width * b.sigma);
    b.hi = std::min(1.0, p + width * b.sigma);
    return b;
}

double chi_square_sf(double statistic, size_t dof) {
    if (dof == 0) {
        return 1.0;
    }
    boost::math::chi_squared dist(static_cast<double>(dof));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

ChiSquareResult chi_square_two_sample(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("chi_square_two_sample: histograms differ in length");
    }
    double na = 0;
    double nb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        na += static_cast<double>(a[i]);
        nb += static_cast<double>(b[i]);
    }
    if (na == 0 || nb == 0) {
        throw std::invalid_argument("chi_square_two_sample: empty sample");
    }
    ChiSquareResult r;
    size_t bins = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double total = static_cast<double>(a[i] + b[i]);
        if (total == 0) {
            continue;
        }
        ++bins;
        double ea = total * na / (na + nb);
        double eb = total * nb / (na + nb);
        r.statistic += (a[i] - ea) * (a[i] - ea) / ea + (b[i] - eb) * (b[i] - eb) / eb;
    }
    r.dof = bins > 0 ? bins - 1 : 0;
    r.p_value = chi_square_sf(r.statistic, r.dof);
    return r;
}

ChiSquareResult chi_square_uniform(const std::vector<uint64_t> &counts) {
    if (counts.empty()) {
        throw std::invalid_argument("chi_square_uniform: no bins");
    }
    double total = 0;
    for (auto c : counts) {
        total += static_cast<double>(c);
    }
    double e = total / static_cast<double>(counts.size());
    ChiSquareResult r;
    for (auto c : counts) {
        r.statistic += (c - e) * (c - e) / e;
    }
    r.dof = counts.size() - 1;
    r.p_value = chi_square_sf(r.statistic, r.dof);
    return r;
}

}  // namespace poni
