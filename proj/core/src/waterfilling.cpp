// SPDX-License-Identifier: Apache-2.0
//
// risrelay - link-level optimization of RIS- and relay-aided MIMO links
// Copyright (C) 2026 The risrelay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risrelay/waterfilling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace risrelay {

double waterfilling_capacity(const CMatrix& h, double sigma2, double p)
{
    if (!(p > 0.0) || !(sigma2 > 0.0) || h.size() == 0) {
        return 0.0;
    }
    const RVector sv = Eigen::BDCSVD<CMatrix>(h).singularValues();
    std::vector<double> inv_gain;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double g = sv(i) * sv(i) / sigma2;
        if (g > 0.0) {
            inv_gain.push_back(1.0 / g);
        }
    }
    if (inv_gain.empty()) {
        return 0.0;
    }

    auto allocated = [&](double level) {
        double sum = 0.0;
        for (double ig : inv_gain) {
            sum += std::max(level - ig, 0.0);
        }
        return sum;
    };
    double lo = 0.0;
    double hi = p + *std::max_element(inv_gain.begin(), inv_gain.end());
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (allocated(mid) > p ? hi : lo) = mid;
    }
    const double level = 0.5 * (lo + hi);

    double bits = 0.0;
    for (double ig : inv_gain) {
        const double power = std::max(level - ig, 0.0);
        bits += std::log2(1.0 + power / ig);
    }
    return bits;
}

} // namespace risrelay
