// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irswpcn Authors
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

#ifndef IRSWPCN_GOLDEN_SECTION_HPP
#define IRSWPCN_GOLDEN_SECTION_HPP

#include <cmath>
#include <utility>

namespace irswpcn {

struct ScalarOptimum {
    double x;
    double value;
};

/// Golden-section minimization of `f` on [lo, hi]. Only interior points are
/// evaluated. Stops when the bracket is narrower than `tolerance` or after
/// `max_iterations`; returns the best point seen.
template <typename F>
ScalarOptimum golden_section_minimize(F&& f, double lo, double hi, double tolerance,
                                      int max_iterations = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    ScalarOptimum best = fc <= fd ? ScalarOptimum{c, fc} : ScalarOptimum{d, fd};

    for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
            if (fc < best.value) best = {c, fc};
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
            if (fd < best.value) best = {d, fd};
        }
    }
    return best;
}

template <typename F>
ScalarOptimum golden_section_maximize(F&& f, double lo, double hi, double tolerance,
                                      int max_iterations = 200) {
    auto neg = [&f](double x) { return -f(x); };
    ScalarOptimum r = golden_section_minimize(neg, lo, hi, tolerance, max_iterations);
    return {r.x, -r.value};
}

}  // namespace irswpcn

#endif  // IRSWPCN_GOLDEN_SECTION_HPP
