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

#ifndef IRSWPCN_LAMBERT_W_HPP
#define IRSWPCN_LAMBERT_W_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irswpcn/errors.hpp"

/// \file lambert_w.hpp
/// Principal branch W0 of the Lambert-W function, the inverse of w -> w e^w on
/// [-1/e, inf).
///
/// Halley iteration from a piecewise initial guess: branch-point series below
/// -0.32, a log-based guess elsewhere. For x > 3 the iteration runs on the
/// logarithmic form w + ln w = ln x so that w e^w is never formed.

namespace irswpcn {

namespace detail {

// e split into a double-double pair so that e*x + 1 keeps its relative
// accuracy next to the branch point.
inline constexpr double kEHi = 2.718281828459045;
inline constexpr double kELo = 1.4456468917292502e-16;

// Arguments this far below -1/e are treated as -1/e.
inline constexpr double kBranchClamp = 1e-12;
inline constexpr int kMaxIterations = 50;

inline bool step_converged(double step, double w) noexcept {
    const double a = std::abs(step);
    return a <= 1e-14 * std::min(1.0, std::abs(w)) ||
           a <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w);
}

// W expanded around the branch point in p = sqrt(2 (e x + 1)).
inline double branch_series(double p) noexcept {
    return -1.0 +
           p * (1.0 + p * (-1.0 / 3.0 +
                           p * (11.0 / 72.0 +
                                p * (-43.0 / 540.0 + p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

// Halley on f(w) = w + ln w - L (w > 0).
inline double solve_log_form(double log_x, double w) noexcept {
    for (int i = 0; i < kMaxIterations; ++i) {
        const double f = w + std::log(w) - log_x;
        const double d1 = 1.0 + 1.0 / w;
        const double d2 = -1.0 / (w * w);
        const double step = f / (d1 - 0.5 * f * d2 / d1);
        w -= step;
        if (step_converged(step, w)) break;
    }
    return w;
}

}  // namespace detail

/// W0(x) for x >= -1/e. Throws DomainError below the branch point (beyond a
/// 1e-12 clamp window).
inline double lambert_w0(double x) {
    using detail::kEHi;
    using detail::kELo;
    if (std::isnan(x)) return x;
    if (x == std::numeric_limits<double>::infinity()) return x;

    // Tiny arguments: Taylor series, relative error O(x^3).
    if (std::abs(x) < 1e-8) return x * (1.0 + x * (-1.0 + 1.5 * x));

    if (x < 0.0) {
        const double t = std::fma(x, kEHi, 1.0) + x * kELo;  // e x + 1
        if (t <= 0.0) {
            if (x < -1.0 / std::numbers::e - detail::kBranchClamp) {
                throw DomainError("lambert_w0: argument below -1/e");
            }
            return -1.0;
        }
        const double p = std::sqrt(2.0 * t);
        if (p < 1e-3) return detail::branch_series(p);
    }

    if (x > 3.0) {
        const double lx = std::log(x);
        const double llx = std::log(lx);
        return detail::solve_log_form(lx, lx - llx + llx / lx);
    }

    double w;
    if (x < -0.32) {
        w = detail::branch_series(std::sqrt(2.0 * (std::fma(x, kEHi, 1.0) + x * kELo)));
    } else {
        const double l = std::log1p(x);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
    }

    for (int i = 0; i < detail::kMaxIterations; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (detail::step_converged(step, w)) break;
    }
    return w < -1.0 ? -1.0 : w;
}

/// W0(e^log_x), for arguments whose magnitude would overflow if formed.
inline double lambert_w0_from_log(double log_x) {
    if (log_x < 1.1) return lambert_w0(std::exp(log_x));
    const double ll = std::log(log_x);
    return detail::solve_log_form(log_x, log_x - ll + ll / log_x);
}

/// W0((c - 1)/e) for c >= 0, together with 1 + W0 carried at full relative
/// precision. This is the quantity the allocation formulas need for an SNR
/// coefficient c.
struct ShiftedW {
    double w;
    double one_plus_w;
};

inline ShiftedW lambert_w0_shifted(double c) {
    if (std::isnan(c)) return {c, c};
    if (c < 0.0) throw DomainError("lambert_w0_shifted: coefficient must be nonnegative");
    if (c == 0.0) return {-1.0, 0.0};

    if (c < 0.25) {
        // With y = 1 + W the defining identity reads (y - 1) e^y + 1 = c, whose
        // left side is sum_{n>=2} (n-1) y^n / n!. Newton on y avoids forming
        // (c - 1)/e, which loses every digit of c as c -> 0.
        auto residual = [c](double y) {
            double term = y;  // y^n / n!, starting at n = 1
            double sum = 0.0;
            for (int n = 2; n < 40; ++n) {
                term *= y / n;
                const double add = (n - 1) * term;
                sum += add;
                if (add < 1e-18 * sum) break;
            }
            return sum - c;
        };
        double y = std::sqrt(2.0 * c);
        for (int i = 0; i < detail::kMaxIterations; ++i) {
            const double step = residual(y) / (y * std::exp(y));
            y -= step;
            if (std::abs(step) <= 2.0 * std::numeric_limits<double>::epsilon() * y) break;
        }
        return {y - 1.0, y};
    }

    if (c > 1e15) {
        const double w = lambert_w0_from_log(std::log(c) + std::log1p(-1.0 / c) - 1.0);
        return {w, 1.0 + w};
    }

    const double w = lambert_w0((c - 1.0) / std::numbers::e);
    return {w, 1.0 + w};
}

}  // namespace irswpcn

#endif  // IRSWPCN_LAMBERT_W_HPP
