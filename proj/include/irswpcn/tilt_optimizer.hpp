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

#ifndef IRSWPCN_TILT_OPTIMIZER_HPP
#define IRSWPCN_TILT_OPTIMIZER_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "irswpcn/allocator.hpp"
#include "irswpcn/channel_model.hpp"
#include "irswpcn/golden_section.hpp"

/// \file tilt_optimizer.hpp
/// Maximization of the common rate over the mechanical tilt.
///
/// R0(psi) is not known to be unimodal for more than one user, so a uniform
/// grid over the admissible interval seeds a golden-section refinement inside
/// the best grid bracket. The grid endpoints put a node exactly on the
/// surface plane; they are evaluated as infeasible.

namespace irswpcn {

enum class TieBreak { smallest_abs_tilt };

struct TiltSearchConfig {
    std::size_t grid_points = 721;
    double refine_tolerance_rad = 1e-8;
    TieBreak tie_break = TieBreak::smallest_abs_tilt;
};

struct TiltOptimum {
    double tilt_rad;
    Allocation allocation;
};

struct ProfilePoint {
    double tilt_rad;
    std::optional<double> common_rate;  ///< empty when infeasible
    std::string error;
};

namespace detail {

/// R0 at `tilt`, or -inf where the geometry admits no allocation.
inline double common_rate_or_neg_inf(const Scenario& scenario, double tilt) {
    std::vector<double> coeffs(scenario.user_count());
    try {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            coeffs[k] = snr_coefficient(scenario, k, tilt);
        }
        return common_rate(coeffs);
    } catch (const DomainError&) {
    } catch (const InfeasibleError&) {
    }
    return -std::numeric_limits<double>::infinity();
}

// Strictly better rate, or an equal rate closer to zero tilt.
inline bool preferred(double rate, double tilt, double best_rate, double best_tilt) noexcept {
    if (rate > best_rate) return true;
    return rate == best_rate && std::abs(tilt) < std::abs(best_tilt);
}

}  // namespace detail

inline std::vector<ProfilePoint> rate_profile(const Scenario& scenario,
                                              std::span<const double> tilt_samples) {
    std::vector<ProfilePoint> out;
    out.reserve(tilt_samples.size());
    for (double tilt : tilt_samples) {
        try {
            out.push_back({tilt, allocate(scenario, tilt).common_rate, {}});
        } catch (const DomainError& e) {
            out.push_back({tilt, std::nullopt, e.what()});
        } catch (const InfeasibleError& e) {
            out.push_back({tilt, std::nullopt, e.what()});
        }
    }
    return out;
}

inline TiltOptimum optimize_tilt(const Scenario& scenario, const TiltSearchConfig& search = {}) {
    if (search.grid_points < 3) throw std::invalid_argument("optimize_tilt: grid_points must be >= 3");
    if (!(search.refine_tolerance_rad > 0.0)) {
        throw std::invalid_argument("optimize_tilt: refine_tolerance_rad must be positive");
    }
    require_valid(scenario);
    const TiltBounds bounds = tilt_bounds(scenario);
    const double lo = bounds.lower();
    const double hi = bounds.upper();
    const std::size_t n = search.grid_points;
    const double step = (hi - lo) / static_cast<double>(n - 1);
    auto grid_at = [&](std::size_t i) { return i + 1 == n ? hi : lo + step * static_cast<double>(i); };

    // Zero tilt is always admissible and is the tie-break anchor.
    double best_tilt = 0.0;
    double best_rate = detail::common_rate_or_neg_inf(scenario, 0.0);
    std::size_t best_index = static_cast<std::size_t>(std::floor((0.0 - lo) / step));
    for (std::size_t i = 0; i < n; ++i) {
        const double tilt = grid_at(i);
        const double rate = detail::common_rate_or_neg_inf(scenario, tilt);
        if (detail::preferred(rate, tilt, best_rate, best_tilt)) {
            best_rate = rate;
            best_tilt = tilt;
            best_index = i;
        }
    }
    if (!std::isfinite(best_rate)) {
        throw InfeasibleError("optimize_tilt: no admissible tilt yields a feasible allocation");
    }

    const double bracket_lo = best_index == 0 ? lo : grid_at(best_index - 1);
    const double bracket_hi = best_index + 1 >= n ? hi : grid_at(best_index + 1);
    const ScalarOptimum refined = golden_section_maximize(
        [&](double tilt) { return detail::common_rate_or_neg_inf(scenario, tilt); }, bracket_lo,
        bracket_hi, search.refine_tolerance_rad);
    if (refined.value > best_rate) {
        best_rate = refined.value;
        best_tilt = refined.x;
    }

    return TiltOptimum{best_tilt, allocate(scenario, best_tilt)};
}

}  // namespace irswpcn

#endif  // IRSWPCN_TILT_OPTIMIZER_HPP
