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

#ifndef IRSWPCN_ORACLE_HPP
#define IRSWPCN_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "irswpcn/errors.hpp"
#include "irswpcn/golden_section.hpp"

/// \file oracle.hpp
/// Brute-force solver for the fixed-tilt max-min allocation, used to certify
/// the closed form. It shares no algebra with the Lambert-W solution.
///
/// When every user meets the common rate R0 with equality, user k with
/// power-to-rate ratio x = C_k nu_k / tau_k spends tau_k = R0 / ln(1 + x) and
/// nu_k = tau_k x / C_k, so its share of the frame is R0 g_k(x) with
///
///     g_k(x) = (1 + x / C_k) / ln(1 + x).
///
/// The unit-frame budget then gives R0 = 1 / sum_k min_x g_k(x). Each inner
/// minimum is found by a log-spaced scan followed by golden-section refinement
/// in log x.

namespace irswpcn {

struct OracleConfig {
    std::size_t ratio_grid_size = 20000;
    double ratio_max = 1e8;
    int refine_iters = 200;
};

struct OracleUser {
    double ratio;         ///< minimizing x_k
    double time_cost;     ///< g_k(x_k)
    double it_duration;   ///< tau_k implied by x_k and R0
    double eh_duration;   ///< nu_k implied by x_k and R0
};

struct OracleResult {
    double common_rate;
    std::vector<OracleUser> users;
};

inline double per_user_time_cost(double c, double x) {
    if (!(x > 0.0)) throw DomainError("per_user_time_cost: ratio must be positive");
    if (!(c > 0.0)) throw DomainError("per_user_time_cost: coefficient must be positive");
    return (1.0 + x / c) / std::log1p(x);
}

/// Inner scalar minimization of g_k over x > 0.
inline OracleUser minimize_time_cost(double c, const OracleConfig& cfg = {}) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw DomainError("oracle: coefficient must be positive and finite");
    }
    if (cfg.ratio_grid_size < 100) throw std::invalid_argument("oracle: ratio_grid_size must be >= 100");

    // The scan range must bracket the minimizer: it sits near sqrt(2c) for
    // small c and below c for large c.
    const double log_lo = std::log(std::min(1e-6, 1e-3 * std::sqrt(c)));
    const double log_hi = std::log(std::max(cfg.ratio_max, 10.0 * c));
    const std::size_t n = cfg.ratio_grid_size;
    const double step = (log_hi - log_lo) / static_cast<double>(n - 1);

    auto cost_at_log = [c](double lx) { return per_user_time_cost(c, std::exp(lx)); };

    std::size_t best = 0;
    double best_cost = cost_at_log(log_lo);
    for (std::size_t i = 1; i < n; ++i) {
        const double g = cost_at_log(log_lo + step * static_cast<double>(i));
        if (g < best_cost) {
            best_cost = g;
            best = i;
        }
    }

    const double lo = log_lo + step * static_cast<double>(best == 0 ? 0 : best - 1);
    const double hi = log_lo + step * static_cast<double>(std::min(best + 1, n - 1));
    ScalarOptimum refined = golden_section_minimize(cost_at_log, lo, hi, 1e-13, cfg.refine_iters);
    if (refined.value > best_cost) refined = {log_lo + step * static_cast<double>(best), best_cost};

    return OracleUser{std::exp(refined.x), refined.value, 0.0, 0.0};
}

inline OracleResult oracle_common_rate(std::span<const double> coeffs, const OracleConfig& cfg = {}) {
    if (coeffs.empty()) throw DomainError("oracle: no users");
    OracleResult out;
    out.users.reserve(coeffs.size());
    double total = 0.0;
    for (double c : coeffs) {
        out.users.push_back(minimize_time_cost(c, cfg));
        total += out.users.back().time_cost;
    }
    out.common_rate = 1.0 / total;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        OracleUser& u = out.users[k];
        u.it_duration = out.common_rate / std::log1p(u.ratio);
        u.eh_duration = u.it_duration * u.ratio / coeffs[k];
    }
    return out;
}

}  // namespace irswpcn

#endif  // IRSWPCN_ORACLE_HPP
