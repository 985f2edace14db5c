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

#ifndef IRSWPCN_ALLOCATOR_HPP
#define IRSWPCN_ALLOCATOR_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "irswpcn/channel_model.hpp"
#include "irswpcn/errors.hpp"
#include "irswpcn/lambert_w.hpp"

/// \file allocator.hpp
/// Closed-form max-min fair TDMA time allocation at a fixed tilt.
///
/// User k gets an energy-harvesting phase nu_k and an uplink phase tau_k of a
/// unit frame. With SNR coefficient C_k and W_k = W0((C_k - 1)/e):
///
///     R0    = [ sum_k (1 - 1/C_k) / W_k ]^-1
///     tau_k = R0 / (1 + W_k)
///     nu_k  = (tau_k / C_k) [ (C_k - 1)/W_k - 1 ]
///
/// The defining identity W e^W = (C - 1)/e gives (C - 1)/W = e^(1 + W), and
/// every formula is evaluated through that exponential. This removes the 0/0
/// at C_k = 1 (where the ratio tends to e) and keeps full relative precision
/// for C_k far below 1, where W_k sits next to the branch point.
///
/// Rates are in nats per frame.

namespace irswpcn {

struct Allocation {
    double tilt_rad = 0.0;
    std::vector<double> eh_durations;  ///< nu_k
    std::vector<double> it_durations;  ///< tau_k
    double common_rate = 0.0;          ///< R0
    std::vector<double> rates;         ///< R_k
    std::vector<double> energies;      ///< E_k, joules per frame
    std::vector<double> snr_coeffs;    ///< C_k

    std::size_t user_count() const noexcept { return snr_coeffs.size(); }
    double sum_rate() const noexcept { return static_cast<double>(user_count()) * common_rate; }
    double time_used() const {
        return std::accumulate(eh_durations.begin(), eh_durations.end(), 0.0) +
               std::accumulate(it_durations.begin(), it_durations.end(), 0.0);
    }
};

namespace detail {

inline void check_coefficient(double c) {
    if (std::isnan(c) || c < 0.0 || std::isinf(c)) {
        throw DomainError("SNR coefficient must be a finite nonnegative number");
    }
    if (c == 0.0) {
        throw InfeasibleError("SNR coefficient is zero: a user receives no energy");
    }
}

}  // namespace detail

inline double common_rate(std::span<const double> coeffs) {
    if (coeffs.empty()) throw DomainError("common_rate: no users");
    double time_per_nat = 0.0;
    for (double c : coeffs) {
        detail::check_coefficient(c);
        // (1 - 1/C) / W = e^(1 + W) / C
        time_per_nat += std::exp(lambert_w0_shifted(c).one_plus_w) / c;
    }
    return 1.0 / time_per_nat;
}

inline double it_duration(double c, double r0) {
    detail::check_coefficient(c);
    if (!(r0 > 0.0)) throw DomainError("it_duration: common rate must be positive");
    return r0 / lambert_w0_shifted(c).one_plus_w;
}

inline double eh_duration(double c, double tau) {
    detail::check_coefficient(c);
    if (!(tau >= 0.0)) throw DomainError("eh_duration: IT duration must be nonnegative");
    // (C - 1)/W - 1 = e^(1 + W) - 1
    return tau * std::expm1(lambert_w0_shifted(c).one_plus_w) / c;
}

/// R_k = tau_k ln(1 + C_k nu_k / tau_k).
inline double achieved_rate(double c, double nu, double tau) {
    if (nu < 0.0 || tau < 0.0) throw DomainError("achieved_rate: durations must be nonnegative");
    if (tau == 0.0 || nu == 0.0) return 0.0;
    return tau * std::log1p(c * nu / tau);
}

/// E_k = eta_k P0 nu_k N^2 B_k(psi).
inline double harvested_energy(const Scenario& scenario, std::size_t ehu_index, double tilt,
                               double nu) {
    if (nu < 0.0) throw DomainError("harvested_energy: EH duration must be nonnegative");
    const double n = static_cast<double>(scenario.irs.cell_count);
    return scenario.efficiencies.at(ehu_index) * scenario.tx_power_w * nu * n * n *
           product_gain(scenario, ehu_index, tilt);
}

inline Allocation allocate(const Scenario& scenario, double tilt) {
    require_valid(scenario);
    const TiltBounds bounds = tilt_bounds(scenario);
    if (!bounds.contains(tilt)) {
        throw DomainError("allocate: tilt " + std::to_string(tilt) + " rad outside [" +
                          std::to_string(bounds.lower()) + ", " + std::to_string(bounds.upper()) +
                          "]");
    }

    const std::size_t k_count = scenario.user_count();
    Allocation out;
    out.tilt_rad = tilt;
    out.snr_coeffs.resize(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        out.snr_coeffs[k] = snr_coefficient(scenario, k, tilt);
        if (out.snr_coeffs[k] == 0.0) {
            throw InfeasibleError("allocate: EHU " + std::to_string(k) +
                                  " has zero end-to-end gain at tilt " + std::to_string(tilt));
        }
    }

    out.common_rate = common_rate(out.snr_coeffs);
    out.it_durations.resize(k_count);
    out.eh_durations.resize(k_count);
    out.rates.resize(k_count);
    out.energies.resize(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        const double c = out.snr_coeffs[k];
        const ShiftedW sw = lambert_w0_shifted(c);
        const double tau = out.common_rate / sw.one_plus_w;
        const double nu = tau * std::expm1(sw.one_plus_w) / c;
        out.it_durations[k] = tau;
        out.eh_durations[k] = nu;
        out.rates[k] = achieved_rate(c, nu, tau);
        out.energies[k] = harvested_energy(scenario, k, tilt, nu);
    }
    return out;
}

}  // namespace irswpcn

#endif  // IRSWPCN_ALLOCATOR_HPP
