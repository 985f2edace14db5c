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

#ifndef IRSWPCN_CHANNEL_MODEL_HPP
#define IRSWPCN_CHANNEL_MODEL_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "irswpcn/errors.hpp"

/// \file channel_model.hpp
/// Far-field line-of-sight channel between the unit cells of the surface and
/// the network nodes.
///
/// Geometry lives in the x0z plane with the surface at the origin. Angles are
/// polar angles measured from the z-axis, which is the boresight at zero tilt.
/// Every EHU sits in the first quadrant at angle +alpha_k; the BS sits in the
/// second quadrant at -alpha_0, but its angle is stored as the positive
/// magnitude alpha_0. A tilt psi rotates the boresight towards the EHUs, so the
/// BS sees the surface at alpha_0 + psi and EHU k at alpha_k - psi.

namespace irswpcn {

enum class IrsKind {
    practical,  ///< unit-cell gain A cos^q(angle) / (4 pi d^2)
    benchmark,  ///< angle-insensitive unit cell with halved gain A / (8 pi d^2)
};

enum class NodeRole { bs, ehu };

struct NodePosition {
    double distance_m = 0.0;
    double angle_rad = 0.0;
};

struct IrsConfig {
    std::size_t cell_count = 10000;
    double cell_area_m2 = 0.025 * 0.025;
    double wavelength_m = 0.1;
    double pattern_exponent = 1.0;
    IrsKind kind = IrsKind::practical;

    /// Physical aperture S = N A.
    double total_area() const noexcept {
        return static_cast<double>(cell_count) * cell_area_m2;
    }
};

struct Scenario {
    NodePosition bs;
    std::vector<NodePosition> ehus;
    IrsConfig irs;
    double tx_power_w = 4.0;
    double noise_power_w = 1e-13;
    std::vector<double> efficiencies;

    std::size_t user_count() const noexcept { return ehus.size(); }
};

/// Admissible tilt interval [-negative, positive].
struct TiltBounds {
    double negative = 0.0;
    double positive = 0.0;

    double lower() const noexcept { return -negative; }
    double upper() const noexcept { return positive; }
    bool contains(double tilt) const noexcept { return tilt >= lower() && tilt <= upper(); }
};

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

inline const char* to_string(IrsKind kind) noexcept {
    return kind == IrsKind::practical ? "practical" : "benchmark";
}

/// Lists every violated invariant; empty when the scenario is usable.
inline std::vector<std::string> validate(const Scenario& scenario) {
    std::vector<std::string> out;
    auto check_node = [&out](const NodePosition& node, const std::string& name) {
        if (!(node.distance_m > 0.0) || !std::isfinite(node.distance_m)) {
            out.push_back(name + ".distance_m must be positive (got " +
                          std::to_string(node.distance_m) + ")");
        }
        if (!(node.angle_rad > 0.0 && node.angle_rad < kHalfPi)) {
            out.push_back(name + ".angle_rad must lie in (0, pi/2) (got " +
                          std::to_string(node.angle_rad) + ")");
        }
    };

    check_node(scenario.bs, "bs");
    if (scenario.ehus.empty()) out.push_back("at least one EHU is required");
    for (std::size_t k = 0; k < scenario.ehus.size(); ++k) {
        check_node(scenario.ehus[k], "ehus[" + std::to_string(k) + "]");
        if (k > 0 && !(scenario.ehus[k].angle_rad > scenario.ehus[k - 1].angle_rad)) {
            out.push_back("ehus must be ordered by strictly increasing angle (index " +
                          std::to_string(k) + ")");
        }
    }

    if (scenario.efficiencies.size() != scenario.ehus.size()) {
        out.push_back("efficiencies must have one entry per EHU (" +
                      std::to_string(scenario.efficiencies.size()) + " vs " +
                      std::to_string(scenario.ehus.size()) + ")");
    }
    for (std::size_t k = 0; k < scenario.efficiencies.size(); ++k) {
        const double eta = scenario.efficiencies[k];
        if (!(eta > 0.0 && eta <= 1.0)) {
            out.push_back("efficiencies[" + std::to_string(k) + "] must lie in (0, 1] (got " +
                          std::to_string(eta) + ")");
        }
    }

    if (!(scenario.tx_power_w > 0.0) || !std::isfinite(scenario.tx_power_w))
        out.push_back("tx_power_w must be positive");
    if (!(scenario.noise_power_w > 0.0) || !std::isfinite(scenario.noise_power_w))
        out.push_back("noise_power_w must be positive");

    const IrsConfig& irs = scenario.irs;
    if (irs.cell_count == 0) out.push_back("irs.cell_count must be positive");
    if (!(irs.wavelength_m > 0.0)) out.push_back("irs.wavelength_m must be positive");
    if (!(irs.cell_area_m2 > 0.0)) out.push_back("irs.cell_area_m2 must be positive");
    const double max_area = (irs.wavelength_m / 4.0) * (irs.wavelength_m / 4.0);
    if (irs.cell_area_m2 > max_area * (1.0 + 1e-12)) {
        out.push_back("irs.cell_area_m2 must not exceed (wavelength/4)^2 = " +
                      std::to_string(max_area));
    }
    if (!(irs.pattern_exponent >= 0.0) || !std::isfinite(irs.pattern_exponent))
        out.push_back("irs.pattern_exponent must be a nonnegative real");
    return out;
}

inline void require_valid(const Scenario& scenario) {
    auto violations = validate(scenario);
    if (!violations.empty()) throw ValidationError(std::move(violations));
}

inline double off_boresight_angle(const NodePosition& node, NodeRole role, double tilt) noexcept {
    return role == NodeRole::bs ? node.angle_rad + tilt : node.angle_rad - tilt;
}

/// Power gain between one unit cell and a node at `distance` seen under
/// `angle` from the boresight.
inline double unit_cell_gain(double distance, double angle, const IrsConfig& irs) {
    if (!(distance > 0.0)) throw DomainError("unit_cell_gain: distance must be positive");
    if (irs.kind == IrsKind::benchmark) {
        return irs.cell_area_m2 / (8.0 * std::numbers::pi * distance * distance);
    }
    if (!(std::abs(angle) < kHalfPi)) {
        throw DomainError("unit_cell_gain: node at " + std::to_string(angle) +
                          " rad is on or behind the surface plane");
    }
    const double pattern = std::pow(std::cos(angle), irs.pattern_exponent);
    return irs.cell_area_m2 * pattern / (4.0 * std::numbers::pi * distance * distance);
}

/// B_k(psi) = Omega_0(psi) Omega_k(psi). `ehu_index` is zero-based.
inline double product_gain(const Scenario& scenario, std::size_t ehu_index, double tilt) {
    const NodePosition& ehu = scenario.ehus.at(ehu_index);
    const double bs_gain = unit_cell_gain(
        scenario.bs.distance_m, off_boresight_angle(scenario.bs, NodeRole::bs, tilt), scenario.irs);
    const double ehu_gain =
        unit_cell_gain(ehu.distance_m, off_boresight_angle(ehu, NodeRole::ehu, tilt), scenario.irs);
    return bs_gain * ehu_gain;
}

/// C_k = eta_k P0 N^4 B_k^2 / N0, the effective SNR coefficient of user k.
inline double snr_coefficient(const Scenario& scenario, std::size_t ehu_index, double tilt) {
    const double n = static_cast<double>(scenario.irs.cell_count);
    // (N^2 B)^2 keeps the intermediate in range for large N.
    const double coherent = n * n * product_gain(scenario, ehu_index, tilt);
    return scenario.efficiencies.at(ehu_index) * scenario.tx_power_w * coherent * coherent /
           scenario.noise_power_w;
}

inline TiltBounds tilt_bounds(const Scenario& scenario) {
    std::vector<std::string> bad;
    auto inside = [](double a) { return a > 0.0 && a < kHalfPi; };
    if (!inside(scenario.bs.angle_rad)) bad.push_back("bs.angle_rad must lie in (0, pi/2)");
    if (scenario.ehus.empty()) bad.push_back("at least one EHU is required");
    double max_angle = 0.0;
    for (std::size_t k = 0; k < scenario.ehus.size(); ++k) {
        const double a = scenario.ehus[k].angle_rad;
        if (!inside(a)) bad.push_back("ehus[" + std::to_string(k) + "].angle_rad must lie in (0, pi/2)");
        max_angle = std::max(max_angle, a);
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
    return TiltBounds{kHalfPi - max_angle, kHalfPi - scenario.bs.angle_rad};
}

}  // namespace irswpcn

#endif  // IRSWPCN_CHANNEL_MODEL_HPP
