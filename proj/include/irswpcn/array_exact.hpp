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

#ifndef IRSWPCN_ARRAY_EXACT_HPP
#define IRSWPCN_ARRAY_EXACT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "irswpcn/channel_model.hpp"
#include "irswpcn/errors.hpp"

/// \file array_exact.hpp
/// Element-by-element model of the surface as a square planar array, used to
/// check the far-field coherent gain N^2 B_k.
///
/// At zero tilt the array lies in the x-y plane with boresight +z. A tilt psi
/// rotates it about the y-axis so that the boresight becomes
/// (sin psi, 0, cos psi). Cells sit on a sqrt(N) x sqrt(N) grid with pitch
/// sqrt(A), centred at the origin. Per-element gains use the exact
/// element-to-node distance but the node's common off-boresight angle.

namespace irswpcn {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double distance(const Vec3& a, const Vec3& b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

struct ElementGrid {
    std::vector<Vec3> positions;
    double tilt_rad = 0.0;
    double pitch_m = 0.0;
    std::size_t side = 0;

    std::size_t size() const noexcept { return positions.size(); }
    double side_length_m() const noexcept { return static_cast<double>(side) * pitch_m; }
};

struct PhaseProfile {
    std::vector<double> phases;  ///< radians in [0, 2 pi)

    std::size_t size() const noexcept { return phases.size(); }
};

inline ElementGrid build_grid(const IrsConfig& irs, double tilt) {
    const std::size_t n = irs.cell_count;
    auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    while (side * side > n) --side;
    while ((side + 1) * (side + 1) <= n) ++side;
    if (n == 0 || side * side != n) {
        throw DomainError("build_grid: cell_count " + std::to_string(n) + " is not a perfect square");
    }

    ElementGrid grid;
    grid.tilt_rad = tilt;
    grid.side = side;
    grid.pitch_m = std::sqrt(irs.cell_area_m2);
    grid.positions.reserve(n);

    // In-plane axes: u spans the x0z trace of the surface, v is the y-axis.
    const Vec3 u{std::cos(tilt), 0.0, -std::sin(tilt)};
    const double centre = 0.5 * static_cast<double>(side - 1);
    for (std::size_t i = 0; i < side; ++i) {
        const double a = (static_cast<double>(i) - centre) * grid.pitch_m;
        for (std::size_t j = 0; j < side; ++j) {
            const double b = (static_cast<double>(j) - centre) * grid.pitch_m;
            grid.positions.push_back({a * u.x, b, a * u.z});
        }
    }
    return grid;
}

/// Cartesian position of a node; the BS lies at -alpha_0 from the z-axis.
inline Vec3 node_cartesian(const NodePosition& node, NodeRole role) noexcept {
    const double sign = role == NodeRole::bs ? -1.0 : 1.0;
    return {sign * node.distance_m * std::sin(node.angle_rad), 0.0,
            node.distance_m * std::cos(node.angle_rad)};
}

/// Wraps 2 pi * cycles into [0, 2 pi), reducing in cycles to keep precision.
inline double wrap_cycles(double cycles) noexcept {
    double frac = cycles - std::floor(cycles);
    if (frac >= 1.0) frac = 0.0;
    double phase = 2.0 * std::numbers::pi * frac;
    return phase >= 2.0 * std::numbers::pi ? 0.0 : phase;
}

inline double wrap_phase(double phase) noexcept {
    return wrap_cycles(phase / (2.0 * std::numbers::pi));
}

inline PhaseProfile node_phase_profile(const ElementGrid& grid, const NodePosition& node,
                                       NodeRole role, double wavelength) {
    const Vec3 p = node_cartesian(node, role);
    PhaseProfile out;
    out.phases.reserve(grid.size());
    for (const Vec3& e : grid.positions) out.phases.push_back(wrap_cycles(distance(e, p) / wavelength));
    return out;
}

/// theta_n = (phi_0n + phi_kn) mod 2 pi: co-phases BS and EHU paths.
inline PhaseProfile design_reflection_phases(const PhaseProfile& bs_profile,
                                             const PhaseProfile& ehu_profile) {
    if (bs_profile.size() != ehu_profile.size()) {
        throw DomainError("design_reflection_phases: profiles differ in length");
    }
    PhaseProfile out;
    out.phases.resize(bs_profile.size());
    for (std::size_t n = 0; n < out.phases.size(); ++n) {
        out.phases[n] = wrap_phase(bs_profile.phases[n] + ehu_profile.phases[n]);
    }
    return out;
}

/// g^T Theta h = sum_n sqrt(Omega_0n Omega_kn) e^{j (theta_n - phi_0n - phi_kn)}.
inline std::complex<double> coherent_sum(const ElementGrid& grid, const NodePosition& bs,
                                         const NodePosition& ehu, const PhaseProfile& reflection,
                                         const IrsConfig& irs) {
    if (reflection.size() != grid.size()) {
        throw DomainError("coherent_sum: reflection profile does not match the grid");
    }
    const Vec3 pb = node_cartesian(bs, NodeRole::bs);
    const Vec3 pe = node_cartesian(ehu, NodeRole::ehu);
    const double bs_angle = off_boresight_angle(bs, NodeRole::bs, grid.tilt_rad);
    const double ehu_angle = off_boresight_angle(ehu, NodeRole::ehu, grid.tilt_rad);

    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const double d0 = distance(grid.positions[n], pb);
        const double dk = distance(grid.positions[n], pe);
        const double amplitude =
            std::sqrt(unit_cell_gain(d0, bs_angle, irs) * unit_cell_gain(dk, ehu_angle, irs));
        const double phase = reflection.phases[n] - wrap_cycles(d0 / irs.wavelength_m) -
                             wrap_cycles(dk / irs.wavelength_m);
        re += amplitude * std::cos(phase);
        im += amplitude * std::sin(phase);
    }
    return {re, im};
}

inline double coherent_gain(const ElementGrid& grid, const NodePosition& bs, const NodePosition& ehu,
                            const PhaseProfile& reflection, const IrsConfig& irs) {
    return std::norm(coherent_sum(grid, bs, ehu, reflection, irs));
}

/// Far-field regime check S <= 9 d0^2.
inline bool far_field_valid(const IrsConfig& irs, double d0) noexcept {
    return irs.total_area() <= 9.0 * d0 * d0;
}

struct ArrayCheck {
    double exact_gain;       ///< |g^T Theta h|^2 from the element model
    double far_field_gain;   ///< N^2 B_k
    double relative_error;   ///< (exact - far_field) / far_field
    double imag_ratio;       ///< |Im| / |sum|
};

/// Element model versus far-field gain for EHU `ehu_index` at `tilt`.
inline ArrayCheck check_array(const Scenario& scenario, std::size_t ehu_index, double tilt) {
    const ElementGrid grid = build_grid(scenario.irs, tilt);
    const NodePosition& ehu = scenario.ehus.at(ehu_index);
    const double lambda = scenario.irs.wavelength_m;
    const PhaseProfile reflection =
        design_reflection_phases(node_phase_profile(grid, scenario.bs, NodeRole::bs, lambda),
                                 node_phase_profile(grid, ehu, NodeRole::ehu, lambda));
    const std::complex<double> sum = coherent_sum(grid, scenario.bs, ehu, reflection, scenario.irs);
    const double n = static_cast<double>(scenario.irs.cell_count);
    const double far = n * n * product_gain(scenario, ehu_index, tilt);
    const double exact = std::norm(sum);
    return {exact, far, (exact - far) / far, std::abs(sum.imag()) / std::abs(sum)};
}

}  // namespace irswpcn

#endif  // IRSWPCN_ARRAY_EXACT_HPP
