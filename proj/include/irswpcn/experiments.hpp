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

#ifndef IRSWPCN_EXPERIMENTS_HPP
#define IRSWPCN_EXPERIMENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "irswpcn/allocator.hpp"
#include "irswpcn/channel_model.hpp"
#include "irswpcn/tilt_optimizer.hpp"

/// \file experiments.hpp
/// EHU placement, parameter sweeps and CSV output.

namespace irswpcn {

/// K EHUs at `radius`, equally spaced in angle with both endpoints included.
/// A single EHU goes to the midpoint.
inline std::vector<NodePosition> place_ehus_on_arc(std::size_t count, double radius,
                                                   double angle_min, double angle_max) {
    if (count == 0) throw DomainError("place_ehus_on_arc: count must be >= 1");
    if (!(radius > 0.0)) throw DomainError("place_ehus_on_arc: radius must be positive");
    if (!(angle_min > 0.0 && angle_min < angle_max && angle_max < kHalfPi)) {
        throw DomainError("place_ehus_on_arc: need 0 < angle_min < angle_max < pi/2");
    }
    if (count == 1) return {{radius, 0.5 * (angle_min + angle_max)}};
    std::vector<NodePosition> out(count);
    const double spacing = (angle_max - angle_min) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = {radius, k + 1 == count ? angle_max : angle_min + spacing * static_cast<double>(k)};
    }
    return out;
}

enum class SweepVariable { cell_count, bs_distance, bs_angle };
enum class SweepMode { optimal_tilt, zero_tilt, benchmark };

inline const char* to_string(SweepMode mode) noexcept {
    switch (mode) {
        case SweepMode::optimal_tilt: return "optimal_tilt";
        case SweepMode::zero_tilt: return "zero_tilt";
        case SweepMode::benchmark: return "benchmark";
    }
    return "?";
}

/// CSV column name of the swept quantity.
inline const char* column_name(SweepVariable v) noexcept {
    switch (v) {
        case SweepVariable::cell_count: return "N";
        case SweepVariable::bs_distance: return "d0";
        case SweepVariable::bs_angle: return "alpha0";
    }
    return "?";
}

struct SweepSpec {
    SweepVariable variable = SweepVariable::cell_count;
    std::vector<double> values;
    std::vector<SweepMode> modes{SweepMode::optimal_tilt, SweepMode::zero_tilt, SweepMode::benchmark};
};

struct ResultRow {
    double value = 0.0;
    SweepMode mode = SweepMode::optimal_tilt;
    std::string error;  ///< empty on success
    double psi_star = std::nan("");
    double common_rate = std::nan("");
    double sum_rate = std::nan("");
    std::vector<double> it_durations;
    std::vector<double> eh_durations;

    bool ok() const noexcept { return error.empty(); }
};

inline void validate_sweep(const SweepSpec& spec) {
    std::vector<std::string> bad;
    if (spec.values.empty()) bad.push_back("sweep values must be nonempty");
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            bad.push_back("sweep values must be strictly increasing");
            break;
        }
    }
    if (spec.modes.empty()) bad.push_back("at least one mode is required");
    if (spec.variable == SweepVariable::cell_count) {
        for (double v : spec.values) {
            if (!(v >= 1.0) || std::abs(v - std::round(v)) > 1e-9 * v) {
                bad.push_back("cell_count values must be positive integers (got " + std::to_string(v) + ")");
            }
        }
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

inline Scenario with_swept_value(Scenario s, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::cell_count: s.irs.cell_count = static_cast<std::size_t>(std::llround(value)); break;
        case SweepVariable::bs_distance: s.bs.distance_m = value; break;
        case SweepVariable::bs_angle: s.bs.angle_rad = value; break;
    }
    return s;
}

/// One row per (value, mode) in spec order. A failing row records its error
/// and the sweep continues.
inline std::vector<ResultRow> run_sweep(const Scenario& base, const SweepSpec& spec,
                                        const TiltSearchConfig& search = {}) {
    validate_sweep(spec);
    std::vector<ResultRow> rows;
    rows.reserve(spec.values.size() * spec.modes.size());
    for (double value : spec.values) {
        for (SweepMode mode : spec.modes) {
            ResultRow row;
            row.value = value;
            row.mode = mode;
            try {
                Scenario s = with_swept_value(base, spec.variable, value);
                Allocation a;
                if (mode == SweepMode::zero_tilt) {
                    a = allocate(s, 0.0);
                } else {
                    if (mode == SweepMode::benchmark) s.irs.kind = IrsKind::benchmark;
                    a = optimize_tilt(s, search).allocation;
                }
                row.psi_star = a.tilt_rad;
                row.common_rate = a.common_rate;
                row.sum_rate = a.sum_rate();
                row.it_durations = std::move(a.it_durations);
                row.eh_durations = std::move(a.eh_durations);
            } catch (const Error& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

enum class RateUnit { nats, bits };

namespace detail {

inline std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string csv_escape(std::string s) {
    for (char& ch : s) {
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace detail

/// Columns: <var>,mode,psi_star,R0,R_sum,tau_1..tau_K,nu_1..nu_K,status.
inline void write_csv(std::ostream& os, const std::vector<ResultRow>& rows, SweepVariable variable,
                      RateUnit unit = RateUnit::nats) {
    if (rows.empty()) throw std::invalid_argument("write_csv: no rows");
    std::size_t k_count = 0;
    for (const auto& r : rows) k_count = std::max(k_count, r.it_durations.size());
    const double rate_scale = unit == RateUnit::bits ? 1.0 / std::numbers::ln2 : 1.0;

    os << column_name(variable) << ",mode,psi_star,R0,R_sum";
    for (std::size_t k = 1; k <= k_count; ++k) os << ",tau_" << k;
    for (std::size_t k = 1; k <= k_count; ++k) os << ",nu_" << k;
    os << ",status\n";

    for (const auto& r : rows) {
        os << detail::format_real(r.value) << ',' << to_string(r.mode) << ','
           << detail::format_real(r.psi_star) << ',' << detail::format_real(r.common_rate * rate_scale)
           << ',' << detail::format_real(r.sum_rate * rate_scale);
        for (std::size_t k = 0; k < k_count; ++k)
            os << ',' << detail::format_real(k < r.it_durations.size() ? r.it_durations[k] : std::nan(""));
        for (std::size_t k = 0; k < k_count; ++k)
            os << ',' << detail::format_real(k < r.eh_durations.size() ? r.eh_durations[k] : std::nan(""));
        os << ',' << (r.ok() ? std::string("ok") : detail::csv_escape(r.error)) << '\n';
    }
}

inline void emit_csv(const std::vector<ResultRow>& rows, SweepVariable variable, const std::string& path,
                     RateUnit unit = RateUnit::nats) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("emit_csv: cannot open '" + path + "' for writing");
    write_csv(out, rows, variable, unit);
    out.flush();
    if (!out) throw Error("emit_csv: write to '" + path + "' failed");
}

}  // namespace irswpcn

#endif  // IRSWPCN_EXPERIMENTS_HPP
