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

// Command-line front end: allocate, tilt, sweep, verify, validate-array.
//
// Exit codes: 0 success, 1 other error, 2 malformed or invalid input,
// 3 infeasible scenario, 4 verification mismatch.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "irswpcn.hpp"

namespace {

using nlohmann::ordered_json;
using namespace irswpcn;

constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitMismatch = 4;

Scenario load(const std::string& path) {
    LoadedScenario loaded = load_scenario(path);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
    const Scenario& s = loaded.scenario;
    if (!far_field_valid(s.irs, s.bs.distance_m)) {
        std::cerr << "warning: surface area " << s.irs.total_area()
                  << " m^2 exceeds 9 d0^2; the far-field gain model is not accurate here\n";
    }
    return std::move(loaded.scenario);
}

double rate_scale(bool bits) { return bits ? 1.0 / std::numbers::ln2 : 1.0; }

ordered_json allocation_json(const Scenario& s, const Allocation& a, bool bits) {
    const double scale = rate_scale(bits);
    ordered_json out;
    out["tilt_rad"] = a.tilt_rad;
    out["rate_unit"] = bits ? "bits/frame" : "nats/frame";
    out["common_rate"] = a.common_rate * scale;
    out["sum_rate"] = a.sum_rate() * scale;
    out["time_used"] = a.time_used();
    ordered_json users = ordered_json::array();
    for (std::size_t k = 0; k < a.user_count(); ++k) {
        users.push_back({{"index", k + 1},
                         {"distance_m", s.ehus[k].distance_m},
                         {"angle_rad", s.ehus[k].angle_rad},
                         {"snr_coeff", a.snr_coeffs[k]},
                         {"eh_duration", a.eh_durations[k]},
                         {"it_duration", a.it_durations[k]},
                         {"rate", a.rates[k] * scale},
                         {"energy_j", a.energies[k]}});
    }
    out["users"] = std::move(users);
    return out;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

SweepVariable parse_variable(const std::string& name) {
    static const std::map<std::string, SweepVariable> names{
        {"N", SweepVariable::cell_count},        {"cell_count", SweepVariable::cell_count},
        {"d0", SweepVariable::bs_distance},      {"bs_distance", SweepVariable::bs_distance},
        {"alpha0", SweepVariable::bs_angle},     {"bs_angle", SweepVariable::bs_angle}};
    return names.at(name);
}

SweepMode parse_mode(const std::string& name) {
    static const std::map<std::string, SweepMode> names{
        {"optimal_tilt", SweepMode::optimal_tilt}, {"optimal", SweepMode::optimal_tilt},
        {"zero_tilt", SweepMode::zero_tilt},       {"zero", SweepMode::zero_tilt},
        {"benchmark", SweepMode::benchmark}};
    auto it = names.find(name);
    if (it == names.end()) throw ValidationError({"unknown mode '" + name + "'"});
    return it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Max-min fair time allocation and mechanical tilt for IRS-assisted WPCNs"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::optional<double> tilt;
    bool bits = false;
    TiltSearchConfig search;

    auto* cmd_alloc = app.add_subcommand("allocate", "Closed-form allocation at a fixed tilt (default 0)");
    cmd_alloc->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmd_alloc->add_option("--tilt", tilt, "Tilt in radians");
    cmd_alloc->add_flag("--bits", bits, "Report rates in bits instead of nats");

    auto* cmd_tilt = app.add_subcommand("tilt", "Optimal tilt and the allocation it yields");
    cmd_tilt->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmd_tilt->add_option("--grid-points", search.grid_points, "Coarse grid size")->check(CLI::Range(3, 10000000));
    cmd_tilt->add_option("--tolerance", search.refine_tolerance_rad, "Refinement tolerance (rad)")
        ->check(CLI::PositiveNumber);
    cmd_tilt->add_flag("--bits", bits, "Report rates in bits instead of nats");

    std::string var_name;
    std::vector<double> values;
    std::vector<std::string> mode_names{"optimal_tilt", "zero_tilt", "benchmark"};
    std::string csv_path;
    auto* cmd_sweep = app.add_subcommand("sweep", "Parameter sweep written as CSV");
    cmd_sweep->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmd_sweep->add_option("--var", var_name, "Swept quantity")
        ->required()
        ->check(CLI::IsMember({"N", "d0", "alpha0", "cell_count", "bs_distance", "bs_angle"}));
    cmd_sweep->add_option("--values", values, "Comma-separated values")->required()->delimiter(',');
    cmd_sweep->add_option("--modes", mode_names, "Comma-separated modes: optimal_tilt, zero_tilt, benchmark")
        ->delimiter(',');
    cmd_sweep->add_option("-o,--output", csv_path, "Output CSV path")->required();
    cmd_sweep->add_option("--grid-points", search.grid_points, "Coarse tilt grid size")->check(CLI::Range(3, 10000000));
    cmd_sweep->add_flag("--bits", bits, "Write rates in bits instead of nats");

    auto* cmd_verify = app.add_subcommand("verify", "Closed form versus brute-force oracle");
    cmd_verify->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmd_verify->add_option("--tilt", tilt, "Tilt in radians (default: optimal tilt)");

    auto* cmd_array = app.add_subcommand("validate-array", "Element-level array gain versus far-field formula");
    cmd_array->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    cmd_array->add_option("--tilt", tilt, "Tilt in radians (default 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        const Scenario s = load(scenario_path);

        if (*cmd_alloc) {
            print(allocation_json(s, allocate(s, tilt.value_or(0.0)), bits));
        } else if (*cmd_tilt) {
            const TiltOptimum opt = optimize_tilt(s, search);
            const TiltBounds b = tilt_bounds(s);
            ordered_json out;
            out["tilt_lower_rad"] = b.lower();
            out["tilt_upper_rad"] = b.upper();
            out["psi_star_rad"] = opt.tilt_rad;
            out["zero_tilt_common_rate"] = allocate(s, 0.0).common_rate * rate_scale(bits);
            out["allocation"] = allocation_json(s, opt.allocation, bits);
            print(out);
        } else if (*cmd_sweep) {
            SweepSpec spec;
            spec.variable = parse_variable(var_name);
            spec.values = values;
            spec.modes.clear();
            for (const auto& m : mode_names) spec.modes.push_back(parse_mode(m));
            const auto rows = run_sweep(s, spec, search);
            emit_csv(rows, spec.variable, csv_path, bits ? RateUnit::bits : RateUnit::nats);
            std::size_t failed = 0;
            for (const auto& r : rows) {
                if (!r.ok()) {
                    ++failed;
                    std::cerr << "warning: " << column_name(spec.variable) << "=" << r.value << " "
                              << to_string(r.mode) << ": " << r.error << '\n';
                }
            }
            std::cerr << "wrote " << rows.size() << " rows to " << csv_path << " (" << failed
                      << " failed)\n";
        } else if (*cmd_verify) {
            const double at = tilt ? *tilt : optimize_tilt(s).tilt_rad;
            const Allocation a = allocate(s, at);
            const OracleResult oracle = oracle_common_rate(a.snr_coeffs);
            const double rate_err = std::abs(a.common_rate - oracle.common_rate) / a.common_rate;
            double worst_ratio_err = 0.0;
            ordered_json users = ordered_json::array();
            for (std::size_t k = 0; k < a.user_count(); ++k) {
                const double closed_ratio = a.snr_coeffs[k] * a.eh_durations[k] / a.it_durations[k];
                const double err = std::abs(oracle.users[k].ratio - closed_ratio) / closed_ratio;
                worst_ratio_err = std::max(worst_ratio_err, err);
                users.push_back({{"index", k + 1},
                                 {"snr_coeff", a.snr_coeffs[k]},
                                 {"closed_form_ratio", closed_ratio},
                                 {"oracle_ratio", oracle.users[k].ratio},
                                 {"relative_error", err}});
            }
            const bool pass = rate_err <= 1e-6 && worst_ratio_err <= 1e-4;
            ordered_json out;
            out["tilt_rad"] = at;
            out["closed_form_common_rate"] = a.common_rate;
            out["oracle_common_rate"] = oracle.common_rate;
            out["common_rate_relative_error"] = rate_err;
            out["max_ratio_relative_error"] = worst_ratio_err;
            out["pass"] = pass;
            out["users"] = std::move(users);
            print(out);
            if (!pass) return kExitMismatch;
        } else if (*cmd_array) {
            const double at = tilt.value_or(0.0);
            ordered_json out;
            out["tilt_rad"] = at;
            out["cell_count"] = s.irs.cell_count;
            out["far_field_valid"] = far_field_valid(s.irs, s.bs.distance_m);
            ordered_json users = ordered_json::array();
            for (std::size_t k = 0; k < s.user_count(); ++k) {
                const ArrayCheck c = check_array(s, k, at);
                users.push_back({{"index", k + 1},
                                 {"exact_gain", c.exact_gain},
                                 {"far_field_gain", c.far_field_gain},
                                 {"relative_error", c.relative_error},
                                 {"imag_ratio", c.imag_ratio}});
            }
            out["users"] = std::move(users);
            print(out);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return EXIT_SUCCESS;
}
