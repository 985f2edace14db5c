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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

using namespace irswpcn;
using fixtures::kPi;
using fixtures::rel_err;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("irswpcn_" + name)).string();
}

double variance(const std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / (v.size() - 1);
}

TEST(PlaceEhusOnArc, ReferenceSpacing) {
    const auto e = place_ehus_on_arc(10, 20.0, kPi / 40.0, 19.0 * kPi / 40.0);
    ASSERT_EQ(e.size(), 10u);
    EXPECT_DOUBLE_EQ(e.front().angle_rad, kPi / 40.0);
    EXPECT_DOUBLE_EQ(e.back().angle_rad, 19.0 * kPi / 40.0);
    for (std::size_t k = 1; k < e.size(); ++k) {
        EXPECT_NEAR(e[k].angle_rad - e[k - 1].angle_rad, kPi / 20.0, 1e-15);
        EXPECT_EQ(e[k].distance_m, 20.0);
    }
}

TEST(PlaceEhusOnArc, OneAndTwoUsers) {
    const auto one = place_ehus_on_arc(1, 5.0, 0.2, 0.6);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_DOUBLE_EQ(one[0].angle_rad, 0.4);
    const auto two = place_ehus_on_arc(2, 5.0, 0.2, 0.6);
    EXPECT_EQ(two[0].angle_rad, 0.2);
    EXPECT_EQ(two[1].angle_rad, 0.6);
}

TEST(PlaceEhusOnArc, RejectsBadRanges) {
    EXPECT_THROW(place_ehus_on_arc(0, 20.0, 0.1, 0.2), DomainError);
    EXPECT_THROW(place_ehus_on_arc(3, 20.0, 0.3, 0.2), DomainError);
    EXPECT_THROW(place_ehus_on_arc(3, 20.0, 0.0, 0.2), DomainError);
    EXPECT_THROW(place_ehus_on_arc(3, 20.0, 0.1, kHalfPi), DomainError);
    EXPECT_THROW(place_ehus_on_arc(3, -1.0, 0.1, 0.2), DomainError);
}

TEST(ParseScenario, MinimalFileGetsReferenceDefaults) {
    const LoadedScenario l = parse_scenario(R"({"ehus": [{"distance_m": 20, "angle_rad": 0.5},
                                                          {"distance_m": 30, "angle_rad": 0.9}]})");
    const Scenario& s = l.scenario;
    EXPECT_TRUE(l.warnings.empty());
    EXPECT_EQ(s.tx_power_w, 4.0);
    EXPECT_EQ(s.noise_power_w, 1e-13);
    EXPECT_EQ(s.irs.wavelength_m, 0.1);
    EXPECT_DOUBLE_EQ(s.irs.cell_area_m2, 0.025 * 0.025);
    EXPECT_EQ(s.irs.cell_count, 10000u);
    EXPECT_EQ(s.irs.pattern_exponent, 1.0);
    EXPECT_EQ(s.irs.kind, IrsKind::practical);
    EXPECT_EQ(s.efficiencies, (std::vector<double>{0.9, 0.9}));
    EXPECT_EQ(s.bs.distance_m, 20.0);
    EXPECT_DOUBLE_EQ(s.bs.angle_rad, kPi / 12.0);
}

TEST(ParseScenario, ArcAndOverrides) {
    const LoadedScenario l = parse_scenario(R"({
        "bs": {"distance_m": 40, "angle_rad": 0.3},
        "ehu_arc": {"count": 4, "radius_m": 15},
        "irs": {"cell_count": 2500, "wavelength_m": 0.05, "kind": "benchmark", "pattern_exponent": 3},
        "tx_power_w": 2, "efficiencies": [0.5, 0.6, 0.7, 0.8]})");
    const Scenario& s = l.scenario;
    EXPECT_EQ(s.user_count(), 4u);
    EXPECT_EQ(s.ehus[0].distance_m, 15.0);
    EXPECT_DOUBLE_EQ(s.ehus[0].angle_rad, kPi / 40.0);
    EXPECT_EQ(s.irs.kind, IrsKind::benchmark);
    EXPECT_DOUBLE_EQ(s.irs.cell_area_m2, 0.0125 * 0.0125);
    EXPECT_EQ(s.irs.pattern_exponent, 3.0);
    EXPECT_EQ(s.efficiencies[3], 0.8);
    EXPECT_EQ(s.tx_power_w, 2.0);
}

TEST(ParseScenario, AngleOutsideQuadrantIsRejected) {
    EXPECT_THROW(parse_scenario(R"({"ehus": [{"distance_m": 20, "angle_rad": 1.6}]})"), ValidationError);
}

TEST(ParseScenario, UnorderedEhusAreSortedWithWarning) {
    const LoadedScenario l = parse_scenario(R"({"ehus": [{"distance_m": 10, "angle_rad": 0.9},
                                                          {"distance_m": 20, "angle_rad": 0.3}],
                                                "efficiencies": [0.4, 0.8]})");
    ASSERT_EQ(l.warnings.size(), 1u);
    EXPECT_EQ(l.scenario.ehus[0].angle_rad, 0.3);
    EXPECT_EQ(l.scenario.ehus[0].distance_m, 20.0);
    EXPECT_EQ(l.scenario.efficiencies, (std::vector<double>{0.8, 0.4}));
}

TEST(ParseScenario, DiagnosticsNameLineAndField) {
    try {
        parse_scenario("{\n  \"ehus\": [\n    {\"distance_m\": 20,, }\n  ]\n}", "bad.json");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.json:3:"), std::string::npos) << e.what();
    }
    try {
        parse_scenario(R"({"ehus": [{"distance_m": "far", "angle_rad": 0.2}]})");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("ehus[0].distance_m"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_scenario(R"({"bs": {"distance_m": 20, "angle_rad": 0.2}})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"ehus": [{"distance_m": 20}]})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"ehu_arc": {}, "irs": {"kind": "magic"}})"), ParseError);
    EXPECT_THROW(parse_scenario(R"({"ehu_arc": {}, "irs": {"cell_count": -4}})"), ParseError);
    EXPECT_THROW(load_scenario(temp_path("does_not_exist.json")), ParseError);
}

TEST(ParseScenario, UnknownFieldsWarn) {
    const LoadedScenario l = parse_scenario(R"({"ehu_arc": {"count": 2}, "colour": "red"})");
    ASSERT_EQ(l.warnings.size(), 1u);
    EXPECT_NE(l.warnings[0].find("colour"), std::string::npos);
}

TEST(ParseScenario, LoadFromFile) {
    const std::string path = temp_path("scenario.json");
    std::ofstream(path) << R"({"ehu_arc": {"count": 3}})";
    EXPECT_EQ(load_scenario(path).scenario.user_count(), 3u);
    std::filesystem::remove(path);
}

TEST(RunSweep, RowOrderAndInvariants) {
    const Scenario s = fixtures::reference_scenario();
    SweepSpec spec;
    spec.variable = SweepVariable::cell_count;
    spec.values = {1e3, 1e4, 1e5};
    const auto rows = run_sweep(s, spec);
    ASSERT_EQ(rows.size(), 9u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ResultRow& r = rows[i];
        ASSERT_TRUE(r.ok()) << r.error;
        EXPECT_EQ(r.value, spec.values[i / 3]);
        EXPECT_EQ(r.mode, spec.modes[i % 3]);
        EXPECT_EQ(r.sum_rate, 10.0 * r.common_rate);
        const double used = std::accumulate(r.it_durations.begin(), r.it_durations.end(), 0.0) +
                            std::accumulate(r.eh_durations.begin(), r.eh_durations.end(), 0.0);
        EXPECT_NEAR(used, 1.0, 1e-9);
    }
    for (std::size_t v = 0; v < 3; ++v) {
        EXPECT_GE(rows[3 * v].sum_rate, rows[3 * v + 1].sum_rate);  // optimal >= zero tilt
        EXPECT_EQ(rows[3 * v + 1].psi_star, 0.0);
        EXPECT_EQ(rows[3 * v + 2].psi_star, 0.0);  // benchmark tie-break
    }
}

TEST(RunSweep, FailingRowsAreRecorded) {
    const Scenario s = fixtures::reference_scenario(3);
    SweepSpec spec;
    spec.variable = SweepVariable::bs_angle;
    spec.values = {0.5, 1.6};
    spec.modes = {SweepMode::zero_tilt};
    const auto rows = run_sweep(s, spec);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_TRUE(rows[0].ok());
    EXPECT_FALSE(rows[1].ok());
    EXPECT_TRUE(std::isnan(rows[1].common_rate));
}

TEST(RunSweep, SpecValidation) {
    const Scenario s = fixtures::reference_scenario(2);
    SweepSpec spec;
    EXPECT_THROW(run_sweep(s, spec), ValidationError);
    spec.values = {20.0, 10.0};
    spec.variable = SweepVariable::bs_distance;
    EXPECT_THROW(run_sweep(s, spec), ValidationError);
    spec.values = {100.5};
    spec.variable = SweepVariable::cell_count;
    EXPECT_THROW(run_sweep(s, spec), ValidationError);
    spec.values = {100.0};
    spec.modes.clear();
    EXPECT_THROW(run_sweep(s, spec), ValidationError);
}

TEST(RunSweep, TiltEqualizesItDurations) {
    const Scenario s = fixtures::reference_scenario();
    const Allocation zero = allocate(s, 0.0);
    const Allocation best = optimize_tilt(s).allocation;
    EXPECT_LT(variance(best.it_durations), variance(zero.it_durations));
}

TEST(EmitCsv, SchemaAndSingleRow) {
    const Scenario s = fixtures::reference_scenario(2);
    SweepSpec spec;
    spec.values = {1e4};
    spec.modes = {SweepMode::optimal_tilt};
    const auto rows = run_sweep(s, spec);
    const std::string path = temp_path("one.csv");
    emit_csv(rows, spec.variable, path);
    const std::string text = slurp(path);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
    EXPECT_EQ(text.rfind("N,mode,psi_star,R0,R_sum,tau_1,tau_2,nu_1,nu_2,status\n", 0), 0u);
    EXPECT_NE(text.find(",optimal_tilt,"), std::string::npos);
    EXPECT_NE(text.find(",ok\n"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(EmitCsv, DeterministicAndFullPrecision) {
    const Scenario s = fixtures::reference_scenario();
    SweepSpec spec;
    spec.variable = SweepVariable::bs_distance;
    spec.values = {10.0, 20.0, 30.0};
    const std::string a = temp_path("a.csv");
    const std::string b = temp_path("b.csv");
    emit_csv(run_sweep(s, spec), spec.variable, a);
    emit_csv(run_sweep(s, spec), spec.variable, b);
    EXPECT_EQ(slurp(a), slurp(b));

    // Parse back R0 of the first row: 17 significant digits survive.
    std::istringstream in(slurp(a));
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    EXPECT_EQ(header.substr(0, 3), "d0,");
    const auto rows = run_sweep(s, spec);
    EXPECT_EQ(std::stod(cells[3]), rows[0].common_rate);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(EmitCsv, BitsAndErrors) {
    const Scenario s = fixtures::reference_scenario(2);
    SweepSpec spec;
    spec.values = {1e4};
    spec.modes = {SweepMode::zero_tilt};
    const auto rows = run_sweep(s, spec);
    std::ostringstream nats, bits;
    write_csv(nats, rows, spec.variable, RateUnit::nats);
    write_csv(bits, rows, spec.variable, RateUnit::bits);
    auto r0_of = [](const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        std::getline(in, line);
        std::stringstream ls(line);
        std::string c;
        for (int i = 0; i < 4; ++i) std::getline(ls, c, ',');
        return std::stod(c);
    };
    EXPECT_LE(rel_err(r0_of(bits.str()), r0_of(nats.str()) / std::log(2.0)), 1e-15);
    EXPECT_THROW(emit_csv({}, spec.variable, temp_path("empty.csv")), std::invalid_argument);
    EXPECT_THROW(emit_csv(rows, spec.variable, "/nonexistent-dir/x.csv"), Error);
}

}  // namespace
