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

#ifndef IRSWPCN_SCENARIO_IO_HPP
#define IRSWPCN_SCENARIO_IO_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "irswpcn/channel_model.hpp"
#include "irswpcn/errors.hpp"
#include "irswpcn/experiments.hpp"

/// \file scenario_io.hpp
/// JSON scenario documents. See README.md for the schema. Omitted fields take
/// the reference settings: P0 = 4 W, N0 = 1e-13 W, lambda = 0.1 m,
/// A = (lambda/4)^2, N = 10^4, q = 1, eta_k = 0.9, BS at (20 m, pi/12).

namespace irswpcn {

struct LoadedScenario {
    Scenario scenario;
    std::vector<std::string> warnings;
};

namespace detail {

using json = nlohmann::json;

class DocReader {
public:
    explicit DocReader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ParseError(source_ + ": field '" + field + "': " + what);
    }

    double real(const json& obj, const std::string& key, const std::string& path, double fallback) const {
        if (!obj.contains(key)) return fallback;
        return real_value(obj.at(key), path + key);
    }

    double real_value(const json& v, const std::string& path) const {
        if (!v.is_number()) fail(path, "expected a number, got " + std::string(v.type_name()));
        return v.get<double>();
    }

    std::size_t count(const json& obj, const std::string& key, const std::string& path,
                      std::size_t fallback) const {
        if (!obj.contains(key)) return fallback;
        const json& v = obj.at(key);
        if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
            return v.get<std::size_t>();
        }
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (d >= 0.0 && d == std::floor(d) && d < 9e15) return static_cast<std::size_t>(d);
        }
        fail(path + key, "expected a nonnegative integer");
    }

    const json& object(const json& obj, const std::string& key, const std::string& path) const {
        const json& v = obj.at(key);
        if (!v.is_object()) fail(path + key, "expected an object, got " + std::string(v.type_name()));
        return v;
    }

    NodePosition node(const json& v, const std::string& path) const {
        if (!v.is_object()) fail(path, "expected an object with distance_m and angle_rad");
        for (const char* key : {"distance_m", "angle_rad"}) {
            if (!v.contains(key)) fail(path + "." + key, "missing");
        }
        return {real_value(v.at("distance_m"), path + ".distance_m"),
                real_value(v.at("angle_rad"), path + ".angle_rad")};
    }

    void unknown_keys(const json& obj, const std::set<std::string>& known, const std::string& path,
                      std::vector<std::string>& warnings) const {
        for (const auto& item : obj.items()) {
            if (!known.count(item.key())) warnings.push_back("ignoring unknown field '" + path + item.key() + "'");
        }
    }

private:
    std::string source_;
};

inline std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace detail

/// Parses and validates a scenario document. `source` names it in errors.
inline LoadedScenario parse_scenario(const std::string& text, const std::string& source = "<scenario>") {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = detail::line_and_column(text, e.byte);
        throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": malformed JSON (" + e.what() + ")");
    }
    const detail::DocReader rd(source);
    if (!doc.is_object()) rd.fail("<root>", "expected a JSON object");

    LoadedScenario out;
    Scenario& s = out.scenario;
    rd.unknown_keys(doc,
                    {"bs", "ehus", "ehu_arc", "irs", "tx_power_w", "noise_power_w", "efficiencies",
                     "efficiency"},
                    "", out.warnings);

    s.bs = {20.0, std::numbers::pi / 12.0};
    if (doc.contains("bs")) s.bs = rd.node(doc.at("bs"), "bs");

    const bool has_list = doc.contains("ehus");
    const bool has_arc = doc.contains("ehu_arc");
    if (has_list == has_arc) rd.fail("ehus", "exactly one of 'ehus' or 'ehu_arc' is required");
    if (has_list) {
        const json& list = doc.at("ehus");
        if (!list.is_array()) rd.fail("ehus", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            s.ehus.push_back(rd.node(list[k], "ehus[" + std::to_string(k) + "]"));
        }
    } else {
        const json& arc = rd.object(doc, "ehu_arc", "");
        rd.unknown_keys(arc, {"count", "radius_m", "angle_min_rad", "angle_max_rad"}, "ehu_arc.", out.warnings);
        const std::size_t count = rd.count(arc, "count", "ehu_arc.", 10);
        const double radius = rd.real(arc, "radius_m", "ehu_arc.", 20.0);
        const double lo = rd.real(arc, "angle_min_rad", "ehu_arc.", std::numbers::pi / 40.0);
        const double hi = rd.real(arc, "angle_max_rad", "ehu_arc.", 19.0 * std::numbers::pi / 40.0);
        try {
            s.ehus = place_ehus_on_arc(count, radius, lo, hi);
        } catch (const DomainError& e) {
            throw ValidationError({std::string("ehu_arc: ") + e.what()});
        }
    }

    if (doc.contains("irs")) {
        const json& irs = rd.object(doc, "irs", "");
        rd.unknown_keys(irs, {"cell_count", "cell_area_m2", "wavelength_m", "pattern_exponent", "kind"},
                        "irs.", out.warnings);
        s.irs.cell_count = rd.count(irs, "cell_count", "irs.", s.irs.cell_count);
        s.irs.wavelength_m = rd.real(irs, "wavelength_m", "irs.", s.irs.wavelength_m);
        const double quarter = s.irs.wavelength_m / 4.0;
        s.irs.cell_area_m2 = rd.real(irs, "cell_area_m2", "irs.", quarter * quarter);
        s.irs.pattern_exponent = rd.real(irs, "pattern_exponent", "irs.", s.irs.pattern_exponent);
        if (irs.contains("kind")) {
            const json& kind = irs.at("kind");
            if (kind == "practical") {
                s.irs.kind = IrsKind::practical;
            } else if (kind == "benchmark") {
                s.irs.kind = IrsKind::benchmark;
            } else {
                rd.fail("irs.kind", "expected \"practical\" or \"benchmark\"");
            }
        }
    }

    s.tx_power_w = rd.real(doc, "tx_power_w", "", s.tx_power_w);
    s.noise_power_w = rd.real(doc, "noise_power_w", "", s.noise_power_w);

    if (doc.contains("efficiencies") && doc.contains("efficiency")) {
        rd.fail("efficiencies", "give either 'efficiencies' or 'efficiency', not both");
    }
    if (doc.contains("efficiencies")) {
        const json& list = doc.at("efficiencies");
        if (!list.is_array()) rd.fail("efficiencies", "expected an array");
        for (std::size_t k = 0; k < list.size(); ++k) {
            s.efficiencies.push_back(rd.real_value(list[k], "efficiencies[" + std::to_string(k) + "]"));
        }
    } else {
        s.efficiencies.assign(s.ehus.size(), rd.real(doc, "efficiency", "", 0.9));
    }

    // EHUs are indexed by increasing angle; reorder (with their efficiencies)
    // when the document lists them otherwise.
    if (s.efficiencies.size() == s.ehus.size() &&
        !std::is_sorted(s.ehus.begin(), s.ehus.end(),
                        [](const NodePosition& a, const NodePosition& b) { return a.angle_rad < b.angle_rad; })) {
        std::vector<std::size_t> order(s.ehus.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return s.ehus[a].angle_rad < s.ehus[b].angle_rad;
        });
        std::vector<NodePosition> ehus;
        std::vector<double> eff;
        for (std::size_t i : order) {
            ehus.push_back(s.ehus[i]);
            eff.push_back(s.efficiencies[i]);
        }
        s.ehus = std::move(ehus);
        s.efficiencies = std::move(eff);
        out.warnings.push_back("EHUs were not ordered by increasing angle; sorted");
    }

    require_valid(s);
    return out;
}

inline LoadedScenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open scenario file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path);
}

}  // namespace irswpcn

#endif  // IRSWPCN_SCENARIO_IO_HPP
