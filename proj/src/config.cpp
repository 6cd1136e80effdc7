// SPDX-FileCopyrightText: Copyright (c) 2026 gdma-lab contributors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace gdma {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        require(!item.empty(), errc::config_invalid, "empty list entry");
        out.push_back(item);
    }
    return out;
}

uint64_t parse_u64(const std::string& key, const std::string& v) {
    uint64_t out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    require(ec == std::errc() && p == v.data() + v.size(), errc::config_invalid,
            "key \"" + key + "\": expected a non-negative integer, got \"" + v + "\"");
    return out;
}

double parse_f64(const std::string& key, const std::string& v) {
    if (v == "inf" || v == "+inf") return INFINITY;
    try {
        size_t used = 0;
        double out = std::stod(v, &used);
        require(used == v.size(), errc::config_invalid,
                "key \"" + key + "\": trailing junk in \"" + v + "\"");
        return out;
    } catch (const std::exception&) {
        fail(errc::config_invalid, "key \"" + key + "\": expected a number, got \"" + v + "\"");
    }
}

} // namespace

SimulationSpec parse_simulation_spec(std::string_view text) {
    SimulationSpec spec;
    spec.modes.clear();
    spec.modulations.clear();

    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        require(eq != std::string::npos, errc::config_invalid,
                "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        require(!key.empty() && !value.empty(), errc::config_invalid,
                "line " + std::to_string(lineno) + ": empty key or value");

        if (key == "transform") {
            if (value == "ffft")
                spec.link.transform = TransformKind::ffft;
            else if (value == "ffht")
                spec.link.transform = TransformKind::ffht;
            else if (value == "none")
                spec.link.transform = TransformKind::none;
            else
                fail(errc::config_invalid, "transform must be ffft, ffht or none");
        } else if (key == "p") {
            spec.link.p = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "m") {
            spec.link.m = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "poly") {
            spec.link.poly.clear();
            for (const std::string& c : split_list(value))
                spec.link.poly.push_back(static_cast<uint32_t>(parse_u64(key, c)));
            std::reverse(spec.link.poly.begin(), spec.link.poly.end()); // to constant-first
        } else if (key == "q") {
            spec.link.q = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "n_users") {
            spec.link.n_users = static_cast<uint32_t>(parse_u64(key, value));
        } else if (key == "modes") {
            for (const std::string& mstr : split_list(value)) {
                if (mstr == "FS")
                    spec.modes.push_back(SpectrumMode::full);
                else if (mstr == "CC")
                    spec.modes.push_back(SpectrumMode::compressed);
                else
                    fail(errc::config_invalid, "mode must be FS or CC, got \"" + mstr + "\"");
            }
        } else if (key == "modulations") {
            for (const std::string& mstr : split_list(value))
                spec.modulations.push_back(modulation_from_name(mstr));
        } else if (key == "code") {
            spec.link.code = value;
        } else if (key == "energy") {
            if (value == "per_info_bit")
                spec.link.energy = EnergyConvention::per_info_bit;
            else if (value == "per_channel_bit")
                spec.link.energy = EnergyConvention::per_channel_bit;
            else
                fail(errc::config_invalid, "energy must be per_info_bit or per_channel_bit");
        } else if (key == "symbol_duration") {
            spec.link.symbol_duration = parse_f64(key, value);
            require(spec.link.symbol_duration > 0, errc::config_invalid,
                    "symbol_duration must be positive");
        } else if (key == "ebn0_db") {
            spec.ebn0_points_db.clear();
            for (const std::string& c : split_list(value))
                spec.ebn0_points_db.push_back(parse_f64(key, c));
        } else if (key == "min_bits") {
            spec.stop.min_bits = parse_u64(key, value);
        } else if (key == "min_errors") {
            spec.stop.min_errors = parse_u64(key, value);
        } else if (key == "max_bits") {
            spec.stop.max_bits = parse_u64(key, value);
        } else if (key == "master_seed") {
            spec.master_seed = parse_u64(key, value);
        } else if (key == "workers") {
            spec.workers = static_cast<uint32_t>(parse_u64(key, value));
        } else {
            fail(errc::config_invalid,
                 "line " + std::to_string(lineno) + ": unknown key \"" + key + "\"");
        }
    }

    if (spec.modes.empty()) spec.modes.push_back(spec.link.mode);
    if (spec.modulations.empty()) spec.modulations.push_back(spec.link.modulation);
    validate(spec);
    return spec;
}

} // namespace gdma
