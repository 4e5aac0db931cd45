// Copyright 2026 The rydgraph Authors
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
#include <istream>
#include <set>
#include <sstream>

#include "rydgraph/errors.h"
#include "rydgraph/experiment.h"

namespace rydgraph {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

const std::map<std::string, std::set<std::string>> &known_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"protocol", {"kind"}},
        {"layout", {"n", "rows", "cols", "d", "dd", "dd_target", "lead", "file", "graph", "string"}},
        {"schedule", {"preset", "file", "step", "order"}},
        {"noise", {"eps_l", "eps_m", "eps_damp", "jitter_um"}},
        {"run", {"mode", "shots", "seed", "out"}},
    };
    return keys;
}

}  // namespace

ConfigFile ConfigFile::parse(std::istream &in) {
    ConfigFile cfg;
    std::string raw;
    std::string section;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = raw;
        auto cut = line.find_first_of("#;");
        if (cut != std::string::npos) {
            line.resize(cut);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ParseError("unterminated section header", line_no);
            }
            section = trim(line.substr(1, line.size() - 2));
            if (!known_keys().count(section)) {
                throw ParseError("unknown section [" + section + "]", line_no);
            }
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        if (section.empty()) {
            throw ParseError("key outside of any section", line_no);
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!known_keys().at(section).count(key)) {
            throw ParseError("unknown key '" + key + "' in [" + section + "]", line_no);
        }
        if (cfg.sections_[section].count(key)) {
            throw ParseError("duplicate key '" + key + "'", line_no);
        }
        cfg.sections_[section][key] = {value, line_no};
    }
    return cfg;
}

bool ConfigFile::has(const std::string &section, const std::string &key) const {
    return find(section, key) != nullptr;
}

const ConfigFile::Entry *ConfigFile::find(const std::string &section, const std::string &key) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) {
        return nullptr;
    }
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
}

void ConfigFile::set(const std::string &section, const std::string &key, const std::string &value) {
    sections_[section][key] = {value, 0};
}

std::string ConfigFile::get_string(const std::string &section, const std::string &key, const std::string &fallback) const {
    const Entry *e = find(section, key);
    return e ? e->value : fallback;
}

double ConfigFile::get_double(const std::string &section, const std::string &key, double fallback) const {
    const Entry *e = find(section, key);
    if (!e) {
        return fallback;
    }
    std::istringstream ss(e->value);
    double v;
    std::string rest;
    if (!(ss >> v) || (ss >> rest) || !std::isfinite(v)) {
        throw ParseError(key + ": expected a finite number, got '" + e->value + "'", e->line);
    }
    return v;
}

uint64_t ConfigFile::get_uint(const std::string &section, const std::string &key, uint64_t fallback) const {
    const Entry *e = find(section, key);
    if (!e) {
        return fallback;
    }
    if (e->value.empty() || e->value.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(key + ": expected a non-negative integer, got '" + e->value + "'", e->line);
    }
    try {
        return std::stoull(e->value);
    } catch (const std::exception &) {
        throw ParseError(key + ": integer out of range", e->line);
    }
}

std::vector<double> ConfigFile::get_list(const std::string &section, const std::string &key) const {
    const Entry *e = find(section, key);
    if (!e) {
        return {};
    }
    std::string text = e->value;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ss(text);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) {
                throw std::invalid_argument(tok);
            }
        } catch (const std::exception &) {
            throw ParseError(key + ": bad list entry '" + tok + "'", e->line);
        }
    }
    return out;
}

std::string ConfigFile::canonical() const {
    std::string out;
    for (const auto &[s, keys] : sections_) {
        for (const auto &[k, e] : keys) {
            out += s + "." + k + "=" + e.value + "\n";
        }
    }
    return out;
}

uint64_t ConfigFile::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

const char *experiment_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::cnot:
            return "cnot";
        case ExperimentKind::swap:
            return "swap";
        case ExperimentKind::bell:
            return "bell";
        case ExperimentKind::string:
            return "string";
        case ExperimentKind::stabilizer:
            return "stabilizer";
        default:
            return "teleport";
    }
}

static size_t line_of(const ConfigFile &f, const char *section, const char *key) {
    const auto *e = f.find(section, key);
    return e ? e->line : 0;
}

ExperimentConfig load_experiment(const ConfigFile &f) {
    ExperimentConfig c;
    c.config_hash = f.hash();
    auto fail = [&](const char *section, const char *key, const std::string &msg) -> void {
        throw ParseError(std::string(key) + ": " + msg, line_of(f, section, key));
    };

    std::string kind = f.get_string("protocol", "kind", "teleport");
    static const std::map<std::string, ExperimentKind> kinds = {
        {"teleport", ExperimentKind::teleport}, {"identity", ExperimentKind::teleport},
        {"cnot", ExperimentKind::cnot},         {"swap", ExperimentKind::swap},
        {"bell", ExperimentKind::bell},         {"string", ExperimentKind::string},
        {"stabilizer", ExperimentKind::stabilizer}};
    if (!kinds.count(kind)) {
        fail("protocol", "kind", "unknown experiment '" + kind + "'");
    }
    c.kind = kinds.at(kind);

    c.n = f.get_uint("layout", "n", c.kind == ExperimentKind::bell ? 2 : 3);
    c.rows = f.get_uint("layout", "rows", 0);
    c.cols = f.get_uint("layout", "cols", 0);
    c.d = f.get_double("layout", "d", c.d);
    c.dd = f.get_double("layout", "dd", 0);
    c.dd_target = f.get_double("layout", "dd_target", c.dd);
    c.lead = f.get_uint("layout", "lead", 0);
    c.layout_file = f.get_string("layout", "file", "");
    c.graph_file = f.get_string("layout", "graph", "");
    if (!(c.d > 0)) {
        fail("layout", "d", "spacing must be positive");
    }
    if (c.dd < 0) {
        fail("layout", "dd", "displacement must be non-negative");
    }
    if (c.dd_target < 0) {
        fail("layout", "dd_target", "displacement must be non-negative");
    }
    if ((c.rows == 0) != (c.cols == 0)) {
        fail("layout", c.rows == 0 ? "rows" : "cols", "rows and cols must be given together");
    }
    size_t atoms = c.rows ? c.rows * c.cols : c.n;
    if (atoms < 2 && c.layout_file.empty()) {
        fail("layout", "n", "at least two atoms are required");
    }
    if (atoms > kMaxAtoms && c.layout_file.empty()) {
        fail("layout", c.rows ? "rows" : "n", "register exceeds the " + std::to_string(kMaxAtoms) + "-atom cap");
    }
    if (c.kind == ExperimentKind::teleport && (c.n % 2 == 0 || c.n < 3)) {
        fail("layout", "n", "teleportation needs an odd chain length of at least 3");
    }
    for (const char *key : {"file", "graph"}) {
        std::string path = f.get_string("layout", key, "");
        if (!path.empty() && !std::filesystem::exists(path)) {
            fail("layout", key, "file '" + path + "' does not exist");
        }
    }
    for (double a : f.get_list("layout", "string")) {
        if (a < 1 || a != std::floor(a)) {
            fail("layout", "string", "atom indices are 1-based integers");
        }
        c.string_atoms.push_back(static_cast<size_t>(a) - 1);
    }

    c.schedule_preset = f.get_string("schedule", "preset", c.kind == ExperimentKind::bell ? "bell" : "graph");
    if (c.schedule_preset != "graph" && c.schedule_preset != "bell") {
        fail("schedule", "preset", "preset must be 'graph' or 'bell'");
    }
    c.schedule_file = f.get_string("schedule", "file", "");
    if (!c.schedule_file.empty() && !std::filesystem::exists(c.schedule_file)) {
        fail("schedule", "file", "file '" + c.schedule_file + "' does not exist");
    }
    c.evo.step = f.get_double("schedule", "step", c.evo.step);
    c.evo.order = static_cast<int>(f.get_uint("schedule", "order", 2));
    if (!(c.evo.step > 0)) {
        fail("schedule", "step", "step must be positive");
    }
    if (c.evo.order != 1 && c.evo.order != 2) {
        fail("schedule", "order", "splitting order must be 1 or 2");
    }

    c.noise.eps_l = f.get_double("noise", "eps_l", 0);
    c.noise.eps_m = f.get_double("noise", "eps_m", 0);
    c.noise.eps_damp = f.get_double("noise", "eps_damp", 0);
    c.noise.jitter = f.get_double("noise", "jitter_um", 0);
    if (!(c.noise.eps_l >= 0 && c.noise.eps_l <= 0.5)) {
        fail("noise", "eps_l", "must lie in [0, 0.5]");
    }
    if (!(c.noise.eps_m >= 0 && c.noise.eps_m < 1)) {
        fail("noise", "eps_m", "must lie in [0, 1)");
    }
    if (!(c.noise.eps_damp >= 0 && c.noise.eps_damp <= 1)) {
        fail("noise", "eps_damp", "must lie in [0, 1]");
    }
    if (c.noise.jitter < 0) {
        fail("noise", "jitter_um", "must be non-negative");
    }

    std::string mode = f.get_string("run", "mode", "oracle");
    if (mode != "oracle" && mode != "pulsed") {
        fail("run", "mode", "mode must be 'oracle' or 'pulsed'");
    }
    c.mode = parse_mode(mode);
    c.shots = f.get_uint("run", "shots", c.shots);
    if (c.shots < 1) {
        fail("run", "shots", "at least one shot is required");
    }
    c.seed = f.get_uint("run", "seed", c.seed);
    c.out = f.get_string("run", "out", c.out);
    return c;
}

}  // namespace rydgraph
