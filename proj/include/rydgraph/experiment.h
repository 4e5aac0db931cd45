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

#ifndef RYDGRAPH_EXPERIMENT_H
#define RYDGRAPH_EXPERIMENT_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rydgraph/engine.h"
#include "rydgraph/mbqc.h"
#include "rydgraph/noise.h"

namespace rydgraph {

inline constexpr const char *kVersion = "0.3.0";

// Sectioned "key = value" text. Every entry remembers its line so later
// validation can point at it.
class ConfigFile {
   public:
    struct Entry {
        std::string value;
        size_t line = 0;
    };

    static ConfigFile parse(std::istream &in);

    bool has(const std::string &section, const std::string &key) const;
    const Entry *find(const std::string &section, const std::string &key) const;
    void set(const std::string &section, const std::string &key, const std::string &value);

    std::string get_string(const std::string &section, const std::string &key, const std::string &fallback) const;
    double get_double(const std::string &section, const std::string &key, double fallback) const;
    uint64_t get_uint(const std::string &section, const std::string &key, uint64_t fallback) const;
    std::vector<double> get_list(const std::string &section, const std::string &key) const;

    // Sorted "section.key=value" lines; the hash is FNV-1a over this text.
    std::string canonical() const;
    uint64_t hash() const;

   private:
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

enum class ExperimentKind { teleport, cnot, swap, bell, string, stabilizer };

const char *experiment_name(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::teleport;
    // layout
    size_t n = 3;
    size_t rows = 0;
    size_t cols = 0;
    double d = 12.3;
    double dd = 0;
    double dd_target = 0;
    size_t lead = 0;
    std::string layout_file;
    std::string graph_file;
    std::vector<size_t> string_atoms;  // 0-based
    // schedule
    std::string schedule_preset = "graph";
    std::string schedule_file;
    EvolutionParams evo;
    // noise and run
    NoiseConfig noise;
    Mode mode = Mode::oracle;
    size_t shots = 1000;
    uint64_t seed = 1;
    std::string out = "rydgraph_out";
    uint64_t config_hash = 0;
};

// Throws ParseError naming the offending line.
ExperimentConfig load_experiment(const ConfigFile &file);

std::string output_header(const ExperimentConfig &cfg);

struct RunReport {
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<ShotRecord> shots;
};

RunReport run_experiment(const ExperimentConfig &cfg);
void write_summary(std::ostream &out, const RunReport &report);

// Tab-separated table with one row per value. The first three columns are
// always "x value se" so the table feeds straight into a fit.
void run_sweep(const ExperimentConfig &cfg, const std::string &variable, const std::vector<double> &values, std::ostream &out);

double displacement_for_gamma(double d, double gamma);

}  // namespace rydgraph

#endif
