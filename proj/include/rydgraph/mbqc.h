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

#ifndef RYDGRAPH_MBQC_H
#define RYDGRAPH_MBQC_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rydgraph/engine.h"
#include "rydgraph/geometry.h"
#include "rydgraph/noise.h"
#include "rydgraph/observables.h"
#include "rydgraph/shots.h"

namespace rydgraph {

enum class ProtocolKind { teleport, cnot, swap };
enum class Mode { oracle, pulsed };

const char *protocol_name(ProtocolKind k);
ProtocolKind parse_protocol(const std::string &s);
const char *mode_name(Mode m);
Mode parse_mode(const std::string &s);

struct ProtocolSpec {
    ProtocolKind kind = ProtocolKind::teleport;
    AtomLayout layout;
    GraphSpec graph;
    std::vector<size_t> inputs;
    std::vector<size_t> outputs;
    std::vector<Basis> bases;  // logical measurement basis of each atom
    // Output k is corrected by the parity of s over flip_sources[k], plus
    // flip_constant[k].
    std::vector<std::vector<size_t>> flip_sources;
    std::vector<uint8_t> flip_constant;
    // Inputs whose outcome must be 0 for a shot to be kept.
    std::vector<size_t> selected_inputs;

    void validate() const;
};

ProtocolSpec teleport_protocol(size_t n, double d, double dd);
ProtocolSpec cnot_protocol(double d, double dd_control, double dd_target);
ProtocolSpec swap_protocol(double d, double dd = 0, size_t lead = 0);

Bits byproduct_correct(const Bits &s, const ProtocolSpec &protocol);
bool post_select(const Bits &s, const ProtocolSpec &protocol);

// Edge phases set by the actual atom positions during a cz_time(d) window.
GraphSpec encoded_graph(const ProtocolSpec &protocol, const AtomLayout &layout);

// State just before readout, in the frame where the logical bases apply.
// Pulsed states come out of the measurement stage, so their x atoms are read
// in z. `logical_ones` flips input k to |-> when set.
StateVector prepare_state(
    const ProtocolSpec &protocol, Mode mode, const std::vector<uint8_t> &logical_ones, const AtomLayout &layout,
    const EvolutionParams &evo = {});
std::vector<Basis> readout_bases(const ProtocolSpec &protocol, Mode mode);

struct RunOptions {
    Mode mode = Mode::oracle;
    NoiseConfig noise;
    size_t shots = 1000;
    uint64_t seed = 1;
    uint64_t first_shot = 0;
    EvolutionParams evo;
    std::vector<uint8_t> logical_ones;  // per input, empty means all |+>
};

std::vector<ShotRecord> run_protocol(const ProtocolSpec &protocol, const RunOptions &opt);

// The corrected outputs a perfect run produces for the given logical inputs.
Bits expected_outputs(const ProtocolSpec &protocol, const std::vector<uint8_t> &logical_ones);

// Fraction of kept shots whose corrected outputs equal `expected`.
OrderEstimate score_shots(const std::vector<ShotRecord> &shots, const Bits &expected);

// Exhaustive sum over all outcome branches of the noiseless oracle state.
struct ExactCheck {
    double kept_probability = 0;
    double success_probability = 0;  // conditional on being kept
};
ExactCheck exact_check(const ProtocolSpec &protocol, const std::vector<uint8_t> &logical_ones);

OrderEstimate teleport_Q(
    size_t n, double d, double dd, Mode mode, const NoiseConfig &noise, size_t shots, uint64_t seed,
    const EvolutionParams &evo = {});

struct CnotTable {
    // counts[input][output], both indexed as 2*control + target.
    std::array<std::array<size_t, 4>, 4> counts{};
    size_t kept = 0;
    size_t total = 0;
    double joint_accuracy = 0;
    double bit_accuracy = 0;
};

// `record`, when given, receives every shot in input order.
CnotTable cnot_truth_table(
    double d, std::array<double, 2> dd, Mode mode, size_t shots, uint64_t seed, const NoiseConfig &noise = {},
    const EvolutionParams &evo = {}, std::vector<ShotRecord> *record = nullptr);

// Runs `shots` per distinguishable input pair (01 and 10) and scores the
// exchanged outputs.
OrderEstimate swap_check(
    double d, Mode mode, size_t shots, uint64_t seed, const NoiseConfig &noise = {}, size_t lead = 0,
    const EvolutionParams &evo = {}, std::vector<ShotRecord> *record = nullptr);

}  // namespace rydgraph

#endif
