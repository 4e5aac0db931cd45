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

#include "rydgraph/mbqc.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rydgraph/errors.h"
#include "rydgraph/pulses.h"

namespace rydgraph {

const char *protocol_name(ProtocolKind k) {
    switch (k) {
        case ProtocolKind::cnot:
            return "cnot";
        case ProtocolKind::swap:
            return "swap";
        default:
            return "teleport";
    }
}

ProtocolKind parse_protocol(const std::string &s) {
    if (s == "teleport" || s == "identity") {
        return ProtocolKind::teleport;
    }
    if (s == "cnot") {
        return ProtocolKind::cnot;
    }
    if (s == "swap") {
        return ProtocolKind::swap;
    }
    throw std::invalid_argument("unknown protocol '" + s + "'");
}

const char *mode_name(Mode m) {
    return m == Mode::oracle ? "oracle" : "pulsed";
}

Mode parse_mode(const std::string &s) {
    if (s == "oracle") {
        return Mode::oracle;
    }
    if (s == "pulsed") {
        return Mode::pulsed;
    }
    throw std::invalid_argument("unknown mode '" + s + "'");
}

void ProtocolSpec::validate() const {
    layout.validate();
    graph.validate();
    size_t n = layout.size();
    if (graph.n_vertices != n || bases.size() != n) {
        throw std::invalid_argument("protocol layout, graph and bases disagree on the atom count");
    }
    if (flip_sources.size() != outputs.size() || flip_constant.size() != outputs.size()) {
        throw std::invalid_argument("one byproduct rule per output is required");
    }
    for (size_t o : outputs) {
        if (o >= n || layout.roles[o] != Role::output) {
            throw std::invalid_argument("protocol output is not an output atom of the layout");
        }
    }
    for (size_t i : inputs) {
        if (i >= n || layout.roles[i] != Role::input) {
            throw std::invalid_argument("protocol input is not an input atom of the layout");
        }
    }
    for (const auto &src : flip_sources) {
        for (size_t a : src) {
            if (a >= n) {
                throw std::invalid_argument("byproduct source outside the register");
            }
        }
    }
}

static std::vector<size_t> zero_based(std::initializer_list<size_t> one_based, size_t shift = 0) {
    std::vector<size_t> out;
    for (size_t a : one_based) {
        out.push_back(a - 1 + shift);
    }
    return out;
}

ProtocolSpec teleport_protocol(size_t n, double d, double dd) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("teleportation chains need an odd length of at least 3");
    }
    ProtocolSpec p;
    p.kind = ProtocolKind::teleport;
    p.layout = build_chain(n, d, dd);
    p.graph = chain_graph(n);
    p.inputs = {0};
    p.outputs = {n - 1};
    p.bases.assign(n, Basis::x);
    // sigma^z byproducts come from atoms 1, 3, ... (1-based); the displaced
    // encoding drops atom 1, which post-selection fixes to 0 anyway.
    std::vector<size_t> src;
    for (size_t a = dd > 0 ? 2 : 0; a + 1 < n; a += 2) {
        src.push_back(a);
    }
    p.flip_sources = {src};
    p.flip_constant = {0};
    if (dd > 0) {
        p.selected_inputs = {0};
    }
    p.validate();
    return p;
}

ProtocolSpec cnot_protocol(double d, double dd_control, double dd_target) {
    ProtocolSpec p;
    p.kind = ProtocolKind::cnot;
    LayoutGraph lg = build_cnot_layout(d, 0);
    p.layout = lg.layout;
    p.layout.positions[0].x -= dd_control;
    p.layout.positions[8].x -= dd_target;
    p.layout.input_displacement = std::max(dd_control, dd_target);
    p.graph = lg.graph;
    p.inputs = {0, 8};
    p.outputs = {6, 14};
    p.bases.assign(15, Basis::x);
    for (size_t a : zero_based({2, 3, 4, 5, 6, 8, 12})) {
        p.bases[a] = Basis::y;
    }
    // Worked out from the measurement pattern and checked on every branch of
    // the ideal graph state.
    p.flip_sources = {zero_based({1, 3, 4, 5, 8, 9, 11}), zero_based({9, 11, 13})};
    p.flip_constant = {1, 0};
    if (dd_control > 0) {
        p.selected_inputs.push_back(0);
    }
    if (dd_target > 0) {
        p.selected_inputs.push_back(8);
    }
    p.validate();
    return p;
}

ProtocolSpec swap_protocol(double d, double dd, size_t lead) {
    LayoutGraph lg = build_swap_layout(d, dd, lead);
    size_t s = 2 * lead;
    ProtocolSpec p;
    p.kind = ProtocolKind::swap;
    p.layout = lg.layout;
    p.graph = lg.graph;
    size_t n = p.layout.size();
    p.inputs = {0, 10 + s};
    p.outputs = {6 + s, n - 1};
    p.bases.assign(n, Basis::x);
    // Base rule on the 16-atom block, renumbered past the lead atoms.
    std::vector<size_t> zc = zero_based({5, 9}, s);
    for (size_t a : zero_based({11, 13}, 2 * s)) {
        zc.push_back(a);
    }
    std::vector<size_t> zt = zero_based({1, 3, 9}, s);
    zt.push_back(14 - 1 + 2 * s);
    // Lead segments teleport each input onto the block; their sigma^z
    // byproducts travel with the logical qubit to the opposite output.
    for (size_t k = 0; k < lead; k++) {
        zt.push_back(2 * k);
        zc.push_back(10 + s + 2 * k);
    }
    p.flip_sources = {zc, zt};
    p.flip_constant = {0, 0};
    if (dd > 0) {
        p.selected_inputs = p.inputs;
    }
    p.validate();
    return p;
}

Bits byproduct_correct(const Bits &s, const ProtocolSpec &protocol) {
    if (s.size() != protocol.layout.size()) {
        throw std::invalid_argument("outcome length does not match the protocol");
    }
    Bits out(protocol.outputs.size());
    for (size_t k = 0; k < out.size(); k++) {
        uint8_t b = s[protocol.outputs[k]] ^ protocol.flip_constant[k];
        for (size_t a : protocol.flip_sources[k]) {
            b ^= s[a];
        }
        out[k] = b & 1;
    }
    return out;
}

bool post_select(const Bits &s, const ProtocolSpec &protocol) {
    for (size_t a : protocol.selected_inputs) {
        if (s.at(a) != 0) {
            return false;
        }
    }
    return true;
}

GraphSpec encoded_graph(const ProtocolSpec &protocol, const AtomLayout &layout) {
    GraphSpec g = protocol.graph;
    double window = cz_time(protocol.layout.spacing);
    for (auto &e : g.edges) {
        double r = distance(layout.positions[e.a], layout.positions[e.b]);
        e.theta = window * pair_interaction(r);
    }
    return g;
}

StateVector prepare_state(
    const ProtocolSpec &protocol, Mode mode, const std::vector<uint8_t> &logical_ones, const AtomLayout &layout,
    const EvolutionParams &evo) {
    if (!logical_ones.empty() && logical_ones.size() != protocol.inputs.size()) {
        throw std::invalid_argument("one logical input flag per protocol input is required");
    }
    auto flip_inputs = [&](StateVector &s) {
        for (size_t k = 0; k < logical_ones.size(); k++) {
            if (logical_ones[k]) {
                apply_z(s, protocol.inputs[k]);
            }
        }
    };
    if (mode == Mode::oracle) {
        StateVector s = build_ideal_graph_state(encoded_graph(protocol, layout));
        flip_inputs(s);
        return s;
    }
    if (layout.size() > kMaxAtoms) {
        throw CapabilityError("pulsed evolution exceeds the atom cap");
    }
    PulseSchedule full = graph_schedule(protocol.layout.spacing);
    InteractionMatrix v = interaction_matrix(layout);
    StateVector s(layout.size());
    PulseSchedule head{{full.segments.front()}};
    PulseSchedule tail{{full.segments.begin() + 1, full.segments.end()}};
    evolve(s, head, v, evo);
    flip_inputs(s);
    evolve(s, tail, v, evo);
    return s;
}

std::vector<Basis> readout_bases(const ProtocolSpec &protocol, Mode mode) {
    if (mode == Mode::oracle) {
        return protocol.bases;
    }
    // The measurement stage rotates x onto z and leaves y alone.
    std::vector<Basis> out;
    for (Basis b : protocol.bases) {
        if (b == Basis::z) {
            throw std::invalid_argument("pulsed readout of logical z is not supported");
        }
        out.push_back(b == Basis::x ? Basis::z : Basis::y);
    }
    return out;
}

static void tag_bases(ShotRecord &r, const ProtocolSpec &protocol) {
    bool uniform = true;
    for (Basis b : protocol.bases) {
        uniform = uniform && b == protocol.bases[0];
    }
    r.basis = protocol.bases[0];
    if (!uniform) {
        r.local_bases = protocol.bases;
    }
}

std::vector<ShotRecord> run_protocol(const ProtocolSpec &protocol, const RunOptions &opt) {
    protocol.validate();
    opt.noise.validate();
    if (opt.shots == 0) {
        throw std::invalid_argument("at least one shot is required");
    }
    if (opt.noise.eps_damp > 0 && protocol.kind != ProtocolKind::teleport) {
        throw std::invalid_argument("step damping is defined for teleportation chains only");
    }
    size_t n = protocol.layout.size();
    auto readout = readout_bases(protocol, opt.mode);
    std::vector<uint64_t> idx(opt.shots);
    if (opt.noise.jitter > 0) {
        for (size_t i = 0; i < opt.shots; i++) {
            uint64_t shot = opt.first_shot + i;
            StreamRng jr(opt.seed, shot, StreamPurpose::jitter);
            AtomLayout moved = sample_jittered_layout(protocol.layout, opt.noise.jitter, jr);
            auto p = probabilities(prepare_state(protocol, opt.mode, opt.logical_ones, moved, opt.evo), readout);
            idx[i] = sample_indices(p, opt.seed, shot, 1)[0];
        }
    } else {
        auto p = probabilities(prepare_state(protocol, opt.mode, opt.logical_ones, protocol.layout, opt.evo), readout);
        idx = sample_indices(p, opt.seed, opt.first_shot, opt.shots);
    }
    double decay = 1 - std::pow(1 - opt.noise.eps_damp, static_cast<double>(n));
    std::vector<ShotRecord> out(opt.shots);
    for (size_t i = 0; i < opt.shots; i++) {
        uint64_t shot = opt.first_shot + i;
        ShotRecord &r = out[i];
        tag_bases(r, protocol);
        r.s = index_to_bits(idx[i], n);
        StreamRng fr(opt.seed, shot, StreamPurpose::flip);
        apply_x_flip(r.s, opt.noise.eps_l, fr);
        StreamRng rr(opt.seed, shot, StreamPurpose::readout);
        apply_readout_bias(r.s, opt.noise.eps_m, rr);
        r.kept = post_select(r.s, protocol);
        if (!r.kept) {
            continue;
        }
        r.corrected = byproduct_correct(r.s, protocol);
        if (opt.noise.eps_damp > 0) {
            StreamRng dr(opt.seed, shot, StreamPurpose::damping);
            if (dr.bernoulli(decay)) {
                for (auto &b : r.corrected) {
                    b = dr.bernoulli(0.5);
                }
            }
        }
    }
    return out;
}

Bits expected_outputs(const ProtocolSpec &protocol, const std::vector<uint8_t> &logical_ones) {
    auto in = [&](size_t k) -> uint8_t { return k < logical_ones.size() ? logical_ones[k] : 0; };
    switch (protocol.kind) {
        case ProtocolKind::cnot:
            return {static_cast<uint8_t>(in(0) ^ in(1)), in(1)};
        case ProtocolKind::swap:
            return {in(1), in(0)};
        default:
            return {in(0)};
    }
}

OrderEstimate score_shots(const std::vector<ShotRecord> &shots, const Bits &expected) {
    OrderEstimate out;
    out.n_shots_total = shots.size();
    size_t good = 0;
    for (const auto &r : shots) {
        if (!r.kept) {
            continue;
        }
        out.n_shots_used++;
        good += r.corrected == expected;
    }
    if (out.n_shots_used == 0) {
        throw std::runtime_error("post-selection discarded every shot");
    }
    out.value = static_cast<double>(good) / static_cast<double>(out.n_shots_used);
    out.std_error = out.n_shots_used >= 2 ? jackknife_se(good, out.n_shots_used).se : 0.0;
    return out;
}

ExactCheck exact_check(const ProtocolSpec &protocol, const std::vector<uint8_t> &logical_ones) {
    protocol.validate();
    StateVector s = prepare_state(protocol, Mode::oracle, logical_ones, protocol.layout);
    auto p = probabilities(s, protocol.bases);
    Bits want = expected_outputs(protocol, logical_ones);
    size_t n = protocol.layout.size();
    ExactCheck out;
    double good = 0;
    for (uint64_t i = 0; i < p.size(); i++) {
        if (p[i] <= 0) {
            continue;
        }
        Bits bits = index_to_bits(i, n);
        if (!post_select(bits, protocol)) {
            continue;
        }
        out.kept_probability += p[i];
        if (byproduct_correct(bits, protocol) == want) {
            good += p[i];
        }
    }
    out.success_probability = out.kept_probability > 0 ? good / out.kept_probability : 0.0;
    return out;
}

OrderEstimate teleport_Q(
    size_t n, double d, double dd, Mode mode, const NoiseConfig &noise, size_t shots, uint64_t seed,
    const EvolutionParams &evo) {
    ProtocolSpec p = teleport_protocol(n, d, dd);
    RunOptions opt;
    opt.mode = mode;
    opt.noise = noise;
    opt.shots = shots;
    opt.seed = seed;
    opt.evo = evo;
    return score_shots(run_protocol(p, opt), {0});
}

CnotTable cnot_truth_table(
    double d, std::array<double, 2> dd, Mode mode, size_t shots, uint64_t seed, const NoiseConfig &noise,
    const EvolutionParams &evo, std::vector<ShotRecord> *record) {
    ProtocolSpec p = cnot_protocol(d, dd[0], dd[1]);
    CnotTable t;
    size_t joint = 0;
    size_t bits = 0;
    for (size_t in = 0; in < 4; in++) {
        RunOptions opt;
        opt.mode = mode;
        opt.noise = noise;
        opt.shots = shots;
        opt.seed = seed;
        opt.first_shot = in * shots;
        opt.evo = evo;
        opt.logical_ones = {static_cast<uint8_t>(in >> 1), static_cast<uint8_t>(in & 1)};
        Bits want = expected_outputs(p, opt.logical_ones);
        auto run = run_protocol(p, opt);
        for (const auto &r : run) {
            t.total++;
            if (!r.kept) {
                continue;
            }
            t.kept++;
            t.counts[in][2 * r.corrected[0] + r.corrected[1]]++;
            joint += r.corrected == want;
            bits += (r.corrected[0] == want[0]) + (r.corrected[1] == want[1]);
        }
        if (record) {
            record->insert(record->end(), run.begin(), run.end());
        }
    }
    if (t.kept == 0) {
        throw std::runtime_error("post-selection discarded every shot");
    }
    t.joint_accuracy = static_cast<double>(joint) / static_cast<double>(t.kept);
    t.bit_accuracy = static_cast<double>(bits) / static_cast<double>(2 * t.kept);
    return t;
}

OrderEstimate swap_check(
    double d, Mode mode, size_t shots, uint64_t seed, const NoiseConfig &noise, size_t lead,
    const EvolutionParams &evo, std::vector<ShotRecord> *record) {
    ProtocolSpec p = swap_protocol(d, 0, lead);
    std::vector<double> hits;
    size_t total = 0;
    const std::vector<std::vector<uint8_t>> inputs = {{0, 1}, {1, 0}};
    for (size_t k = 0; k < inputs.size(); k++) {
        RunOptions opt;
        opt.mode = mode;
        opt.noise = noise;
        opt.shots = shots;
        opt.seed = seed;
        opt.first_shot = k * shots;
        opt.evo = evo;
        opt.logical_ones = inputs[k];
        Bits want = expected_outputs(p, opt.logical_ones);
        auto run = run_protocol(p, opt);
        for (const auto &r : run) {
            total++;
            if (r.kept) {
                hits.push_back(r.corrected == want ? 1.0 : 0.0);
            }
        }
        if (record) {
            record->insert(record->end(), run.begin(), run.end());
        }
    }
    OrderEstimate out;
    out.n_shots_total = total;
    out.n_shots_used = hits.size();
    if (hits.size() >= 2) {
        auto j = jackknife_se(hits);
        out.value = j.mean;
        out.std_error = j.se;
    } else if (hits.size() == 1) {
        out.value = hits[0];
    } else {
        throw std::runtime_error("post-selection discarded every shot");
    }
    return out;
}

}  // namespace rydgraph
