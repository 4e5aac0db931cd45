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

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rydgraph/errors.h"
#include "rydgraph/experiment.h"
#include "rydgraph/observables.h"
#include "rydgraph/pulses.h"

namespace rydgraph {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt(size_t v) {
    return std::to_string(v);
}

// Nearest-neighbour edges of a layout read from file, at the nominal spacing
// with room for input displacement.
GraphSpec neighbour_graph(const AtomLayout &layout) {
    GraphSpec g;
    g.n_vertices = layout.size();
    double reach = layout.spacing + layout.input_displacement;
    for (size_t j = 0; j < layout.size(); j++) {
        for (size_t k = j + 1; k < layout.size(); k++) {
            if (distance(layout.positions[j], layout.positions[k]) <= reach * (1 + 1e-9)) {
                g.edges.push_back({j, k});
            }
        }
    }
    return g;
}

LayoutGraph register_for(const ExperimentConfig &cfg) {
    LayoutGraph lg;
    if (!cfg.layout_file.empty()) {
        std::ifstream in(cfg.layout_file);
        lg.layout = read_layout(in);
        if (!cfg.graph_file.empty()) {
            std::ifstream gin(cfg.graph_file);
            lg.graph = read_graph(gin, lg.layout.size());
        } else {
            lg.graph = neighbour_graph(lg.layout);
        }
        return lg;
    }
    if (cfg.rows) {
        return build_rect(cfg.rows, cfg.cols, cfg.d);
    }
    lg.layout = build_chain(cfg.n, cfg.d, 0);
    lg.graph = chain_graph(cfg.n);
    return lg;
}

std::vector<size_t> default_string(size_t n) {
    std::vector<size_t> out;
    for (size_t a = 0; a < n; a += 2) {
        out.push_back(a);
    }
    return out;
}

// Noisy x-basis shots of a register without feed-forward.
std::vector<ShotRecord> sample_register(
    const std::vector<double> &probs, size_t n, const ExperimentConfig &cfg, Basis tag, uint64_t first_shot = 0,
    const std::vector<Basis> &local = {}) {
    auto idx = sample_indices(probs, cfg.seed, first_shot, cfg.shots);
    std::vector<ShotRecord> out(cfg.shots);
    for (size_t i = 0; i < cfg.shots; i++) {
        auto &r = out[i];
        r.basis = tag;
        r.local_bases = local;
        r.s = index_to_bits(idx[i], n);
        StreamRng fr(cfg.seed, first_shot + i, StreamPurpose::flip);
        apply_x_flip(r.s, cfg.noise.eps_l, fr);
        StreamRng rr(cfg.seed, first_shot + i, StreamPurpose::readout);
        apply_readout_bias(r.s, cfg.noise.eps_m, rr);
    }
    return out;
}

// Graph state in the frame where x is read: oracle state directly, or the
// pulsed state rotated back from the measurement stage.
StateVector graph_frame_state(const LayoutGraph &lg, const ExperimentConfig &cfg) {
    if (cfg.mode == Mode::oracle) {
        return build_ideal_graph_state(lg.graph);
    }
    StateVector s(lg.layout.size());
    evolve(s, graph_schedule(lg.layout.spacing), interaction_matrix(lg.layout), cfg.evo);
    apply_global_rotation(s, std::numbers::pi / 2, std::numbers::pi / 2);
    return s;
}

void reject_jitter(const ExperimentConfig &cfg) {
    if (cfg.noise.jitter > 0) {
        throw std::invalid_argument(std::string("position jitter is only modelled for teleport, cnot and swap runs, not ") +
                                    experiment_name(cfg.kind));
    }
}

StateVector bell_target() {
    StateVector b(2);
    b[0] = 1 / std::sqrt(2.0);
    b[3] = 1 / std::sqrt(2.0);
    return b;
}

PulseSchedule bell_run_schedule(const ExperimentConfig &cfg, double d) {
    if (!cfg.schedule_file.empty()) {
        std::ifstream in(cfg.schedule_file);
        return read_schedule(in);
    }
    return cfg.schedule_preset == "bell" ? bell_schedule(d) : graph_schedule(d);
}

struct BellResult {
    double overlap_sq;
    StateVector state;
};

BellResult bell_state(const ExperimentConfig &cfg, double d) {
    if (cfg.mode == Mode::oracle) {
        return {1.0, bell_target()};
    }
    StateVector s(2);
    evolve(s, bell_run_schedule(cfg, d), interaction_matrix(build_chain(2, d, 0)), cfg.evo);
    return {overlap(s, bell_target()), s};
}

RunReport run_teleport(const ExperimentConfig &cfg) {
    RunReport rep;
    ProtocolSpec p = teleport_protocol(cfg.n, cfg.d, cfg.dd);
    RunOptions opt;
    opt.mode = cfg.mode;
    opt.noise = cfg.noise;
    opt.shots = cfg.shots;
    opt.seed = cfg.seed;
    opt.evo = cfg.evo;
    rep.shots = run_protocol(p, opt);
    auto q = score_shots(rep.shots, {0});
    double gamma = gamma_from_displacement(cfg.d, cfg.dd);
    size_t n_o = (cfg.n + 1) / 2;
    rep.summary = {
        {"Q", fmt(q.value)},
        {"Q_se", fmt(q.std_error)},
        {"kept", fmt(q.n_shots_used)},
        {"total", fmt(q.n_shots_total)},
        {"kept_fraction", fmt(static_cast<double>(q.n_shots_used) / static_cast<double>(q.n_shots_total))},
        {"gamma", fmt(gamma)},
        {"q_ideal", fmt(q_ideal(gamma))},
        {"p_even_n_O", fmt(p_even(static_cast<double>(n_o), cfg.noise.eps_l))},
    };
    return rep;
}

RunReport run_cnot(const ExperimentConfig &cfg) {
    RunReport rep;
    auto t = cnot_truth_table(cfg.d, {cfg.dd, cfg.dd_target}, cfg.mode, cfg.shots, cfg.seed, cfg.noise, cfg.evo, &rep.shots);
    rep.summary = {
        {"joint_accuracy", fmt(t.joint_accuracy)},
        {"bit_accuracy", fmt(t.bit_accuracy)},
        {"kept", fmt(t.kept)},
        {"total", fmt(t.total)},
    };
    const char *labels[4] = {"00", "01", "10", "11"};
    for (size_t in = 0; in < 4; in++) {
        std::string row;
        for (size_t o = 0; o < 4; o++) {
            row += (o ? " " : "") + fmt(t.counts[in][o]);
        }
        rep.summary.push_back({std::string("counts_in_") + labels[in], row});
    }
    return rep;
}

RunReport run_swap(const ExperimentConfig &cfg) {
    RunReport rep;
    auto q = swap_check(cfg.d, cfg.mode, cfg.shots, cfg.seed, cfg.noise, cfg.lead, cfg.evo, &rep.shots);
    rep.summary = {
        {"swap_accuracy", fmt(q.value)},
        {"swap_se", fmt(q.std_error)},
        {"kept", fmt(q.n_shots_used)},
        {"total", fmt(q.n_shots_total)},
    };
    return rep;
}

RunReport run_bell(const ExperimentConfig &cfg) {
    reject_jitter(cfg);
    RunReport rep;
    auto b = bell_state(cfg, cfg.d);
    auto probs = probabilities(b.state, Basis::z);
    ExperimentConfig z = cfg;
    z.noise.eps_l = 0;
    rep.shots = sample_register(probs, 2, z, Basis::z);
    std::vector<double> freq(4, 0.0);
    for (const auto &r : rep.shots) {
        freq[bits_to_index(r.s)] += 1.0 / static_cast<double>(cfg.shots);
    }
    double bc = std::sqrt(0.5 * freq[0]) + std::sqrt(0.5 * freq[3]);
    rep.summary = {
        {"bell_overlap", fmt(b.overlap_sq)},
        {"bell_overlap_amplitude", fmt(std::sqrt(b.overlap_sq))},
        {"p_gg", fmt(probs[0])},
        {"p_rr", fmt(probs[3])},
        {"sampled_gg", fmt(freq[0])},
        {"sampled_rr", fmt(freq[3])},
        {"classical_fidelity", fmt(bc * bc)},
    };
    return rep;
}

RunReport run_string(const ExperimentConfig &cfg) {
    reject_jitter(cfg);
    RunReport rep;
    LayoutGraph lg = register_for(cfg);
    size_t n = lg.layout.size();
    StringSpec str{cfg.string_atoms.empty() ? default_string(n) : cfg.string_atoms};
    str.validate(n);
    auto probs = probabilities(graph_frame_state(lg, cfg), Basis::x);
    rep.shots = sample_register(probs, n, cfg, Basis::x);
    auto est = string_order(rep.shots, str);
    rep.summary = {
        {"theta", fmt(est.value)},
        {"theta_se", fmt(est.std_error)},
        {"string_length", fmt(str.atoms.size())},
        {"theta_exact_noiseless", fmt(string_parity_probability(probs, n, str))},
        {"parity_string", is_parity_string(lg.graph, str) ? "yes" : "no"},
        {"p_even_n", fmt(p_even(static_cast<double>(str.atoms.size()), cfg.noise.eps_l))},
    };
    return rep;
}

RunReport run_stabilizer(const ExperimentConfig &cfg) {
    reject_jitter(cfg);
    RunReport rep;
    LayoutGraph lg = register_for(cfg);
    StateVector s = graph_frame_state(lg, cfg);
    auto centers = stabilizer_centers(lg.graph);
    double acc = 0;
    double var = 0;
    for (size_t k = 0; k < centers.size(); k++) {
        auto bases = stabilizer_bases(lg.graph, centers[k]);
        auto shots = sample_register(probabilities(s, bases), s.n_atoms(), cfg, Basis::x, k * cfg.shots, bases);
        auto est = stabilizer_from_shots(shots, centers[k], lg.graph);
        acc += est.mean;
        var += est.se * est.se;
        rep.shots.insert(rep.shots.end(), shots.begin(), shots.end());
    }
    double m = static_cast<double>(centers.size());
    rep.summary = {
        {"stabilizer_average_exact", fmt(stabilizer_average(s, lg.graph))},
        {"stabilizer_average_shots", fmt(acc / m)},
        {"stabilizer_average_se", fmt(std::sqrt(var) / m)},
        {"centers", fmt(centers.size())},
    };
    return rep;
}

}  // namespace

std::string output_header(const ExperimentConfig &cfg) {
    char buf[160];
    std::snprintf(
        buf, sizeof buf, "# rydgraph %s config=%016llx seed=%llu\n", kVersion,
        static_cast<unsigned long long>(cfg.config_hash), static_cast<unsigned long long>(cfg.seed));
    return buf;
}

RunReport run_experiment(const ExperimentConfig &cfg) {
    switch (cfg.kind) {
        case ExperimentKind::cnot:
            return run_cnot(cfg);
        case ExperimentKind::swap:
            return run_swap(cfg);
        case ExperimentKind::bell:
            return run_bell(cfg);
        case ExperimentKind::string:
            return run_string(cfg);
        case ExperimentKind::stabilizer:
            return run_stabilizer(cfg);
        default:
            return run_teleport(cfg);
    }
}

void write_summary(std::ostream &out, const RunReport &report) {
    for (const auto &[k, v] : report.summary) {
        out << k << "\t" << v << "\n";
    }
}

double displacement_for_gamma(double d, double gamma) {
    double target = std::abs(gamma);
    if (!(target < std::numbers::pi) || !std::isfinite(target)) {
        throw std::invalid_argument("|gamma| must be below pi");
    }
    if (target == 0) {
        return 0;
    }
    // |gamma| rises monotonically from 0 towards pi as the input atom moves out.
    auto f = [&](double dd) { return std::abs(gamma_from_displacement(d, dd)) - target; };
    double hi = d * 0.01;
    while (f(hi) < 0) {
        hi *= 2;
        if (hi > 1e3 * d) {
            throw std::invalid_argument("gamma is not reachable by displacement");
        }
    }
    std::uintmax_t iters = 200;
    auto tol = [](double a, double b) { return std::abs(a - b) < 1e-13; };
    auto r = boost::math::tools::toms748_solve(f, 0.0, hi, tol, iters);
    return (r.first + r.second) / 2;
}

void run_sweep(const ExperimentConfig &cfg, const std::string &variable, const std::vector<double> &values, std::ostream &out) {
    if (values.empty()) {
        throw std::invalid_argument("sweep needs at least one value");
    }
    out << output_header(cfg);
    ExperimentConfig c = cfg;
    if (variable == "n_string") {
        out << "# n\ttheta\tse\tp_even\ttheta_exact\tchain\n";
        for (double v : values) {
            size_t n = static_cast<size_t>(v);
            if (v != std::floor(v) || n < 1 || 2 * n - 1 > kMaxAtoms) {
                throw std::invalid_argument("string lengths must be integers from 1 to 12");
            }
            c.kind = ExperimentKind::string;
            c.rows = c.cols = 0;
            c.layout_file.clear();
            c.n = std::max<size_t>(2 * n - 1, 2);
            c.string_atoms = default_string(2 * n - 1);
            auto rep = run_string(c);
            out << n << "\t" << rep.summary[0].second << "\t" << rep.summary[1].second << "\t"
                << fmt(p_even(v, cfg.noise.eps_l)) << "\t" << rep.summary[3].second << "\t" << c.n << "\n";
        }
        return;
    }
    if (variable == "N_chain") {
        out << "# N\tQ\tse\tn_O\tp_even_n_O\tkept\n";
        for (double v : values) {
            size_t n = static_cast<size_t>(v);
            if (v != std::floor(v) || n < 3 || n % 2 == 0) {
                throw std::invalid_argument("chain lengths must be odd integers >= 3");
            }
            auto q = teleport_Q(n, cfg.d, cfg.dd, cfg.mode, cfg.noise, cfg.shots, cfg.seed, cfg.evo);
            double n_o = static_cast<double>((n + 1) / 2);
            out << n << "\t" << fmt(q.value) << "\t" << fmt(q.std_error) << "\t" << (n + 1) / 2 << "\t"
                << fmt(p_even(n_o, cfg.noise.eps_l)) << "\t" << q.n_shots_used << "\n";
        }
        return;
    }
    if (variable == "gamma") {
        out << "# gamma\tQ\tse\tq_ideal\tdd_um\tkept_fraction\n";
        for (double g : values) {
            double dd = displacement_for_gamma(cfg.d, g);
            auto q = teleport_Q(cfg.n, cfg.d, dd, cfg.mode, cfg.noise, cfg.shots, cfg.seed, cfg.evo);
            out << fmt(g) << "\t" << fmt(q.value) << "\t" << fmt(q.std_error) << "\t" << fmt(q_ideal(g)) << "\t"
                << fmt(dd) << "\t"
                << fmt(static_cast<double>(q.n_shots_used) / static_cast<double>(q.n_shots_total)) << "\n";
        }
        return;
    }
    if (variable == "d") {
        if (cfg.kind == ExperimentKind::bell) {
            out << "# d\toverlap\tse\tcz_time\n";
            for (double d : values) {
                out << fmt(d) << "\t" << fmt(bell_state(cfg, d).overlap_sq) << "\t0\t" << fmt(cz_time(d)) << "\n";
            }
            return;
        }
        out << "# d\tQ\tse\tcz_time\tkept\n";
        for (double d : values) {
            auto q = teleport_Q(cfg.n, d, cfg.dd, cfg.mode, cfg.noise, cfg.shots, cfg.seed, cfg.evo);
            out << fmt(d) << "\t" << fmt(q.value) << "\t" << fmt(q.std_error) << "\t" << fmt(cz_time(d)) << "\t"
                << q.n_shots_used << "\n";
        }
        return;
    }
    throw std::invalid_argument("unknown sweep variable '" + variable + "' (n_string, N_chain, gamma, d)");
}

}  // namespace rydgraph
