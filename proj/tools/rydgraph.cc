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

// Command-line front end: run, sweep, fit, mitigate, domain, layout.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rydgraph/errors.h"
#include "rydgraph/experiment.h"
#include "rydgraph/geometry.h"
#include "rydgraph/mitigation.h"
#include "rydgraph/noise.h"
#include "rydgraph/shots.h"
#include "rydgraph/stats.h"

using namespace rydgraph;

namespace {

struct Overrides {
    std::string config;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> shots;
    std::optional<std::string> out;
    std::optional<double> eps_m;
    std::optional<std::string> mode;
};

void add_overrides(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config, "experiment config file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--shots", o.shots, "shots per point");
    cmd->add_option("--out", o.out, "output path prefix");
    cmd->add_option("--eps-m", o.eps_m, "readout bias");
    cmd->add_option("--mode", o.mode, "oracle or pulsed");
}

ExperimentConfig load(const Overrides &o) {
    std::ifstream in(o.config);
    ConfigFile f = ConfigFile::parse(in);
    if (o.seed) {
        f.set("run", "seed", std::to_string(*o.seed));
    }
    if (o.shots) {
        f.set("run", "shots", std::to_string(*o.shots));
    }
    if (o.out) {
        f.set("run", "out", *o.out);
    }
    if (o.eps_m) {
        std::ostringstream ss;
        ss.precision(17);
        ss << *o.eps_m;
        f.set("noise", "eps_m", ss.str());
    }
    if (o.mode) {
        f.set("run", "mode", *o.mode);
    }
    try {
        return load_experiment(f);
    } catch (const ParseError &e) {
        throw ParseError(o.config + ": " + e.what(), e.line);
    }
}

std::ofstream open_out(const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rydgraph: Rydberg graph-state emulator and benchmark runner"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Overrides run_o;
    auto *run = app.add_subcommand("run", "run one experiment and write shots plus a summary");
    add_overrides(run, run_o);

    Overrides sweep_o;
    std::string sweep_var;
    std::vector<double> sweep_values;
    auto *sweep = app.add_subcommand("sweep", "sweep one variable and write a table");
    add_overrides(sweep, sweep_o);
    sweep->add_option("--var", sweep_var, "n_string, N_chain, gamma or d")->required();
    sweep->add_option("--values", sweep_values, "values to visit")->required();

    std::string fit_table;
    std::string fit_model = "p_even";
    bool fit_chain = false;
    bool fit_unweighted = false;
    std::string fit_out;
    auto *fit = app.add_subcommand("fit", "fit a single error probability to a table");
    fit->add_option("--table", fit_table, "table with 'n value se' columns")->required()->check(CLI::ExistingFile);
    fit->add_option("--model", fit_model, "p_even or trajectory");
    fit->add_flag("--chain", fit_chain, "n column holds chain lengths N; p_even then uses (N+1)/2");
    fit->add_flag("--unweighted", fit_unweighted, "ignore the se column");
    fit->add_option("--out", fit_out, "write the fit summary here");

    std::string counts_path;
    double mit_eps = 0;
    std::string mit_out;
    auto *mitigate = app.add_subcommand("mitigate", "undo readout bias on a count file");
    mitigate->add_option("--counts", counts_path, "'bitstring count' file")->required()->check(CLI::ExistingFile);
    mitigate->add_option("--eps-m", mit_eps, "readout bias")->required();
    mitigate->add_option("--out", mit_out, "write corrected counts here");

    std::string dom_model = "ideal";
    double dom_eps = kThresholdEps;
    double dom_threshold = 2.0 / 3.0;
    auto *domain = app.add_subcommand("domain", "domain size where an order parameter stays above threshold");
    domain->add_option("model", dom_model, "p_even or ideal");
    domain->add_option("eps", dom_eps, "error probability");
    domain->add_option("threshold", dom_threshold, "threshold in (0.5, 1)");

    std::string lay_kind = "chain";
    size_t lay_n = 5, lay_rows = 3, lay_cols = 4, lay_lead = 0;
    double lay_d = 12.3, lay_dd = 0;
    std::string lay_out = "layout";
    auto *layout = app.add_subcommand("layout", "write a built-in layout and its graph");
    layout->add_option("--kind", lay_kind, "chain, rect, cnot or swap");
    layout->add_option("--n", lay_n, "chain length");
    layout->add_option("--rows", lay_rows, "grid rows");
    layout->add_option("--cols", lay_cols, "grid columns");
    layout->add_option("--d", lay_d, "spacing in um");
    layout->add_option("--dd", lay_dd, "input displacement in um");
    layout->add_option("--lead", lay_lead, "extra wire pairs for swap");
    layout->add_option("--out", lay_out, "output prefix (.layout and .graph)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            ExperimentConfig cfg = load(run_o);
            RunReport rep = run_experiment(cfg);
            auto shots = open_out(cfg.out + ".shots");
            shots << output_header(cfg);
            write_shots(shots, rep.shots);
            auto summary = open_out(cfg.out + ".summary");
            summary << output_header(cfg);
            summary << "experiment\t" << experiment_name(cfg.kind) << "\n";
            write_summary(summary, rep);
            std::cout << "experiment\t" << experiment_name(cfg.kind) << "\n";
            write_summary(std::cout, rep);
        } else if (*sweep) {
            ExperimentConfig cfg = load(sweep_o);
            auto out = open_out(cfg.out + ".tsv");
            run_sweep(cfg, sweep_var, sweep_values, out);
            std::cout << "wrote " << cfg.out << ".tsv\n";
        } else if (*fit) {
            std::ifstream in(fit_table);
            auto pts = read_fit_points(in);
            FitModel model = parse_model(fit_model);
            if (fit_chain && model == FitModel::p_even) {
                for (auto &p : pts) {
                    p.n = (p.n + 1) / 2;
                }
            }
            FitResult r = fit_epsilon(pts, model, !fit_unweighted);
            write_fit_result(std::cout, r);
            if (!fit_out.empty()) {
                auto out = open_out(fit_out);
                write_fit_result(out, r);
            }
        } else if (*mitigate) {
            std::ifstream in(counts_path);
            CountVector m = read_counts(in);
            auto [corr, rep] = correct_counts(m, mit_eps);
            std::ostringstream body;
            body << "# rydgraph " << kVersion << " eps_m=" << mit_eps << "\n";
            body << "# clipped_mass " << rep.clipped_mass << " clipped_entries " << rep.clipped_entries << "\n";
            write_counts(body, corr);
            if (mit_out.empty()) {
                std::cout << body.str();
            } else {
                auto out = open_out(mit_out);
                out << body.str();
                std::cout << "clipped_mass\t" << rep.clipped_mass << "\n";
            }
        } else if (*domain) {
            DomainModel model;
            if (dom_model == "ideal") {
                model = DomainModel::ideal;
            } else if (dom_model == "p_even") {
                model = DomainModel::p_even;
            } else {
                throw std::invalid_argument("domain model must be 'ideal' or 'p_even'");
            }
            DomainSize s = domain_size(model, dom_eps, dom_threshold);
            if (s.unbounded) {
                std::cout << "unbounded\n";
            } else {
                std::cout << s.vertices << "\n";
                if (model == DomainModel::p_even) {
                    std::cerr << "n_O " << s.n_o << "\n";
                }
            }
        } else if (*layout) {
            LayoutGraph lg;
            if (lay_kind == "chain") {
                lg.layout = build_chain(lay_n, lay_d, lay_dd);
                lg.graph = chain_graph(lay_n);
            } else if (lay_kind == "rect") {
                lg = build_rect(lay_rows, lay_cols, lay_d);
            } else if (lay_kind == "cnot") {
                lg = build_cnot_layout(lay_d, lay_dd);
            } else if (lay_kind == "swap") {
                lg = build_swap_layout(lay_d, lay_dd, lay_lead);
            } else {
                throw std::invalid_argument("layout kind must be chain, rect, cnot or swap");
            }
            auto lo = open_out(lay_out + ".layout");
            write_layout(lo, lg.layout);
            auto go = open_out(lay_out + ".graph");
            write_graph(go, lg.graph);
            std::cout << "wrote " << lay_out << ".layout and " << lay_out << ".graph (" << lg.layout.size()
                      << " atoms, " << lg.graph.edges.size() << " edges)\n";
        }
    } catch (const std::exception &e) {
        std::cerr << "rydgraph: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
