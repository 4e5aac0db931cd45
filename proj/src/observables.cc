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

#include "rydgraph/observables.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rydgraph {

double stabilizer_expectation(const StateVector &state, size_t center, const GraphSpec &graph) {
    if (center >= graph.n_vertices || graph.n_vertices != state.n_atoms()) {
        throw std::invalid_argument("stabilizer center or graph does not match the state");
    }
    uint64_t flip = state.mask(center);
    uint64_t zmask = 0;
    for (size_t j : graph.neighbors(center)) {
        zmask |= state.mask(j);
    }
    double t = 0;
    for (uint64_t b = 0; b < state.dim(); b++) {
        double sign = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
        t += sign * (std::conj(state[b ^ flip]) * state[b]).real();
    }
    return t;
}

std::vector<size_t> stabilizer_centers(const GraphSpec &graph, CenterRule rule) {
    size_t top = 0;
    for (size_t v = 0; v < graph.n_vertices; v++) {
        top = std::max(top, graph.degree(v));
    }
    std::vector<size_t> out;
    for (size_t v = 0; v < graph.n_vertices; v++) {
        size_t deg = graph.degree(v);
        if (deg > 0 && (rule == CenterRule::connected || deg == top)) {
            out.push_back(v);
        }
    }
    return out;
}

double stabilizer_average(const StateVector &state, const GraphSpec &graph, CenterRule rule) {
    auto centers = stabilizer_centers(graph, rule);
    if (centers.empty()) {
        throw std::invalid_argument("graph has no stabilizer center with a neighbour");
    }
    double t = 0;
    for (size_t c : centers) {
        t += stabilizer_expectation(state, c, graph);
    }
    return t / static_cast<double>(centers.size());
}

std::vector<Basis> stabilizer_bases(const GraphSpec &graph, size_t center) {
    std::vector<Basis> out(graph.n_vertices, Basis::z);
    out.at(center) = Basis::x;
    return out;
}

MeanSe stabilizer_from_shots(std::span<const ShotRecord> shots, size_t center, const GraphSpec &graph) {
    auto nb = graph.neighbors(center);
    std::vector<double> values;
    values.reserve(shots.size());
    for (const auto &r : shots) {
        if (r.s.size() != graph.n_vertices || r.basis_of(center) != Basis::x) {
            throw std::invalid_argument("stabilizer shots need x on the center");
        }
        int parity = r.s[center];
        for (size_t j : nb) {
            if (r.basis_of(j) != Basis::z) {
                throw std::invalid_argument("stabilizer shots need z on the neighbours");
            }
            parity ^= r.s[j];
        }
        values.push_back(parity ? -1.0 : 1.0);
    }
    return jackknife_se(values);
}

void StringSpec::validate(size_t n_atoms) const {
    if (atoms.empty()) {
        throw std::invalid_argument("string needs at least one atom");
    }
    auto sorted = atoms;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("string atoms must be distinct");
    }
    if (sorted.back() >= n_atoms) {
        throw std::invalid_argument("string atom outside the register");
    }
}

bool is_parity_string(const GraphSpec &graph, const StringSpec &string) {
    string.validate(graph.n_vertices);
    std::vector<int> in(graph.n_vertices, 0);
    for (size_t a : string.atoms) {
        in[a] = 1;
    }
    for (size_t v = 0; v < graph.n_vertices; v++) {
        int count = 0;
        for (size_t j : graph.neighbors(v)) {
            count += in[j];
        }
        if (count % 2) {
            return false;
        }
    }
    return true;
}

double string_parity_probability(std::span<const double> x_probs, size_t n_atoms, const StringSpec &string) {
    string.validate(n_atoms);
    if (x_probs.size() != (size_t{1} << n_atoms)) {
        throw std::invalid_argument("probability vector does not match the register");
    }
    uint64_t m = 0;
    for (size_t a : string.atoms) {
        m |= uint64_t{1} << (n_atoms - 1 - a);
    }
    double t = 0;
    for (uint64_t b = 0; b < x_probs.size(); b++) {
        if ((std::popcount(b & m) & 1) == 0) {
            t += x_probs[b];
        }
    }
    return t;
}

OrderEstimate string_order(std::span<const ShotRecord> shots, const StringSpec &string) {
    if (shots.empty()) {
        throw std::invalid_argument("string order needs at least one shot");
    }
    size_t even = 0;
    size_t used = 0;
    for (const auto &r : shots) {
        string.validate(r.s.size());
        if (!r.kept) {
            continue;
        }
        int parity = 0;
        for (size_t a : string.atoms) {
            if (r.basis_of(a) != Basis::x) {
                throw std::invalid_argument("string order needs x-basis outcomes on the string");
            }
            parity ^= r.s[a];
        }
        used++;
        even += parity == 0;
    }
    if (used == 0) {
        throw std::invalid_argument("no kept shots for the string order");
    }
    OrderEstimate out;
    out.n_shots_total = shots.size();
    out.n_shots_used = used;
    out.value = static_cast<double>(even) / static_cast<double>(used);
    out.std_error = used >= 2 ? jackknife_se(even, used).se : 0.0;
    return out;
}

double input_edge_phase(double d, double dd) {
    return cz_time(d) * pair_interaction(d + dd);
}

double gamma_from_displacement(double d, double dd) {
    if (!(dd >= 0) || !std::isfinite(dd)) {
        throw std::invalid_argument("displacement must be finite and non-negative");
    }
    if (dd == 0) {
        return 0;
    }
    // Excess phase on the input edge relative to a clean CZ.
    double alpha = input_edge_phase(d, dd) - std::numbers::pi;
    if (std::abs(std::cos(alpha / 2)) < 1e-12) {
        double critical = d * std::pow(0.5, 1.0 / 6.0) - d;
        throw std::domain_error(
            "encoding angle sits on a tangent pole (critical displacement " + std::to_string(critical) + " um)");
    }
    return 2 * std::atan(std::sqrt(2.0) * std::tan(alpha / 2));
}

double q_ideal(double gamma) {
    return (3 + std::cos(gamma)) / 4;
}

}  // namespace rydgraph
