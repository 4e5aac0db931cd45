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

#ifndef RYDGRAPH_OBSERVABLES_H
#define RYDGRAPH_OBSERVABLES_H

#include <span>
#include <vector>

#include "rydgraph/engine.h"
#include "rydgraph/geometry.h"
#include "rydgraph/shots.h"
#include "rydgraph/stats.h"

namespace rydgraph {

struct OrderEstimate {
    double value = 0;
    double std_error = 0;
    size_t n_shots_used = 0;
    size_t n_shots_total = 0;
};

// Which vertices count as stabilizer centers: every vertex with at least one
// neighbour, or only those of maximal degree.
enum class CenterRule { connected, interior };

double stabilizer_expectation(const StateVector &state, size_t center, const GraphSpec &graph);
std::vector<size_t> stabilizer_centers(const GraphSpec &graph, CenterRule rule = CenterRule::connected);
double stabilizer_average(const StateVector &state, const GraphSpec &graph, CenterRule rule = CenterRule::connected);

// x on the center, z everywhere else.
std::vector<Basis> stabilizer_bases(const GraphSpec &graph, size_t center);
MeanSe stabilizer_from_shots(std::span<const ShotRecord> shots, size_t center, const GraphSpec &graph);

struct StringSpec {
    std::vector<size_t> atoms;

    void validate(size_t n_atoms) const;
};

// True when every vertex sees an even number of string atoms among its
// neighbours, i.e. the x string is a product of stabilizers.
bool is_parity_string(const GraphSpec &graph, const StringSpec &string);
double string_parity_probability(std::span<const double> x_probs, size_t n_atoms, const StringSpec &string);
OrderEstimate string_order(std::span<const ShotRecord> shots, const StringSpec &string);

// Phase picked up by the displaced input edge during the CZ window.
double input_edge_phase(double d, double dd);
double gamma_from_displacement(double d, double dd);
double q_ideal(double gamma);

}  // namespace rydgraph

#endif
