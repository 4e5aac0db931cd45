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

#ifndef RYDGRAPH_MITIGATION_H
#define RYDGRAPH_MITIGATION_H

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "rydgraph/shots.h"

namespace rydgraph {

// Sparse outcome -> count map. Outcome indices follow the state-vector
// convention (atom 1 is the most significant bit).
struct CountVector {
    size_t n_atoms = 0;
    std::map<uint64_t, double> counts;

    double total() const;
    double at(uint64_t outcome) const;
};

struct NegativityReport {
    double clipped_mass = 0;  // L1 mass of the negative entries removed
    size_t clipped_entries = 0;
};

// Applies T1 = [[1, eps], [0, 1 - eps]] along every atom axis.
CountVector bias_counts(const CountVector &m, double eps_m);
// Applies the inverse along every axis, clips negatives and rescales to the
// original total.
std::pair<CountVector, NegativityReport> correct_counts(const CountVector &m, double eps_m);

CountVector counts_from_shots(const std::vector<ShotRecord> &shots);

// "bitstring count" per line.
CountVector read_counts(std::istream &in);
void write_counts(std::ostream &out, const CountVector &m);

}  // namespace rydgraph

#endif
