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

#include "rydgraph/mitigation.h"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rydgraph/errors.h"

namespace rydgraph {

double CountVector::total() const {
    double t = 0;
    for (const auto &[k, v] : counts) {
        t += v;
    }
    return t;
}

double CountVector::at(uint64_t outcome) const {
    auto it = counts.find(outcome);
    return it == counts.end() ? 0.0 : it->second;
}

// new[.0.] = a*old[.0.] + b*old[.1.], new[.1.] = c*old[.1.] for one axis.
static CountVector apply_axis(const CountVector &m, size_t atom, double b, double c) {
    uint64_t bit = uint64_t{1} << (m.n_atoms - 1 - atom);
    CountVector out;
    out.n_atoms = m.n_atoms;
    for (const auto &[k, v] : m.counts) {
        if (k & bit) {
            if (b != 0) {
                out.counts[k ^ bit] += b * v;
            }
            out.counts[k] += c * v;
        } else {
            out.counts[k] += v;
        }
    }
    return out;
}

static void check_eps(double eps_m) {
    if (!(eps_m >= 0 && eps_m < 1)) {
        throw std::invalid_argument("readout bias must lie in [0, 1)");
    }
}

CountVector bias_counts(const CountVector &m, double eps_m) {
    check_eps(eps_m);
    CountVector out = m;
    if (eps_m == 0) {
        return out;
    }
    for (size_t q = 0; q < m.n_atoms; q++) {
        out = apply_axis(out, q, eps_m, 1 - eps_m);
    }
    return out;
}

std::pair<CountVector, NegativityReport> correct_counts(const CountVector &m, double eps_m) {
    check_eps(eps_m);
    CountVector out = m;
    NegativityReport rep;
    if (eps_m == 0) {
        return {out, rep};
    }
    for (size_t q = 0; q < m.n_atoms; q++) {
        out = apply_axis(out, q, -eps_m / (1 - eps_m), 1 / (1 - eps_m));
    }
    double target = m.total();
    double kept = 0;
    for (auto &[k, v] : out.counts) {
        if (v < 0) {
            rep.clipped_mass += -v;
            rep.clipped_entries++;
            v = 0;
        }
        kept += v;
    }
    if (rep.clipped_entries > 0 && kept > 0) {
        for (auto &[k, v] : out.counts) {
            v *= target / kept;
        }
    }
    return {out, rep};
}

CountVector counts_from_shots(const std::vector<ShotRecord> &shots) {
    CountVector out;
    if (shots.empty()) {
        return out;
    }
    out.n_atoms = shots[0].s.size();
    for (const auto &r : shots) {
        if (r.s.size() != out.n_atoms) {
            throw std::invalid_argument("shots have inconsistent lengths");
        }
        out.counts[bits_to_index(r.s)] += 1;
    }
    return out;
}

CountVector read_counts(std::istream &in) {
    CountVector out;
    std::string line;
    size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string bits;
        double count;
        if (!(ss >> bits)) {
            continue;
        }
        if (!(ss >> count) || !(count >= 0)) {
            throw ParseError("expected 'bitstring count' with a non-negative count", line_no);
        }
        if (first) {
            out.n_atoms = bits.size();
            first = false;
        } else if (bits.size() != out.n_atoms) {
            throw ParseError("bit string length differs from earlier lines", line_no);
        }
        if (out.n_atoms > 63) {
            throw ParseError("bit strings longer than 63 are not supported", line_no);
        }
        uint64_t k = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw ParseError("bad bit string '" + bits + "'", line_no);
            }
            k = (k << 1) | static_cast<uint64_t>(c - '0');
        }
        out.counts[k] += count;
    }
    return out;
}

void write_counts(std::ostream &out, const CountVector &m) {
    auto old = out.precision(12);
    for (const auto &[k, v] : m.counts) {
        for (size_t q = 0; q < m.n_atoms; q++) {
            out << ((k >> (m.n_atoms - 1 - q)) & 1);
        }
        out << " " << v << "\n";
    }
    out.precision(old);
}

}  // namespace rydgraph
