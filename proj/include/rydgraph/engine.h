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

#ifndef RYDGRAPH_ENGINE_H
#define RYDGRAPH_ENGINE_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rydgraph/geometry.h"
#include "rydgraph/pulses.h"
#include "rydgraph/rng.h"

namespace rydgraph {

using Amp = std::complex<double>;
using Mat2 = std::array<Amp, 4>;  // row-major
using Bits = std::vector<uint8_t>;

enum class Basis { x, y, z };

const char *basis_name(Basis b);
Basis parse_basis(const std::string &s);

// Basis index: atom 0 is the most significant bit, bit 0 = |g>, bit 1 = |r>.
class StateVector {
   public:
    explicit StateVector(size_t n_atoms);
    static StateVector from_amplitudes(size_t n_atoms, std::vector<Amp> amps);

    size_t n_atoms() const {
        return n_;
    }
    size_t dim() const {
        return amps_.size();
    }
    uint64_t mask(size_t atom) const {
        return uint64_t{1} << (n_ - 1 - atom);
    }
    std::vector<Amp> &amplitudes() {
        return amps_;
    }
    const std::vector<Amp> &amplitudes() const {
        return amps_;
    }
    Amp &operator[](size_t i) {
        return amps_[i];
    }
    const Amp &operator[](size_t i) const {
        return amps_[i];
    }
    double norm() const;
    void normalize();

   private:
    size_t n_;
    std::vector<Amp> amps_;
};

StateVector init_ground(size_t n_atoms);

Mat2 rotation_matrix(double phi, double angle);
Mat2 measurement_frame(Basis b);  // rows are the eigenvectors (s=0, s=1), conjugated

void apply_single(StateVector &state, size_t atom, const Mat2 &u);
void apply_all(StateVector &state, const Mat2 &u);
void apply_global_rotation(StateVector &state, double phi, double angle);
void apply_cp(StateVector &state, size_t j, size_t k, double theta);
void apply_z(StateVector &state, size_t atom);

struct EvolutionParams {
    double step = 1e-3;  // us
    int order = 2;
};

void evolve(StateVector &state, const PulseSchedule &schedule, const InteractionMatrix &v, const EvolutionParams &params = {});

StateVector build_ideal_graph_state(const GraphSpec &graph);

Amp inner(const StateVector &a, const StateVector &b);
double overlap(const StateVector &a, const StateVector &b);

std::vector<double> probabilities(const StateVector &state, Basis basis);
std::vector<double> probabilities(const StateVector &state, std::span<const Basis> per_atom);

Bits index_to_bits(uint64_t index, size_t n);
uint64_t bits_to_index(const Bits &bits);

Bits measure_all(const StateVector &state, Basis basis, StreamRng &rng);

// Draws shots first_shot .. first_shot+count-1. Shot i uses the uniform from
// StreamRng(seed, i); a single sorted sweep covers all shots.
std::vector<uint64_t> sample_indices(std::span<const double> probs, uint64_t seed, uint64_t first_shot, size_t count);

std::pair<StateVector, double> project(const StateVector &state, size_t atom, Basis basis, int outcome);

// Distance of the pulsed state from the instantaneous pi/2 rotation:
// sqrt(1 - |<ideal|full>|^2) after a square prep pulse of width dt.
double prep_error_norm(const InteractionMatrix &v, double dt, const EvolutionParams &params = {});
double prep_error_norm(size_t n, double d, double dt);

}  // namespace rydgraph

#endif
