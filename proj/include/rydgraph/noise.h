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

#ifndef RYDGRAPH_NOISE_H
#define RYDGRAPH_NOISE_H

#include <cstddef>

#include "rydgraph/engine.h"
#include "rydgraph/geometry.h"
#include "rydgraph/rng.h"

namespace rydgraph {

// Fault-tolerance error threshold quoted for Rydberg platforms.
inline constexpr double kThresholdEps = 0.0075;

struct NoiseConfig {
    double eps_l = 0;     // independent flip of each x outcome
    double eps_m = 0;     // |r> read as |g>
    double eps_damp = 0;  // per teleport step decay
    double jitter = 0;    // um, per coordinate

    void validate() const;
};

void apply_x_flip(Bits &s, double eps_l, StreamRng &rng);
void apply_readout_bias(Bits &s, double eps_m, StreamRng &rng);

// Probability that an even number of n independent flips occurred.
double p_even(double n, double eps_l);
// Fidelity after n damped teleport steps.
double trajectory_fidelity(double n, double eps);

enum class DomainModel { p_even, ideal };

struct DomainSize {
    bool unbounded = false;
    size_t n_o = 0;       // p_even model only
    size_t vertices = 0;
};

DomainSize domain_size(DomainModel model, double eps, double threshold);

double jitter_shift(double d, double dd);
AtomLayout sample_jittered_layout(const AtomLayout &layout, double dd, StreamRng &rng);

}  // namespace rydgraph

#endif
