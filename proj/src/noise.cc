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

#include "rydgraph/noise.h"

#include <cmath>
#include <stdexcept>

namespace rydgraph {

static void check_probability(double p, double hi, bool hi_open, const char *what) {
    bool ok = std::isfinite(p) && p >= 0 && (hi_open ? p < hi : p <= hi);
    if (!ok) {
        throw std::invalid_argument(std::string(what) + " is outside its allowed range");
    }
}

void NoiseConfig::validate() const {
    check_probability(eps_l, 0.5, false, "eps_l");
    check_probability(eps_m, 1.0, true, "eps_m");
    check_probability(eps_damp, 1.0, false, "eps_damp");
    if (!std::isfinite(jitter) || jitter < 0) {
        throw std::invalid_argument("jitter must be finite and non-negative");
    }
}

void apply_x_flip(Bits &s, double eps_l, StreamRng &rng) {
    if (eps_l <= 0) {
        return;
    }
    for (auto &b : s) {
        if (rng.bernoulli(eps_l)) {
            b ^= 1;
        }
    }
}

void apply_readout_bias(Bits &s, double eps_m, StreamRng &rng) {
    if (eps_m <= 0) {
        return;
    }
    for (auto &b : s) {
        if (b && rng.bernoulli(eps_m)) {
            b = 0;
        }
    }
}

double p_even(double n, double eps_l) {
    if (!(n >= 0)) {
        throw std::invalid_argument("string length must be non-negative");
    }
    check_probability(eps_l, 0.5, false, "eps_l");
    return 0.5 * (1 + std::pow(1 - 2 * eps_l, n));
}

double trajectory_fidelity(double n, double eps) {
    if (!(n >= 0) || !(eps >= 0) || !std::isfinite(eps)) {
        throw std::invalid_argument("trajectory model needs n >= 0 and eps >= 0");
    }
    return 0.5 * (1 + std::exp(-eps * n));
}

DomainSize domain_size(DomainModel model, double eps, double threshold) {
    if (!(threshold > 0.5 && threshold < 1)) {
        throw std::invalid_argument("threshold must lie in (0.5, 1)");
    }
    if (!(eps >= 0) || !std::isfinite(eps)) {
        throw std::invalid_argument("error probability must be finite and non-negative");
    }
    DomainSize out;
    if (eps == 0) {
        out.unbounded = true;
        return out;
    }
    if (model == DomainModel::ideal) {
        // 1/2 (1 + e^{-eps N}) stays above threshold for N < -ln(2t - 1)/eps.
        out.vertices = static_cast<size_t>(std::floor(-std::log(2 * threshold - 1) / eps));
        return out;
    }
    if (eps >= 0.5) {
        out.n_o = 1;
        out.vertices = 1;
        return out;
    }
    size_t n = 1;
    while (p_even(static_cast<double>(n), eps) >= threshold) {
        n++;
    }
    out.n_o = n;
    out.vertices = 2 * n - 1;
    return out;
}

double jitter_shift(double d, double dd) {
    if (!(d > 0) || !(dd >= 0)) {
        throw std::invalid_argument("jitter shift needs d > 0 and dd >= 0");
    }
    return 36 * kC6 * dd / std::pow(d, 7);
}

AtomLayout sample_jittered_layout(const AtomLayout &layout, double dd, StreamRng &rng) {
    AtomLayout out = layout;
    if (dd <= 0) {
        return out;
    }
    for (auto &p : out.positions) {
        p.x += rng.normal(dd);
        p.y += rng.normal(dd);
    }
    return out;
}

}  // namespace rydgraph
