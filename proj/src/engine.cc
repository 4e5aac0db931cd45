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

#include "rydgraph/engine.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rydgraph/errors.h"

namespace rydgraph {

using std::numbers::pi;

const char *basis_name(Basis b) {
    switch (b) {
        case Basis::x:
            return "x";
        case Basis::y:
            return "y";
        default:
            return "z";
    }
}

Basis parse_basis(const std::string &s) {
    if (s == "x") {
        return Basis::x;
    }
    if (s == "y") {
        return Basis::y;
    }
    if (s == "z") {
        return Basis::z;
    }
    throw std::invalid_argument("unknown basis '" + s + "'");
}

static void check_size(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("state needs at least one atom");
    }
    if (n > kMaxAtoms) {
        throw CapabilityError(
            std::to_string(n) + " atoms exceed the " + std::to_string(kMaxAtoms) + "-atom state-vector cap");
    }
}

StateVector::StateVector(size_t n_atoms) : n_(n_atoms) {
    check_size(n_atoms);
    amps_.assign(size_t{1} << n_atoms, Amp{0, 0});
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(size_t n_atoms, std::vector<Amp> amps) {
    check_size(n_atoms);
    if (amps.size() != (size_t{1} << n_atoms)) {
        throw std::invalid_argument("amplitude count does not match 2^n");
    }
    StateVector s(1);
    s.n_ = n_atoms;
    s.amps_ = std::move(amps);
    return s;
}

double StateVector::norm() const {
    double t = 0;
    for (const auto &a : amps_) {
        t += std::norm(a);
    }
    return std::sqrt(t);
}

void StateVector::normalize() {
    double nrm = norm();
    if (!(nrm > 0) || !std::isfinite(nrm)) {
        throw IntegrationError("state has zero or non-finite norm");
    }
    for (auto &a : amps_) {
        a /= nrm;
    }
}

StateVector init_ground(size_t n_atoms) {
    return StateVector(n_atoms);
}

Mat2 rotation_matrix(double phi, double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    Amp mi{0, -1};
    return {Amp{c, 0}, mi * s * std::polar(1.0, -phi), mi * s * std::polar(1.0, phi), Amp{c, 0}};
}

Mat2 measurement_frame(Basis b) {
    const double r = 1 / std::sqrt(2.0);
    switch (b) {
        case Basis::x:
            return {Amp{r, 0}, Amp{r, 0}, Amp{r, 0}, Amp{-r, 0}};
        case Basis::y:
            // s = 0 <-> (|g> + i|r>)/sqrt2
            return {Amp{r, 0}, Amp{0, -r}, Amp{r, 0}, Amp{0, r}};
        default:
            return {Amp{1, 0}, Amp{0, 0}, Amp{0, 0}, Amp{1, 0}};
    }
}

static Mat2 adjoint(const Mat2 &u) {
    return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
}

void apply_single(StateVector &state, size_t atom, const Mat2 &u) {
    if (atom >= state.n_atoms()) {
        throw std::invalid_argument("atom index out of range");
    }
    auto &a = state.amplitudes();
    uint64_t m = state.mask(atom);
    for (uint64_t i = 0; i < a.size(); i++) {
        if (i & m) {
            continue;
        }
        Amp x0 = a[i];
        Amp x1 = a[i | m];
        a[i] = u[0] * x0 + u[1] * x1;
        a[i | m] = u[2] * x0 + u[3] * x1;
    }
}

void apply_all(StateVector &state, const Mat2 &u) {
    for (size_t q = 0; q < state.n_atoms(); q++) {
        apply_single(state, q, u);
    }
}

void apply_global_rotation(StateVector &state, double phi, double angle) {
    if (angle == 0) {
        return;
    }
    apply_all(state, rotation_matrix(phi, angle));
}

void apply_cp(StateVector &state, size_t j, size_t k, double theta) {
    if (j >= state.n_atoms() || k >= state.n_atoms() || j == k) {
        throw std::invalid_argument("controlled phase needs two distinct valid atoms");
    }
    uint64_t both = state.mask(j) | state.mask(k);
    Amp f = std::polar(1.0, -theta);
    auto &a = state.amplitudes();
    for (uint64_t i = 0; i < a.size(); i++) {
        if ((i & both) == both) {
            a[i] *= f;
        }
    }
}

void apply_z(StateVector &state, size_t atom) {
    if (atom >= state.n_atoms()) {
        throw std::invalid_argument("atom index out of range");
    }
    uint64_t m = state.mask(atom);
    auto &a = state.amplitudes();
    for (uint64_t i = 0; i < a.size(); i++) {
        if (i & m) {
            a[i] = -a[i];
        }
    }
}

// E(b) = sum_{j<k} v_jk b_j b_k, filled by peeling the lowest set bit.
static std::vector<double> interaction_energies(const InteractionMatrix &v) {
    size_t n = v.size();
    std::vector<double> e(size_t{1} << n, 0.0);
    for (uint64_t b = 1; b < e.size(); b++) {
        int low = std::countr_zero(b);
        uint64_t rest = b & (b - 1);
        size_t atom = n - 1 - low;
        double add = 0;
        for (uint64_t r = rest; r; r &= r - 1) {
            add += v(atom, n - 1 - std::countr_zero(r));
        }
        e[b] = e[rest] + add;
    }
    return e;
}

static void apply_phases(StateVector &state, const std::vector<double> &energy, double h) {
    auto &a = state.amplitudes();
    for (size_t i = 0; i < a.size(); i++) {
        if (energy[i] != 0) {
            a[i] *= std::polar(1.0, -energy[i] * h);
        }
    }
}

static void check_finite(const StateVector &state) {
    for (const auto &x : state.amplitudes()) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
            throw IntegrationError("time evolution produced non-finite amplitudes");
        }
    }
}

void evolve(StateVector &state, const PulseSchedule &schedule, const InteractionMatrix &v, const EvolutionParams &params) {
    schedule.validate();
    if (v.size() != state.n_atoms()) {
        throw std::invalid_argument("interaction matrix and state have different atom counts");
    }
    if (!(params.step > 0) || (params.order != 1 && params.order != 2)) {
        throw std::invalid_argument("evolution needs a positive step and splitting order 1 or 2");
    }
    auto energy = interaction_energies(v);
    for (const auto &seg : schedule.segments) {
        if (seg.duration == 0) {
            continue;
        }
        if (seg.peak_rabi == 0) {
            apply_phases(state, energy, seg.duration);
            check_finite(state);
            continue;
        }
        size_t steps = static_cast<size_t>(std::ceil(seg.duration / params.step - 1e-9));
        steps = std::max<size_t>(steps, 1);
        // An even count puts a step edge on the triangle peak, where the
        // midpoint rule is exact for each linear flank.
        if (seg.shape == Shape::triangle && steps % 2) {
            steps++;
        }
        double h = seg.duration / static_cast<double>(steps);
        std::vector<Amp> phase(energy.size());
        for (size_t i = 0; i < energy.size(); i++) {
            phase[i] = std::polar(1.0, -energy[i] * h);
        }
        auto kick = [&](double angle) {
            if (angle != 0) {
                apply_all(state, rotation_matrix(seg.phase, angle));
            }
        };
        auto drift = [&]() {
            auto &a = state.amplitudes();
            for (size_t i = 0; i < a.size(); i++) {
                a[i] *= phase[i];
            }
        };
        if (params.order == 1) {
            for (size_t s = 0; s < steps; s++) {
                kick(seg.omega_at((s + 0.5) * h) * h);
                drift();
            }
        } else {
            // Rotations within a segment share one axis, so adjacent half
            // kicks merge into one.
            double carry = 0;
            for (size_t s = 0; s < steps; s++) {
                double a = seg.omega_at((s + 0.5) * h) * h;
                kick(carry + a / 2);
                drift();
                carry = a / 2;
            }
            kick(carry);
        }
        check_finite(state);
    }
}

StateVector build_ideal_graph_state(const GraphSpec &graph) {
    graph.validate();
    StateVector s(graph.n_vertices);
    double amp = 1 / std::sqrt(static_cast<double>(s.dim()));
    std::fill(s.amplitudes().begin(), s.amplitudes().end(), Amp{amp, 0});
    for (const auto &e : graph.edges) {
        apply_cp(s, e.a, e.b, e.theta);
    }
    return s;
}

Amp inner(const StateVector &a, const StateVector &b) {
    if (a.n_atoms() != b.n_atoms()) {
        throw std::invalid_argument("states have different atom counts");
    }
    Amp t{0, 0};
    for (size_t i = 0; i < a.dim(); i++) {
        t += std::conj(a[i]) * b[i];
    }
    return t;
}

double overlap(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

std::vector<double> probabilities(const StateVector &state, Basis basis) {
    std::vector<Basis> all(state.n_atoms(), basis);
    return probabilities(state, all);
}

std::vector<double> probabilities(const StateVector &state, std::span<const Basis> per_atom) {
    if (per_atom.size() != state.n_atoms()) {
        throw std::invalid_argument("one basis per atom is required");
    }
    StateVector rotated = state;
    for (size_t q = 0; q < per_atom.size(); q++) {
        if (per_atom[q] != Basis::z) {
            apply_single(rotated, q, measurement_frame(per_atom[q]));
        }
    }
    std::vector<double> p(rotated.dim());
    for (size_t i = 0; i < p.size(); i++) {
        p[i] = std::norm(rotated[i]);
    }
    return p;
}

Bits index_to_bits(uint64_t index, size_t n) {
    Bits out(n);
    for (size_t q = 0; q < n; q++) {
        out[q] = static_cast<uint8_t>((index >> (n - 1 - q)) & 1);
    }
    return out;
}

uint64_t bits_to_index(const Bits &bits) {
    uint64_t out = 0;
    for (uint8_t b : bits) {
        out = (out << 1) | (b & 1);
    }
    return out;
}

static uint64_t inverse_cdf(std::span<const double> probs, double u) {
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    double target = u * total;
    double acc = 0;
    uint64_t last = 0;
    for (uint64_t i = 0; i < probs.size(); i++) {
        if (probs[i] <= 0) {
            continue;
        }
        acc += probs[i];
        last = i;
        if (target < acc) {
            return i;
        }
    }
    return last;
}

Bits measure_all(const StateVector &state, Basis basis, StreamRng &rng) {
    auto p = probabilities(state, basis);
    return index_to_bits(inverse_cdf(p, rng.uniform()), state.n_atoms());
}

std::vector<uint64_t> sample_indices(std::span<const double> probs, uint64_t seed, uint64_t first_shot, size_t count) {
    std::vector<std::pair<double, size_t>> draws(count);
    for (size_t i = 0; i < count; i++) {
        StreamRng rng(seed, first_shot + i);
        draws[i] = {rng.uniform(), i};
    }
    std::sort(draws.begin(), draws.end());
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    std::vector<uint64_t> out(count);
    double acc = 0;
    uint64_t idx = 0;
    uint64_t last_nonzero = 0;
    for (const auto &[u, shot] : draws) {
        double target = u * total;
        while (idx < probs.size() && acc + probs[idx] <= target) {
            acc += probs[idx];
            if (probs[idx] > 0) {
                last_nonzero = idx;
            }
            idx++;
        }
        while (idx < probs.size() && probs[idx] <= 0) {
            idx++;
        }
        out[shot] = idx < probs.size() ? idx : last_nonzero;
    }
    return out;
}

std::pair<StateVector, double> project(const StateVector &state, size_t atom, Basis basis, int outcome) {
    if (atom >= state.n_atoms() || (outcome != 0 && outcome != 1)) {
        throw std::invalid_argument("invalid atom or outcome for projection");
    }
    Mat2 u = measurement_frame(basis);
    StateVector s = state;
    apply_single(s, atom, u);
    uint64_t m = s.mask(atom);
    double p = 0;
    for (uint64_t i = 0; i < s.dim(); i++) {
        bool bit = (i & m) != 0;
        if (bit != (outcome == 1)) {
            s[i] = 0;
        } else {
            p += std::norm(s[i]);
        }
    }
    if (p < 1e-14) {
        throw std::invalid_argument("projection onto a zero-probability outcome");
    }
    apply_single(s, atom, adjoint(u));
    s.normalize();
    return {std::move(s), p};
}

double prep_error_norm(const InteractionMatrix &v, double dt, const EvolutionParams &params) {
    size_t n = v.size();
    StateVector ideal(n);
    apply_global_rotation(ideal, pi / 2, pi / 2);
    if (dt == 0) {
        return 0;
    }
    StateVector full(n);
    PulseSchedule s{{rotation_segment(Stage::prep, Shape::square, dt, pi / 2, pi / 2)}};
    evolve(full, s, v, params);
    // Norm of the component orthogonal to the ideal state; stable near zero.
    Amp c = inner(ideal, full);
    double t = 0;
    for (size_t i = 0; i < full.dim(); i++) {
        t += std::norm(full[i] - c * ideal[i]);
    }
    return std::sqrt(t);
}

double prep_error_norm(size_t n, double d, double dt) {
    return prep_error_norm(interaction_matrix(build_chain(n, d, 0)), dt);
}

}  // namespace rydgraph
