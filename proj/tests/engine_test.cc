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

#include <cmath>
#include <map>
#include <numbers>

#include "gtest/gtest.h"
#include "rydgraph/errors.h"

using namespace rydgraph;
using std::numbers::pi;

static double distance(const StateVector &a, const StateVector &b) {
    double t = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        t += std::norm(a[i] - b[i]);
    }
    return std::sqrt(t);
}

static StateVector two_vertex_graph() {
    GraphSpec g{2, {{0, 1}}};
    return build_ideal_graph_state(g);
}

TEST(engine, init_ground) {
    StateVector one(1);
    EXPECT_EQ(one.dim(), 2u);
    EXPECT_EQ(one[0], Amp(1, 0));
    EXPECT_EQ(one[1], Amp(0, 0));
    StateVector two = init_ground(2);
    EXPECT_EQ(two.amplitudes(), (std::vector<Amp>{1, 0, 0, 0}));
    EXPECT_NEAR(two.norm(), 1, 1e-15);
    EXPECT_THROW(StateVector(0), std::invalid_argument);
    EXPECT_THROW(StateVector(25), CapabilityError);
}

TEST(engine, global_rotation) {
    StateVector s(1);
    apply_global_rotation(s, pi / 2, pi / 2);
    EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].imag(), 0, 1e-15);

    StateVector a(3), b(3);
    apply_global_rotation(a, 0.3, 0.7);
    b = a;
    apply_global_rotation(a, 1.1, 0);
    EXPECT_LT(distance(a, b), 1e-15);

    StateVector c(3), d(3);
    apply_global_rotation(c, 0.4, pi / 2);
    apply_global_rotation(c, 0.4, pi / 2);
    apply_global_rotation(d, 0.4, pi);
    EXPECT_LT(distance(c, d), 1e-12);
    EXPECT_NEAR(c.norm(), 1, 1e-12);
}

TEST(engine, controlled_phase) {
    StateVector s(2);
    apply_global_rotation(s, pi / 2, pi / 2);
    StateVector before = s;
    apply_cp(s, 0, 1, 0);
    EXPECT_LT(distance(s, before), 1e-15);
    apply_cp(s, 0, 1, pi);
    EXPECT_NEAR(s[0].real(), 0.5, 1e-15);
    EXPECT_NEAR(s[1].real(), 0.5, 1e-15);
    EXPECT_NEAR(s[2].real(), 0.5, 1e-15);
    EXPECT_NEAR(s[3].real(), -0.5, 1e-15);
    apply_cp(s, 1, 0, pi);
    EXPECT_LT(distance(s, before), 1e-15);
    EXPECT_THROW(apply_cp(s, 1, 1, pi), std::invalid_argument);
    EXPECT_THROW(apply_cp(s, 0, 2, pi), std::invalid_argument);
}

TEST(engine, graph_state_construction) {
    auto g2 = two_vertex_graph();
    EXPECT_NEAR(g2[0].real(), 0.5, 1e-15);
    EXPECT_NEAR(g2[3].real(), -0.5, 1e-15);

    auto plus = build_ideal_graph_state(GraphSpec{3, {}});
    for (const auto &a : plus.amplitudes()) {
        EXPECT_NEAR(a.real(), 1 / std::sqrt(8.0), 1e-15);
    }
}

TEST(engine, evolve_without_interaction_composes_rotations) {
    InteractionMatrix none(3);
    StateVector s(3);
    evolve(s, bell_schedule(12.3), none);
    StateVector r(3);
    apply_global_rotation(r, 0, -3 * pi / 4);
    EXPECT_GT(overlap(s, r), 1 - 1e-9);
    EXPECT_NEAR(s.norm(), 1, 1e-10);
}

TEST(engine, bell_pulse_sequence) {
    // Reference value from an independent dense-matrix integration.
    StateVector s(2);
    evolve(s, bell_schedule(12.3), interaction_matrix(build_chain(2, 12.3, 0)));
    StateVector b(2);
    b[0] = 1 / std::sqrt(2.0);
    b[3] = 1 / std::sqrt(2.0);
    EXPECT_NEAR(overlap(s, b), 0.98366, 1e-4);
    EXPECT_NEAR(std::sqrt(overlap(s, b)), 0.9918, 1e-4);
    EXPECT_NEAR(s.norm(), 1, 1e-10);
}

TEST(engine, default_step_halving) {
    auto v = interaction_matrix(build_chain(4, 12.3, 0));
    StateVector a(4), b(4);
    evolve(a, graph_schedule(12.3), v, {1e-3, 2});
    evolve(b, graph_schedule(12.3), v, {5e-4, 2});
    EXPECT_LT(distance(a, b), 1e-8);
}

TEST(engine, splitting_order) {
    auto v = interaction_matrix(build_chain(4, 12.3, 0));
    StateVector ref(4);

    // Second order: error against a 20x finer run falls about fourfold per halving.
    evolve(ref, graph_schedule(12.3), v, {2.5e-4, 2});
    StateVector c(4), e(4);
    evolve(c, graph_schedule(12.3), v, {1e-2, 2});
    evolve(e, graph_schedule(12.3), v, {5e-3, 2});
    double ratio = distance(c, ref) / distance(e, ref);
    EXPECT_GT(ratio, 3.2);
    EXPECT_LT(ratio, 4.8);

    StateVector f(4), h(4);
    evolve(f, graph_schedule(12.3), v, {1e-2, 1});
    evolve(h, graph_schedule(12.3), v, {5e-3, 1});
    double ratio1 = distance(f, ref) / distance(h, ref);
    EXPECT_GT(ratio1, 1.6);
    EXPECT_LT(ratio1, 2.4);
}

TEST(engine, instantaneous_limit_matches_graph_state) {
    for (size_t n = 2; n <= 8; n++) {
        auto layout = build_chain(n, 12.3, 0);
        auto v = interaction_matrix(layout, 1.0);
        StateVector s(n);
        evolve(s, graph_schedule(12.3, {1e-7, 1e-7, Shape::triangle}), v);
        apply_global_rotation(s, pi / 2, pi / 2);
        EXPECT_GT(overlap(s, build_ideal_graph_state(chain_graph(n))), 1 - 1e-8) << n;
    }
}

TEST(engine, measurement_examples) {
    StreamRng rng(3, 0);
    StateVector g(3);
    for (int k = 0; k < 20; k++) {
        EXPECT_EQ(measure_all(g, Basis::z, rng), (Bits{0, 0, 0}));
    }
    auto plus = build_ideal_graph_state(GraphSpec{3, {}});
    for (int k = 0; k < 20; k++) {
        EXPECT_EQ(measure_all(plus, Basis::x, rng), (Bits{0, 0, 0}));
    }
    // The two-vertex graph state has flat x statistics.
    auto p = probabilities(two_vertex_graph(), Basis::x);
    for (double x : p) {
        EXPECT_NEAR(x, 0.25, 1e-15);
    }
}

TEST(engine, sampling_matches_born_rule) {
    StateVector s(3);
    apply_global_rotation(s, 0.3, 1.1);
    apply_cp(s, 0, 1, 0.8);
    apply_single(s, 2, rotation_matrix(1.2, 0.5));
    auto p = probabilities(s, Basis::x);
    const size_t shots = 100000;
    auto idx = sample_indices(p, 17, 0, shots);
    std::vector<double> freq(p.size(), 0);
    for (auto i : idx) {
        freq[i] += 1;
    }
    for (size_t k = 0; k < p.size(); k++) {
        double sigma = std::sqrt(shots * p[k] * (1 - p[k]));
        EXPECT_LE(std::abs(freq[k] - shots * p[k]), 4 * sigma + 1e-9) << k;
    }
    // Shot i only depends on its own stream.
    auto part = sample_indices(p, 17, 500, 10);
    for (size_t k = 0; k < 10; k++) {
        EXPECT_EQ(part[k], idx[500 + k]);
    }
}

TEST(engine, projection) {
    auto g2 = two_vertex_graph();
    auto [post, prob] = project(g2, 0, Basis::x, 0);
    EXPECT_NEAR(prob, 0.5, 1e-15);
    // Atom 1 in |+>, atom 2 in |g>.
    EXPECT_NEAR(std::norm(post[0]), 0.5, 1e-14);
    EXPECT_NEAR(std::norm(post[2]), 0.5, 1e-14);
    EXPECT_NEAR(std::norm(post[1]) + std::norm(post[3]), 0, 1e-14);

    auto [o1, p1] = project(g2, 1, Basis::x, 1);
    EXPECT_NEAR(prob + p1, 1.0, 1e-12);

    auto plus = build_ideal_graph_state(GraphSpec{2, {}});
    auto [pp, pr] = project(plus, 0, Basis::x, 0);
    EXPECT_NEAR(pr, 1.0, 1e-14);
    EXPECT_NEAR(overlap(pp, plus), 1.0, 1e-14);
    EXPECT_THROW(project(plus, 0, Basis::x, 1), std::invalid_argument);
}

TEST(engine, overlap_basics) {
    StateVector a(2);
    StateVector b(2);
    b[0] = 0;
    b[3] = 1;
    EXPECT_EQ(overlap(a, a), 1.0);
    EXPECT_EQ(overlap(a, b), 0.0);
    EXPECT_THROW(overlap(a, StateVector(3)), std::invalid_argument);
}

TEST(engine, prep_error_scaling) {
    double prev = prep_error_norm(2, 12.3, 0.2);
    for (double dt : {0.1, 0.05, 0.025}) {
        double cur = prep_error_norm(2, 12.3, dt);
        EXPECT_GT(prev / cur, 1.6);
        EXPECT_LT(prev / cur, 2.4);
        prev = cur;
    }
    EXPECT_EQ(prep_error_norm(2, 12.3, 0), 0.0);
    EXPECT_LT(prep_error_norm(InteractionMatrix(3), 0.2), 1e-14);
}

TEST(engine, rejects_bad_inputs) {
    StateVector s(2);
    EXPECT_THROW(evolve(s, bell_schedule(12.3), InteractionMatrix(3)), std::invalid_argument);
    EXPECT_THROW(evolve(s, bell_schedule(12.3), InteractionMatrix(2), {0, 2}), std::invalid_argument);
}
