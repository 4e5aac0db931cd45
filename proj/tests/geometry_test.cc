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

#include "rydgraph/geometry.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "rydgraph/errors.h"

using namespace rydgraph;

TEST(geometry, pair_interaction_values) {
    EXPECT_NEAR(pair_interaction(12.3), 1.5653, 1e-4);
    EXPECT_NEAR(pair_interaction(12.3) / pair_interaction(24.6), 64.0, 64.0 * 1e-12);
    EXPECT_THROW(pair_interaction(0), std::domain_error);
    EXPECT_THROW(pair_interaction(-1), std::domain_error);
    EXPECT_THROW(pair_interaction(NAN), std::domain_error);
    EXPECT_GT(pair_interaction(10), pair_interaction(10.01));
}

TEST(geometry, cz_time_values) {
    EXPECT_NEAR(cz_time(12.3), 2.007, 1e-3);
    double d_pi = std::pow(kC6 / std::numbers::pi, 1.0 / 6.0);
    EXPECT_NEAR(cz_time(d_pi), 1.0, 1e-12);
    EXPECT_NEAR(cz_time(2 * 12.3) / cz_time(12.3), 64.0, 1e-9);
}

TEST(geometry, chain) {
    auto c = build_chain(3, 12.3, 0);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.positions[0].x, 0.0);
    EXPECT_EQ(c.positions[1].x, 12.3);
    EXPECT_NEAR(c.positions[2].x, 24.6, 1e-12);
    EXPECT_EQ(c.roles[0], Role::input);
    EXPECT_EQ(c.roles[1], Role::body);
    EXPECT_EQ(c.roles[2], Role::output);
    for (size_t j = 0; j + 1 < c.size(); j++) {
        EXPECT_NEAR(distance(c.positions[j], c.positions[j + 1]), 12.3, 1e-12);
    }

    auto shifted = build_chain(3, 12.3, 2);
    EXPECT_EQ(shifted.positions[0].x, -2.0);
    EXPECT_EQ(shifted.positions[1].x, 12.3);
    EXPECT_THROW(build_chain(1, 12.3, 0), std::invalid_argument);
    EXPECT_THROW(build_chain(3, 12.3, -1), std::invalid_argument);
}

TEST(geometry, interaction_matrix_tails) {
    auto v = interaction_matrix(build_chain(5, 12.3, 0));
    for (size_t j = 0; j < 5; j++) {
        EXPECT_EQ(v(j, j), 0.0);
        for (size_t k = 0; k < 5; k++) {
            EXPECT_EQ(v(j, k), v(k, j));
        }
    }
    EXPECT_NEAR(v(0, 1), 1.5653, 1e-4);
    EXPECT_NEAR(v(0, 2), v(0, 1) / 64, 1e-12);

    auto cut = interaction_matrix(build_chain(5, 12.3, 0), 1.0);
    EXPECT_EQ(cut(0, 2), 0.0);
    EXPECT_EQ(cut(0, 1), v(0, 1));

    auto pair = interaction_matrix(build_chain(2, 12.3, 0));
    EXPECT_NEAR(pair(0, 1), pair_interaction(12.3), 1e-15);

    AtomLayout bad = build_chain(2, 12.3, 0);
    bad.positions[1] = bad.positions[0];
    EXPECT_THROW(interaction_matrix(bad), std::invalid_argument);
}

TEST(geometry, grids) {
    EXPECT_EQ(build_rect(2, 2, 12.3).graph.edges.size(), 4u);
    EXPECT_EQ(build_rect(3, 4, 12.3).graph.edges.size(), 17u);
    EXPECT_THROW(build_rect(5, 5, 12.3), CapabilityError);
}

TEST(geometry, cnot_and_swap_layouts) {
    auto cn = build_cnot_layout(10, 1);
    EXPECT_EQ(cn.layout.size(), 15u);
    EXPECT_EQ(cn.graph.edges.size(), 14u);
    EXPECT_EQ(cn.layout.atoms_with_role(Role::input), (std::vector<size_t>{0, 8}));
    EXPECT_EQ(cn.layout.atoms_with_role(Role::output), (std::vector<size_t>{6, 14}));
    EXPECT_EQ(cn.layout.positions[0].x, -1.0);
    EXPECT_EQ(cn.graph.neighbors(7), (std::vector<size_t>{3, 11}));

    auto sw = build_swap_layout(10, 0);
    EXPECT_EQ(sw.layout.size(), 16u);
    EXPECT_EQ(sw.graph.edges.size(), 17u);
    EXPECT_EQ(sw.layout.atoms_with_role(Role::input), (std::vector<size_t>{0, 10}));
    EXPECT_EQ(sw.layout.atoms_with_role(Role::output), (std::vector<size_t>{6, 15}));
    EXPECT_EQ(build_swap_layout(10, 0, 2).layout.size(), 24u);
    EXPECT_THROW(build_swap_layout(10, 0, 3), CapabilityError);
}

TEST(geometry, text_round_trip) {
    auto lg = build_cnot_layout(12.3, 0.5);
    std::stringstream ls;
    write_layout(ls, lg.layout);
    auto back = read_layout(ls);
    ASSERT_EQ(back.size(), lg.layout.size());
    EXPECT_EQ(back.spacing, 12.3);
    EXPECT_EQ(back.input_displacement, 0.5);
    for (size_t j = 0; j < back.size(); j++) {
        EXPECT_NEAR(back.positions[j].x, lg.layout.positions[j].x, 1e-9);
        EXPECT_EQ(back.roles[j], lg.layout.roles[j]);
    }

    std::stringstream gs;
    write_graph(gs, lg.graph);
    auto g = read_graph(gs, 15);
    EXPECT_EQ(g.edges.size(), lg.graph.edges.size());

    std::istringstream broken("0 0 input\n1 oops\n");
    try {
        read_layout(broken);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 2u);
    }
    std::istringstream loop("1 1\n");
    EXPECT_THROW(read_graph(loop, 3), ParseError);
}
