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

#include "gtest/gtest.h"

using namespace rydgraph;

static double binomial_even(int n, double eps) {
    double t = 0;
    for (int k = 0; 2 * k <= n; k++) {
        double c = std::tgamma(n + 1.0) / (std::tgamma(2 * k + 1.0) * std::tgamma(n - 2 * k + 1.0));
        t += c * std::pow(eps, 2 * k) * std::pow(1 - eps, n - 2 * k);
    }
    return t;
}

TEST(noise, p_even_closed_form) {
    for (int n = 0; n <= 12; n++) {
        EXPECT_EQ(p_even(n, 0), 1.0);
        for (int k = 0; k <= 10; k++) {
            double eps = 0.05 * k;
            EXPECT_NEAR(p_even(n, eps), binomial_even(n, eps), 1e-12) << n << " " << eps;
        }
    }
    EXPECT_NEAR(p_even(1, 0.12), 0.88, 1e-15);
    EXPECT_NEAR(p_even(5, 0.5), 0.5, 1e-15);
    for (int n = 1; n < 12; n++) {
        EXPECT_LE(p_even(n + 1, 0.1), p_even(n, 0.1));
        EXPECT_LE(p_even(n, 0.2), p_even(n, 0.1));
    }
    EXPECT_THROW(p_even(3, 0.6), std::invalid_argument);
}

TEST(noise, trajectory_fidelity) {
    EXPECT_EQ(trajectory_fidelity(10, 0), 1.0);
    EXPECT_NEAR(trajectory_fidelity(1e6, 0.1), 0.5, 1e-12);
    double f = trajectory_fidelity(10, 0.01);
    double pe = p_even(5, 0.01);
    EXPECT_LT(std::abs(f - pe) / pe, 0.01);
    EXPECT_NEAR(f, 1 - 0.01 * 10 / 2, 3e-3);
    EXPECT_LE(trajectory_fidelity(11, 0.01), f);
    EXPECT_LE(trajectory_fidelity(10, 0.02), f);
}

TEST(noise, domain_sizes) {
    auto ideal = domain_size(DomainModel::ideal, 0.0075, 2.0 / 3.0);
    EXPECT_EQ(ideal.vertices, 146u);
    EXPECT_EQ(ideal.vertices, static_cast<size_t>(std::floor(std::log(3.0) / 0.0075)));
    auto pe = domain_size(DomainModel::p_even, 0.09, 2.0 / 3.0);
    EXPECT_EQ(pe.n_o, 6u);
    EXPECT_EQ(pe.vertices, 11u);
    EXPECT_EQ(domain_size(DomainModel::ideal, 0.0075, 1 - 1e-12).vertices, 0u);
    EXPECT_TRUE(domain_size(DomainModel::ideal, 0, 0.7).unbounded);
    EXPECT_THROW(domain_size(DomainModel::ideal, 0.1, 0.4), std::invalid_argument);
}

TEST(noise, x_flips_follow_parity_model) {
    const int n = 6;
    const size_t trials = 100000;
    size_t even = 0;
    for (size_t t = 0; t < trials; t++) {
        Bits b(n, 0);
        StreamRng r(9, t, StreamPurpose::flip);
        apply_x_flip(b, 0.12, r);
        int parity = 0;
        for (auto x : b) {
            parity ^= x;
        }
        even += parity == 0;
    }
    double p = p_even(n, 0.12);
    double sigma = std::sqrt(trials * p * (1 - p));
    EXPECT_LE(std::abs(static_cast<double>(even) - trials * p), 4 * sigma);

    Bits same{1, 0, 1};
    StreamRng r(1, 0);
    apply_x_flip(same, 0, r);
    EXPECT_EQ(same, (Bits{1, 0, 1}));
}

TEST(noise, readout_bias) {
    StreamRng r(2, 0);
    Bits zeros(8, 0);
    apply_readout_bias(zeros, 0.5, r);
    EXPECT_EQ(zeros, Bits(8, 0));
    Bits ones(4, 1);
    apply_readout_bias(ones, 0, r);
    EXPECT_EQ(ones, Bits(4, 1));

    const size_t shots = 100000;
    size_t kept = 0;
    for (size_t t = 0; t < shots; t++) {
        Bits b{1};
        StreamRng s(3, t, StreamPurpose::readout);
        apply_readout_bias(b, 0.08, s);
        kept += b[0];
    }
    double sigma = std::sqrt(shots * 0.92 * 0.08);
    EXPECT_LE(std::abs(static_cast<double>(kept) - shots * 0.92), 4 * sigma);
}

TEST(noise, jitter) {
    EXPECT_EQ(jitter_shift(12.3, 0), 0.0);
    EXPECT_NEAR(jitter_shift(12.3, 0.25), 36 * 5420503.0 * 0.25 / std::pow(12.3, 7), 1e-12);
    EXPECT_NEAR(jitter_shift(12.3, 0.25), 1.1454, 1e-4);

    auto chain = build_chain(4, 12.3, 0);
    StreamRng r(4, 0, StreamPurpose::jitter);
    auto same = sample_jittered_layout(chain, 0, r);
    for (size_t j = 0; j < 4; j++) {
        EXPECT_EQ(same.positions[j].x, chain.positions[j].x);
    }
    double sum = 0, sq = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; t++) {
        StreamRng q(4, t, StreamPurpose::jitter);
        auto moved = sample_jittered_layout(chain, 0.25, q);
        double dx = moved.positions[1].x - chain.positions[1].x;
        sum += dx;
        sq += dx * dx;
    }
    EXPECT_NEAR(sum / trials, 0, 4 * 0.25 / std::sqrt(trials));
    EXPECT_NEAR(std::sqrt(sq / trials), 0.25, 0.01);
}

TEST(noise, config_validation) {
    NoiseConfig ok{0.1, 0.08, 0.01, 0.25};
    EXPECT_NO_THROW(ok.validate());
    EXPECT_THROW((NoiseConfig{0.6, 0, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseConfig{0, 1.0, 0, 0}).validate(), std::invalid_argument);
    EXPECT_THROW((NoiseConfig{0, 0, 0, -1}).validate(), std::invalid_argument);
}
