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

#include "rydgraph/stats.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "rydgraph/errors.h"
#include "rydgraph/noise.h"
#include "rydgraph/rng.h"

using namespace rydgraph;

static std::vector<double> bernoulli_stream(size_t m, double p, uint64_t seed) {
    std::vector<double> x(m);
    for (size_t i = 0; i < m; i++) {
        StreamRng r(seed, i, StreamPurpose::sample);
        x[i] = r.bernoulli(p) ? 1.0 : 0.0;
    }
    return x;
}

TEST(stats, jackknife_matches_textbook_formula) {
    auto x = bernoulli_stream(1000, 0.752, 3);
    auto r = jackknife_se(x);
    double mean = 0;
    for (double v : x) {
        mean += v;
    }
    mean /= x.size();
    double s2 = 0;
    for (double v : x) {
        s2 += (v - mean) * (v - mean);
    }
    s2 /= x.size() - 1;
    EXPECT_NEAR(r.mean, mean, 1e-15);
    EXPECT_NEAR(r.se, std::sqrt(s2 / x.size()), 1e-12);

    size_t ones = static_cast<size_t>(std::count(x.begin(), x.end(), 1.0));
    auto c = jackknife_se(ones, x.size());
    EXPECT_NEAR(c.mean, r.mean, 1e-15);
    EXPECT_NEAR(c.se, r.se, 1e-12);

    auto fixed = jackknife_se(752, 1000);
    EXPECT_NEAR(fixed.se, 0.0137, 1e-4);

    std::vector<double> flat(50, 1.0);
    EXPECT_EQ(jackknife_se(flat).se, 0.0);
    std::vector<double> one{1.0};
    EXPECT_THROW(jackknife_se(one), std::invalid_argument);
}

TEST(stats, jackknife_permutation_invariant) {
    auto x = bernoulli_stream(500, 0.3, 4);
    auto a = jackknife_se(x);
    std::mt19937_64 g(9);
    std::shuffle(x.begin(), x.end(), g);
    auto b = jackknife_se(x);
    EXPECT_NEAR(a.mean, b.mean, 1e-15);
    EXPECT_NEAR(a.se, b.se, 1e-14);
}

TEST(stats, convergence_curve) {
    std::vector<double> flat(200, 1.0);
    std::vector<size_t> cps{10, 100, 200};
    for (const auto &p : convergence_curve(flat, cps)) {
        EXPECT_EQ(p.estimate, 1.0);
        EXPECT_EQ(p.se, 0.0);
    }

    auto x = bernoulli_stream(10000, 0.75, 5);
    std::vector<size_t> steps{100, 300, 1000, 3000, 10000};
    auto curve = convergence_curve(x, steps);
    ASSERT_EQ(curve.size(), steps.size());
    for (const auto &p : curve) {
        double sigma = std::sqrt(0.75 * 0.25 / p.shots);
        EXPECT_NEAR(p.estimate, 0.75, 4 * sigma) << p.shots;
    }
    double ratio = curve.front().se / curve.back().se;
    EXPECT_NEAR(ratio, 10.0, 2.0);
}

TEST(stats, fit_recovers_generator) {
    std::vector<FitPoint> pts;
    for (int n = 2; n <= 12; n++) {
        pts.push_back({double(n), p_even(n, 0.12), 0.01});
    }
    auto r = fit_epsilon(pts, FitModel::p_even);
    EXPECT_NEAR(r.eps, 0.12, 1e-4);
    EXPECT_LT(r.sse, 1e-12);
    EXPECT_TRUE(r.weighted);

    std::vector<FitPoint> traj;
    for (int n = 1; n <= 15; n += 2) {
        traj.push_back({double(n), trajectory_fidelity(n, 0.03), 0});
    }
    auto t = fit_epsilon(traj, FitModel::trajectory);
    EXPECT_NEAR(t.eps, 0.03, 1e-4);
    EXPECT_FALSE(t.weighted);
}

TEST(stats, fit_scale_invariance_and_width) {
    std::vector<FitPoint> pts;
    for (int n = 2; n <= 12; n++) {
        double noise = (n % 3 - 1) * 0.004;
        pts.push_back({double(n), p_even(n, 0.12) + noise, 0.005 + 0.001 * n});
    }
    auto a = fit_epsilon(pts, FitModel::p_even);
    auto scaled = pts;
    for (auto &p : scaled) {
        p.se *= 7;
    }
    auto b = fit_epsilon(scaled, FitModel::p_even);
    EXPECT_NEAR(a.eps, b.eps, 1e-6);
    EXPECT_NEAR(b.half_width, 7 * a.half_width, 0.1 * 7 * a.half_width);
    EXPECT_GT(a.half_width, 0);
    EXPECT_NEAR(a.eps, 0.12, 5 * a.half_width);

    auto u = fit_epsilon(pts, FitModel::p_even, false);
    EXPECT_FALSE(u.weighted);
    EXPECT_GT(u.half_width, 0);
}

TEST(stats, trajectory_model_fits_higher_than_p_even) {
    // Teleport-style data: Q depends on n_O = (N + 1) / 2 flips, fit both ways.
    std::vector<FitPoint> by_no, by_n;
    for (int n = 3; n <= 13; n += 2) {
        double q = p_even((n + 1) / 2.0, 0.09);
        by_no.push_back({(n + 1) / 2.0, q, 0.005});
        by_n.push_back({double(n), q, 0.005});
    }
    auto pe = fit_epsilon(by_no, FitModel::p_even);
    auto tr = fit_epsilon(by_n, FitModel::trajectory);
    EXPECT_NEAR(pe.eps, 0.09, 1e-4);
    EXPECT_GT(tr.eps, pe.eps);
}

TEST(stats, fit_errors_and_files) {
    std::vector<FitPoint> one{{3, 0.9, 0.01}};
    EXPECT_THROW(fit_epsilon(one, FitModel::p_even), std::invalid_argument);
    std::vector<FitPoint> same{{3, 0.9, 0.01}, {3, 0.8, 0.01}};
    EXPECT_THROW(fit_epsilon(same, FitModel::p_even), std::invalid_argument);
    EXPECT_EQ(parse_model("trajectory"), FitModel::trajectory);
    EXPECT_THROW(parse_model("linear"), std::invalid_argument);

    std::istringstream in("# n value se\n2 0.9 0.01\n\n4 0.8 0.02\n");
    auto pts = read_fit_points(in);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[1].se, 0.02);
    std::istringstream bad("2 0.9 0.01\n3 0.8\n");
    try {
        read_fit_points(bad);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 2u);
    }
    std::ostringstream out;
    write_fit_result(out, fit_epsilon(pts, FitModel::p_even));
    EXPECT_NE(out.str().find("model\tp_even"), std::string::npos);
}
