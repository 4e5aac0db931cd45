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
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "rydgraph/errors.h"
#include "rydgraph/noise.h"

using namespace rydgraph;

static CountVector random_counts(size_t n, uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(0, 100);
    CountVector m;
    m.n_atoms = n;
    for (uint64_t k = 0; k < (uint64_t{1} << n); k++) {
        m.counts[k] = u(g);
    }
    return m;
}

// Dense 2^n x 2^n tensor product of single-atom matrices, atom 0 most significant.
static std::vector<double> dense_apply(const CountVector &m, double a00, double a01, double a11) {
    size_t dim = size_t{1} << m.n_atoms;
    std::vector<double> t(dim * dim, 0);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            double v = 1;
            for (size_t q = 0; q < m.n_atoms; q++) {
                size_t sh = m.n_atoms - 1 - q;
                int br = (r >> sh) & 1, bc = (c >> sh) & 1;
                v *= br == 0 ? (bc == 0 ? a00 : a01) : (bc == 0 ? 0.0 : a11);
            }
            t[r * dim + c] = v;
        }
    }
    std::vector<double> out(dim, 0);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            out[r] += t[r * dim + c] * m.at(c);
        }
    }
    return out;
}

TEST(mitigation, single_atom_arithmetic) {
    CountVector m{1, {{0, 0.5}, {1, 0.5}}};
    auto b = bias_counts(m, 0.08);
    EXPECT_NEAR(b.at(0), 0.54, 1e-15);
    EXPECT_NEAR(b.at(1), 0.46, 1e-15);
    auto [c, rep] = correct_counts(b, 0.08);
    EXPECT_NEAR(c.at(0), 0.5, 1e-15);
    EXPECT_NEAR(c.at(1), 0.5, 1e-15);
    EXPECT_EQ(rep.clipped_entries, 0u);
    auto same = bias_counts(m, 0);
    EXPECT_EQ(same.counts, m.counts);
    EXPECT_THROW(correct_counts(m, 1.0), std::invalid_argument);
}

TEST(mitigation, exact_round_trip) {
    for (size_t n : {1u, 3u, 6u, 12u}) {
        auto m = random_counts(n, n);
        for (double eps : {0.0, 0.08, 0.3, 0.9}) {
            auto b = bias_counts(m, eps);
            EXPECT_NEAR(b.total(), m.total(), 1e-9 * m.total());
            auto [c, rep] = correct_counts(b, eps);
            EXPECT_EQ(rep.clipped_entries, 0u);
            double worst = 0;
            for (const auto &[k, v] : m.counts) {
                worst = std::max(worst, std::abs(c.at(k) - v) / m.total());
            }
            EXPECT_LT(worst, 1e-9) << n << " " << eps;
        }
    }
}

TEST(mitigation, axis_application_matches_dense_matrix) {
    const double eps = 0.13;
    for (size_t n = 1; n <= 4; n++) {
        auto m = random_counts(n, 40 + n);
        auto b = bias_counts(m, eps);
        auto want = dense_apply(m, 1, eps, 1 - eps);
        auto [c, rep] = correct_counts(m, eps);
        auto want_inv = dense_apply(m, 1, -eps / (1 - eps), 1 / (1 - eps));
        bool negative = false;
        for (double v : want_inv) {
            negative |= v < 0;
        }
        for (uint64_t k = 0; k < want.size(); k++) {
            EXPECT_NEAR(b.at(k), want[k], 1e-12 * m.total());
            if (!negative) {
                EXPECT_NEAR(c.at(k), want_inv[k], 1e-12 * m.total());
            }
        }
    }
}

TEST(mitigation, clipping_preserves_total) {
    // 1 biased count of |r> is impossible to explain with zero |g> counts.
    CountVector m{2, {{3, 10}, {0, 0}, {1, 5}}};
    auto [c, rep] = correct_counts(m, 0.3);
    EXPECT_GT(rep.clipped_entries, 0u);
    EXPECT_GT(rep.clipped_mass, 0);
    EXPECT_NEAR(c.total(), m.total(), 1e-12);
    for (const auto &[k, v] : c.counts) {
        EXPECT_GE(v, 0);
    }
}

TEST(mitigation, sampled_bell_recovery) {
    const size_t shots = 100000;
    const double eps = 0.08;
    std::vector<ShotRecord> recs(shots);
    for (size_t i = 0; i < shots; i++) {
        StreamRng pick(17, i, StreamPurpose::sample);
        uint8_t v = pick.bernoulli(0.5) ? 1 : 0;
        recs[i].s = {v, v};
        recs[i].basis = Basis::z;
        StreamRng ro(17, i, StreamPurpose::readout);
        apply_readout_bias(recs[i].s, eps, ro);
    }
    auto [c, rep] = correct_counts(counts_from_shots(recs), eps);
    EXPECT_NEAR(c.total(), static_cast<double>(shots), 1e-6);
    // The rr weight is a rescaled binomial count with spread sqrt(N p q)/(1-eps)^2. The gg
    // weight is its complement up to the small off-diagonal residue.
    double p_rr = 0.5 * (1 - eps) * (1 - eps);
    double sigma = std::sqrt(shots * p_rr * (1 - p_rr)) / ((1 - eps) * (1 - eps));
    EXPECT_NEAR(c.at(3), shots / 2.0, 4 * sigma);
    EXPECT_NEAR(c.at(0), shots / 2.0, 4 * sigma);
}

TEST(mitigation, count_files) {
    std::istringstream in("# measured\n00 5\n11 7.5\n01 0\n");
    auto m = read_counts(in);
    EXPECT_EQ(m.n_atoms, 2u);
    EXPECT_EQ(m.at(3), 7.5);
    std::ostringstream out;
    write_counts(out, m);
    std::istringstream back(out.str());
    EXPECT_EQ(read_counts(back).counts, m.counts);

    std::istringstream bad("00 1\n012 3\n");
    try {
        read_counts(bad);
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 2u);
    }
    std::istringstream neg("0 -1\n");
    EXPECT_THROW(read_counts(neg), ParseError);
}
