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

#ifndef RYDGRAPH_STATS_H
#define RYDGRAPH_STATS_H

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rydgraph {

struct MeanSe {
    double mean = 0;
    double se = 0;
};

// Delete-1 jackknife of the sample mean.
MeanSe jackknife_se(std::span<const double> x);
// Same estimator for 0/1 data given only the count of ones.
MeanSe jackknife_se(size_t ones, size_t total);

struct ConvergencePoint {
    size_t shots;
    double estimate;
    double se;
};

std::vector<ConvergencePoint> convergence_curve(std::span<const double> stream, std::span<const size_t> checkpoints);

enum class FitModel { p_even, trajectory };

const char *model_name(FitModel m);
FitModel parse_model(const std::string &s);
double model_value(FitModel m, double n, double eps);

struct FitPoint {
    double n;
    double value;
    double se;
};

struct FitResult {
    FitModel model = FitModel::p_even;
    double eps = 0;
    double sse = 0;         // unweighted sum of squared residuals
    double half_width = 0;  // from the delta chi^2 = 1 interval
    bool weighted = true;
};

// Least squares over eps in [0, 0.5]. Weights 1/se^2 unless `weighted` is
// false or some se is zero, in which case the residual variance sets the
// scale of chi^2.
FitResult fit_epsilon(std::span<const FitPoint> points, FitModel model, bool weighted = true);

// "n value se" per line.
std::vector<FitPoint> read_fit_points(std::istream &in);
void write_fit_result(std::ostream &out, const FitResult &r);

}  // namespace rydgraph

#endif
