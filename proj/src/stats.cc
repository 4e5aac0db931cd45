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
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rydgraph/errors.h"
#include "rydgraph/noise.h"

namespace rydgraph {

MeanSe jackknife_se(std::span<const double> x) {
    size_t m = x.size();
    if (m < 2) {
        throw std::invalid_argument("jackknife needs at least two samples");
    }
    double total = 0;
    for (double v : x) {
        total += v;
    }
    double mean = total / static_cast<double>(m);
    // Leave-one-out means, then the usual (m-1)/m spread.
    double acc = 0;
    for (double v : x) {
        double loo = (total - v) / static_cast<double>(m - 1);
        acc += (loo - mean) * (loo - mean);
    }
    double se = std::sqrt(acc * static_cast<double>(m - 1) / static_cast<double>(m));
    return {mean, se};
}

MeanSe jackknife_se(size_t ones, size_t total) {
    if (total < 2) {
        throw std::invalid_argument("jackknife needs at least two samples");
    }
    if (ones > total) {
        throw std::invalid_argument("more successes than samples");
    }
    double m = static_cast<double>(total);
    double k = static_cast<double>(ones);
    double mean = k / m;
    double loo1 = (k - 1) / (m - 1);
    double loo0 = k / (m - 1);
    double acc = k * (loo1 - mean) * (loo1 - mean) + (m - k) * (loo0 - mean) * (loo0 - mean);
    return {mean, std::sqrt(acc * (m - 1) / m)};
}

std::vector<ConvergencePoint> convergence_curve(std::span<const double> stream, std::span<const size_t> checkpoints) {
    std::vector<ConvergencePoint> out;
    for (size_t c : checkpoints) {
        size_t m = std::min(c, stream.size());
        if (m < 2) {
            continue;
        }
        auto r = jackknife_se(stream.subspan(0, m));
        out.push_back({m, r.mean, r.se});
    }
    return out;
}

const char *model_name(FitModel m) {
    return m == FitModel::p_even ? "p_even" : "trajectory";
}

FitModel parse_model(const std::string &s) {
    if (s == "p_even") {
        return FitModel::p_even;
    }
    if (s == "trajectory") {
        return FitModel::trajectory;
    }
    throw std::invalid_argument("unknown fit model '" + s + "'");
}

double model_value(FitModel m, double n, double eps) {
    return m == FitModel::p_even ? p_even(n, eps) : trajectory_fidelity(n, eps);
}

FitResult fit_epsilon(std::span<const FitPoint> points, FitModel model, bool weighted) {
    if (points.size() < 2) {
        throw std::invalid_argument("fit needs at least two points");
    }
    bool spread = false;
    for (const auto &p : points) {
        if (!std::isfinite(p.n) || !std::isfinite(p.value) || !std::isfinite(p.se) || p.se < 0) {
            throw std::invalid_argument("fit point with non-finite or negative entries");
        }
        if (p.n != points[0].n) {
            spread = true;
        }
        if (p.se == 0) {
            weighted = false;
        }
    }
    if (!spread) {
        throw std::invalid_argument("degenerate fit: all points share one abscissa");
    }
    auto chi2 = [&](double eps) {
        double t = 0;
        for (const auto &p : points) {
            double r = p.value - model_value(model, p.n, eps);
            t += weighted ? (r / p.se) * (r / p.se) : r * r;
        }
        return t;
    };
    auto best = boost::math::tools::brent_find_minima(chi2, 0.0, 0.5, 40);
    FitResult out;
    out.model = model;
    out.weighted = weighted;
    out.eps = best.first;
    for (const auto &p : points) {
        double r = p.value - model_value(model, p.n, out.eps);
        out.sse += r * r;
    }
    double scale = 1;
    if (!weighted) {
        size_t dof = points.size() > 1 ? points.size() - 1 : 1;
        scale = out.sse / static_cast<double>(dof);
        if (scale <= 0) {
            return out;
        }
    }
    double floor = best.second;
    auto excess = [&](double eps) { return (chi2(eps) - floor) / scale - 1; };
    auto tol = [](double a, double b) { return std::abs(a - b) < 1e-10; };
    auto edge = [&](double lo, double hi) {
        if (excess(lo) * excess(hi) > 0) {
            return excess(lo) < 0 ? lo : hi;
        }
        std::uintmax_t iters = 200;
        auto r = boost::math::tools::toms748_solve(excess, lo, hi, tol, iters);
        return (r.first + r.second) / 2;
    };
    double lower = out.eps > 0 ? edge(0.0, out.eps) : 0.0;
    double upper = out.eps < 0.5 ? edge(out.eps, 0.5) : 0.5;
    out.half_width = (upper - lower) / 2;
    return out;
}

std::vector<FitPoint> read_fit_points(std::istream &in) {
    std::vector<FitPoint> out;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        FitPoint p;
        if (!(ss >> p.n)) {
            continue;
        }
        if (!(ss >> p.value >> p.se)) {
            throw ParseError("expected 'n value se'", line_no);
        }
        out.push_back(p);
    }
    return out;
}

void write_fit_result(std::ostream &out, const FitResult &r) {
    auto old = out.precision(10);
    out << "model\t" << model_name(r.model) << "\n";
    out << "eps\t" << r.eps << "\n";
    out << "half_width\t" << r.half_width << "\n";
    out << "sse\t" << r.sse << "\n";
    out << "weighted\t" << (r.weighted ? 1 : 0) << "\n";
    out.precision(old);
}

}  // namespace rydgraph
