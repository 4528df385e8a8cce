// Copyright 2026 The cglmp Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cglmp/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "cglmp/error.hpp"

namespace cglmp {

namespace {

constexpr int kGridPoints = 400;
constexpr double kGoldenTolerance = 1e-13;

struct LinearFit {
    double asymptote = 0.0;
    double amplitude = 0.0;
    double rms = std::numeric_limits<double>::infinity();
};

// value = asymptote - amplitude * x, x = d^-p, by ordinary least squares.
LinearFit solve_linear(std::span<const FitPoint> points, double p) {
    const double n = static_cast<double>(points.size());
    std::vector<double> x(points.size());
    double x_mean = 0.0, y_mean = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        x[i] = std::pow(points[i].d, -p);
        x_mean += x[i];
        y_mean += points[i].value;
    }
    x_mean /= n;
    y_mean /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        sxx += (x[i] - x_mean) * (x[i] - x_mean);
        sxy += (x[i] - x_mean) * (points[i].value - y_mean);
    }
    LinearFit out;
    if (!(sxx > 0.0) || !std::isfinite(sxx)) {
        return out;
    }
    const double slope = sxy / sxx;
    out.asymptote = y_mean - slope * x_mean;
    out.amplitude = -slope;
    double ss = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double r = points[i].value - (out.asymptote + slope * x[i]);
        ss += r * r;
    }
    out.rms = std::sqrt(ss / n);
    return out;
}

void validate(std::span<const FitPoint> points) {
    if (points.size() < 4) {
        throw FitError("fit_power_law: need at least 4 points, got " +
                       std::to_string(points.size()));
    }
    std::set<double> distinct;
    for (const auto &pt : points) {
        if (!std::isfinite(pt.d) || !std::isfinite(pt.value) || pt.d <= 0.0) {
            throw FitError("fit_power_law: points need finite values and positive d");
        }
        distinct.insert(pt.d);
    }
    if (distinct.size() < 4) {
        throw FitError("fit_power_law: need at least 4 distinct d values");
    }
    const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                              [](const auto &a, const auto &b) { return a.value < b.value; });
    if (lo->value == hi->value) {
        throw FitError("fit_power_law: values are constant; exponent is undetermined");
    }
}

} // namespace

double FitModel::operator()(double d) const { return asymptote - amplitude * std::pow(d, -exponent); }

FitModel fit_power_law(std::span<const FitPoint> points) {
    validate(points);

    auto rms = [&](double p) { return solve_linear(points, p).rms; };

    // Log-spaced scan, then golden-section inside the best grid cell's neighbours.
    const double log_lo = std::log(kFitExponentMin);
    const double log_hi = std::log(kFitExponentMax);
    std::vector<double> grid(kGridPoints);
    int best = 0;
    double best_rms = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridPoints; ++i) {
        grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (kGridPoints - 1));
        const double r = rms(grid[i]);
        if (r < best_rms) {
            best_rms = r;
            best = i;
        }
    }
    if (!std::isfinite(best_rms)) {
        throw FitError("fit_power_law: linear subproblem is degenerate for every exponent");
    }

    double a = grid[std::max(best - 1, 0)];
    double b = grid[std::min(best + 1, kGridPoints - 1)];
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double e = a + inv_phi * (b - a);
    double fc = rms(c), fe = rms(e);
    while (b - a > kGoldenTolerance * std::max(1.0, std::abs(a))) {
        if (fc <= fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - inv_phi * (b - a);
            fc = rms(c);
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + inv_phi * (b - a);
            fe = rms(e);
        }
    }
    double p = 0.5 * (a + b);
    if (rms(p) > best_rms) {
        p = grid[best];
    }
    const LinearFit lin = solve_linear(points, p);
    return FitModel{lin.asymptote, lin.amplitude, p, lin.rms};
}

} // namespace cglmp
