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

#include "cglmp/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cglmp/error.hpp"

namespace cglmp {

namespace {

using std::numbers::pi;

void require_dim(int d, const char *who) {
    if (d < 2) {
        throw InvalidDimension(std::string(who) + ": d must be >= 2, got " + std::to_string(d));
    }
}

} // namespace

BellValue bell_value_schmidt(const SchmidtState &state, const ReducedBellOperator &op) {
    if (state.dim() != op.dim()) {
        throw DomainError("bell_value_schmidt: state dimension " + std::to_string(state.dim()) +
                          " does not match operator dimension " + std::to_string(op.dim()));
    }
    const std::vector<double> c = autocorrelation(state.coeffs());
    double acc = 0.0;
    for (int r = 1; r < op.dim(); ++r) {
        acc += op[r] * c[r];
    }
    return {acc};
}

SchmidtState mes_state(int d) {
    require_dim(d, "mes_state");
    return SchmidtState::unchecked(std::vector<double>(d, 1.0 / std::sqrt(double(d))));
}

SchmidtState app_state(int d) {
    require_dim(d, "app_state");
    std::vector<double> a(d);
    double norm = 0.0;
    for (int j = 0; j < d; ++j) {
        const double w = 1.0 / ((j + 1.0) * (d - j));
        norm += w;
        a[j] = std::sqrt(w);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (double &x : a) {
        x *= scale;
    }
    return SchmidtState::unchecked(std::move(a));
}

BellValue i_d_mes_closed(int d) {
    require_dim(d, "i_d_mes_closed");
    const int cutoff = sum_cutoff(d);
    const double d3 = double(d) * d * d;
    double acc = 0.0;
    for (int k = 0; k <= cutoff; ++k) {
        const double weight = 1.0 - 2.0 * k / (d - 1);
        const double s_plus = std::sin(pi * (k + 0.25) / d);
        const double s_minus = std::sin(pi * (-k - 1 + 0.25) / d);
        acc += weight * (1.0 / (2.0 * d3 * s_plus * s_plus) - 1.0 / (2.0 * d3 * s_minus * s_minus));
    }
    return {4.0 * d * acc};
}

BellValue i_d_mes_limit(std::int64_t terms, TailCorrection tail) {
    if (terms < 1) {
        throw DomainError("i_d_mes_limit: terms must be >= 1");
    }
    auto term = [](double x) { return 1.0 / ((x + 0.25) * (x + 0.25)) - 1.0 / ((x + 0.75) * (x + 0.75)); };
    // Summed from the small tail end up.
    double acc = 0.0;
    for (std::int64_t k = terms - 1; k >= 0; --k) {
        acc += term(static_cast<double>(k));
    }
    if (tail == TailCorrection::On) {
        const double K = static_cast<double>(terms);
        const double integral = 1.0 / (K + 0.25) - 1.0 / (K + 0.75);
        const double slope =
            -2.0 / std::pow(K + 0.25, 3) + 2.0 / std::pow(K + 0.75, 3);
        acc += integral + 0.5 * term(K) - slope / 12.0;
    }
    return {2.0 / (pi * pi) * acc};
}

double app_vs_eig_error(int d, const LanczosOptions &options) {
    require_dim(d, "app_vs_eig_error");
    const ReducedBellOperator op = reduced_bell_coefficients(d);
    const double eig = max_eigenpair(op, options).eigenvalue;
    const double app = bell_value_schmidt(app_state(d), op).value;
    return (eig - app) / eig;
}

} // namespace cglmp
