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

#include "cglmp/probability.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cglmp/error.hpp"

namespace cglmp {

namespace {

using cd = std::complex<double>;

// exp(i (phase(j) + sign 2 pi j k / d)) as a d x d matrix indexed [j, k].
// The root of unity is taken at (j k mod d) to keep the angle small.
Eigen::MatrixXcd port_matrix(std::span<const double> phase, int d, int sign) {
    Eigen::MatrixXcd out(d, d);
    const double step = 2.0 * std::numbers::pi / d;
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            const auto jk = mod_d(static_cast<std::int64_t>(sign) * j * k, d);
            out(j, k) = std::polar(1.0, phase[j] + step * static_cast<double>(jk));
        }
    }
    return out;
}

void check_dims(const GeneralState &state, const MeasurementSettings &settings) {
    if (state.dim() != settings.dim()) {
        throw DomainError("state dimension " + std::to_string(state.dim()) +
                          " does not match settings dimension " +
                          std::to_string(settings.dim()));
    }
}

} // namespace

JointProbabilityTable::JointProbabilityTable(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 2) {
        throw DomainError("JointProbabilityTable: must be square with d >= 2");
    }
    for (Eigen::Index k = 0; k < entries_.rows(); ++k) {
        for (Eigen::Index l = 0; l < entries_.cols(); ++l) {
            double &p = entries_(k, l);
            if (!(p >= -kProbabilityClip)) {
                throw StructureError("JointProbabilityTable: negative probability " +
                                     std::to_string(p));
            }
            if (p < 0.0) {
                p = 0.0;
            }
        }
    }
    const double total = entries_.sum();
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
        throw StructureError("JointProbabilityTable: probabilities sum to " +
                             std::to_string(total));
    }
}

JointProbabilityTable joint_probabilities(const GeneralState &state,
                                          const MeasurementSettings &settings, int a, int b) {
    check_dims(state, settings);
    const int d = state.dim();
    const Eigen::MatrixXcd alice = port_matrix(settings.alice(a), d, +1);
    const Eigen::MatrixXcd bob = port_matrix(settings.bob(b), d, -1);
    // amplitude(k, l) = (1/d) sum_{j,j'} alice(j, k) alpha(j, j') bob(j', l)
    const Eigen::MatrixXcd amplitude = alice.transpose() * state.coeffs() * bob / double(d);
    return JointProbabilityTable(amplitude.cwiseAbs2());
}

double correlation_q(const GeneralState &state, const MeasurementSettings &settings, int i,
                     int j) {
    const JointProbabilityTable table = joint_probabilities(state, settings, i, j);
    const int d = table.dim();
    double acc = 0.0;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            acc += f_coeff(i, j, m, n, d) * table(m, static_cast<int>(mod_d(-n, d)));
        }
    }
    return acc / (0.5 * (d - 1));
}

BellValue bell_value_probabilistic(const GeneralState &state,
                                   const MeasurementSettings &settings) {
    check_dims(state, settings);
    return {correlation_q(state, settings, 1, 1) + correlation_q(state, settings, 1, 2) -
            correlation_q(state, settings, 2, 1) + correlation_q(state, settings, 2, 2)};
}

} // namespace cglmp
