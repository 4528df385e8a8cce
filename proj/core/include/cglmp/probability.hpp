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

#pragma once

/**
 * @file probability.hpp
 * Joint outcome probabilities of two multiport measurements, the CGLMP
 * correlation functions built on them, and the resulting Bell value.
 *
 * This is the direct evaluation of the Bell expression from its
 * probabilistic definition; it never uses the Bell operator and serves as
 * the independent check of the spectral route. Cost is O(d^3) per table.
 */

#include <Eigen/Dense>

#include "cglmp/qudit.hpp"

namespace cglmp {

/// Tolerance below zero under which a probability is treated as rounding.
inline constexpr double kProbabilityClip = 1e-12;
/// Allowed deviation of a table's total from 1.
inline constexpr double kProbabilitySumTolerance = 1e-10;

/// P(A_a = k, B_b = l) for k, l in [0, d-1].
class JointProbabilityTable {
  public:
    explicit JointProbabilityTable(Eigen::MatrixXd entries);

    [[nodiscard]] int dim() const { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] double operator()(int k, int l) const { return entries_(k, l); }
    [[nodiscard]] const Eigen::MatrixXd &entries() const { return entries_; }

  private:
    Eigen::MatrixXd entries_;
};

/**
 * Probabilities for Alice measuring setting a and Bob setting b.
 *
 * Port k of Alice's multiport and port l of Bob's have amplitude
 * (1/d) sum_{j,j'} alpha_{jj'} exp(i[phi_a(j) + psi_b(j') + 2 pi (j k - j' l) / d]).
 */
JointProbabilityTable joint_probabilities(const GeneralState &state,
                                          const MeasurementSettings &settings, int a, int b);

/**
 * Correlation function Q_ij = (1/S) sum_{m,n} f^{ij}(m, n) P(A_i = m, B_j = n).
 *
 * Bob's outcome n is read from output port (-n mod d). With the port
 * convention of joint_probabilities this is the labelling under which the
 * expectation value is carried by the |jj> subspace blocks of the Bell
 * operator; for d = 2 it coincides with the identity labelling.
 */
double correlation_q(const GeneralState &state, const MeasurementSettings &settings, int i,
                     int j);

/// I_d = Q_11 + Q_12 - Q_21 + Q_22.
BellValue bell_value_probabilistic(const GeneralState &state, const MeasurementSettings &settings);

} // namespace cglmp
