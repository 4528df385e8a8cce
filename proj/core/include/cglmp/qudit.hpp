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
 * @file qudit.hpp
 * Two-qudit state types, measurement settings and the integer helpers that
 * define the CGLMP correlation functions.
 */

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cglmp {

/// Normalization tolerance applied when validating states.
inline constexpr double kNormTolerance = 1e-12;

/// Mathematical modulus: the representative of x in [0, d-1].
std::int64_t mod_d(std::int64_t x, std::int64_t d);

/// Sign function with epsilon(0) == 1.
int epsilon(std::int64_t x);

/// Summation cutoff of the CGLMP weighted sums, floor(d/2 - 1).
int sum_cutoff(int d);

/**
 * Weight f^{ij}(m, n) = S - M(eps(i - j) (m + n), d) with S = (d-1)/2.
 *
 * Setting indices i, j are 1-based (1 or 2); outcomes m, n lie in [0, d-1].
 */
double f_coeff(int i, int j, int m, int n, int d);

/// Real Schmidt-form state sum_j a_j |jj>.
class SchmidtState {
  public:
    /// Validates finiteness, d >= 2 and unit norm within kNormTolerance.
    explicit SchmidtState(std::vector<double> coeffs);

    /// Skips the normalization check. Only for internal paths that build
    /// coefficients already normalized; finiteness is not checked either.
    static SchmidtState unchecked(std::vector<double> coeffs);

    [[nodiscard]] int dim() const { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] std::span<const double> coeffs() const { return coeffs_; }
    [[nodiscard]] double operator[](std::size_t j) const { return coeffs_[j]; }

  private:
    struct NoCheck {};
    SchmidtState(std::vector<double> coeffs, NoCheck);

    std::vector<double> coeffs_;
};

/// General pure state sum_{j,j'} alpha_{jj'} |j j'>; row index is Alice's j.
class GeneralState {
  public:
    explicit GeneralState(Eigen::MatrixXcd coeffs);
    static GeneralState unchecked(Eigen::MatrixXcd coeffs);

    /// Embeds a Schmidt state as the diagonal coefficient matrix.
    static GeneralState from_schmidt(const SchmidtState &state);

    [[nodiscard]] int dim() const { return static_cast<int>(coeffs_.rows()); }
    [[nodiscard]] const Eigen::MatrixXcd &coeffs() const { return coeffs_; }

  private:
    struct NoCheck {};
    GeneralState(Eigen::MatrixXcd coeffs, NoCheck);

    Eigen::MatrixXcd coeffs_;
};

/// Phase vectors of the two multiport settings on each side (radians).
/// Alice uses phi1/phi2, Bob uses psi1/psi2.
class MeasurementSettings {
  public:
    MeasurementSettings(std::vector<double> phi1, std::vector<double> phi2,
                        std::vector<double> psi1, std::vector<double> psi2);

    [[nodiscard]] int dim() const { return static_cast<int>(phi1_.size()); }

    /// Alice's phases for setting a in {1, 2}.
    [[nodiscard]] std::span<const double> alice(int a) const;
    /// Bob's phases for setting b in {1, 2}.
    [[nodiscard]] std::span<const double> bob(int b) const;

    [[nodiscard]] std::span<const double> phi1() const { return phi1_; }
    [[nodiscard]] std::span<const double> phi2() const { return phi2_; }
    [[nodiscard]] std::span<const double> psi1() const { return psi1_; }
    [[nodiscard]] std::span<const double> psi2() const { return psi2_; }

  private:
    std::vector<double> phi1_, phi2_, psi1_, psi2_;
};

/// phi1(j) = 0, phi2(j) = j pi/d, psi1(j) = j pi/(2d), psi2(j) = -j pi/(2d).
MeasurementSettings make_optimal_settings(int d);

/// Value of the Bell expression I_d.
struct BellValue {
    double value = 0.0;

    friend auto operator<=>(const BellValue &, const BellValue &) = default;
};

} // namespace cglmp
