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
 * @file bell_operator.hpp
 * Bell operator of the CGLMP expression under the optimal multiport
 * settings: the full d^2 x d^2 matrix (validation only) and the reduced
 * symmetric Toeplitz operator on span{|jj>}.
 */

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cglmp {

/// Largest d for which the dense d^2 x d^2 operator may be built.
inline constexpr int kFullMatrixMaxDim = 64;

/// Dense Bell operator; row (m, m') and column (j, j') flatten to m*d + m'.
class FullBellMatrix {
  public:
    FullBellMatrix(int d, Eigen::MatrixXcd entries);

    [[nodiscard]] int dim() const { return d_; }
    [[nodiscard]] const Eigen::MatrixXcd &entries() const { return entries_; }
    [[nodiscard]] std::complex<double> operator()(int m, int mp, int j, int jp) const {
        return entries_(m * d_ + mp, j * d_ + jp);
    }

  private:
    int d_;
    Eigen::MatrixXcd entries_;
};

/// Symmetric Toeplitz operator with entry (m, j) = b[|j - m|].
class ReducedBellOperator {
  public:
    /// Requires at least two finite coefficients.
    explicit ReducedBellOperator(std::vector<double> coeffs);

    [[nodiscard]] int dim() const { return static_cast<int>(b_.size()); }
    [[nodiscard]] std::span<const double> coeffs() const { return b_; }
    [[nodiscard]] double operator[](std::size_t r) const { return b_[r]; }

    /// Dense d x d matrix. Intended for small-d checks only.
    [[nodiscard]] Eigen::MatrixXd to_dense() const;

  private:
    std::vector<double> b_;
};

/**
 * Full Bell operator, each entry evaluated term by term: the explicit sum
 * over l of the roots of unity times the four weighted setting sums.
 * Requires 2 <= d <= kFullMatrixMaxDim.
 */
FullBellMatrix full_bell_matrix(int d);

/// b[0] = 0, b[r] = 2 / ((d-1) cos(pi r / (2d))).
ReducedBellOperator reduced_bell_coefficients(int d);

/// b[r] = (8/d) sin(pi r/(2d)) sum_{k=0}^{l} (1 - 2k/(d-1)) sin(2 pi (k + 1/2) r / d).
ReducedBellOperator reduced_bell_coefficients_sinesum(int d);

/**
 * Reads the block on span{|00>, ..., |d-1 d-1>} and returns its Toeplitz
 * coefficients. Throws StructureError if the block is not real, symmetric
 * and Toeplitz within 1e-10.
 */
ReducedBellOperator extract_first_block(const FullBellMatrix &full);

} // namespace cglmp
