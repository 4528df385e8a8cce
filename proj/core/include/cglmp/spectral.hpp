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
 * @file spectral.hpp
 * Largest eigenpair of the reduced Bell operator.
 *
 * The operator is only ever applied through its coefficient vector: a direct
 * O(d^2) Toeplitz product for moderate d and a circulant-embedded FFT
 * convolution above kFastPathThreshold. The eigenpair comes from restarted
 * Lanczos with full reorthogonalization, seeded with the approximate
 * state a_j ~ 1/sqrt((j+1)(d-j)); a dense solver is provided for d <= 512
 * as a reference.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cglmp/bell_operator.hpp"
#include "cglmp/error.hpp"

namespace cglmp {

namespace detail {
class RealFft;
}

/// Above this length the FFT paths are used by default.
inline constexpr int kFastPathThreshold = 4096;
/// Largest d accepted by dense_max_eigenpair.
inline constexpr int kDenseMaxDim = 512;
/// Seed of the random start used when the Lanczos process breaks down.
inline constexpr std::uint64_t kFallbackSeed = 0x5eed'c61f'2007ULL;

enum class ConvolutionPath {
    Auto,   ///< Direct for d <= kFastPathThreshold, FFT above.
    Direct, ///< O(d^2) summation.
    Fft,    ///< Zero-padded FFT convolution.
};

/**
 * Reusable w = B v for a fixed operator. Holds the circulant spectrum and FFT
 * buffers when on the FFT path. apply() reuses internal buffers, so one
 * instance must not be shared between threads.
 */
class ToeplitzMatVec {
  public:
    explicit ToeplitzMatVec(const ReducedBellOperator &op, ConvolutionPath path = ConvolutionPath::Auto);
    ~ToeplitzMatVec();
    ToeplitzMatVec(ToeplitzMatVec &&) noexcept;
    ToeplitzMatVec &operator=(ToeplitzMatVec &&) noexcept;

    [[nodiscard]] int dim() const { return static_cast<int>(b_.size()); }
    [[nodiscard]] bool uses_fft() const { return fft_ != nullptr; }

    void apply(std::span<const double> v, std::span<double> w) const;

  private:
    std::vector<double> b_;
    std::vector<double> mirrored_; // b[|k - (d-1)|], direct path only
    std::vector<std::complex<double>> circulant_spectrum_;
    std::unique_ptr<detail::RealFft> fft_;
};

/// w[m] = sum_j b[|m - j|] v[j].
std::vector<double> toeplitz_matvec(const ReducedBellOperator &op, std::span<const double> v,
                                    ConvolutionPath path = ConvolutionPath::Auto);

/// c[r] = 2 sum_{m=0}^{d-1-r} v[m] v[m+r] for r in [0, d-1].
std::vector<double> autocorrelation(std::span<const double> v,
                                    ConvolutionPath path = ConvolutionPath::Auto);

struct EigenResult {
    double eigenvalue = 0.0;
    /// Unit norm, signed so that the entries sum to a positive number.
    std::vector<double> eigenvector;
    /// ||B v - lambda v||_2
    double residual = 0.0;
    /// Operator applications (0 for the dense solver).
    int iterations = 0;
};

/// Raised when max_eigenpair exhausts its iteration budget.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string &what, EigenResult best)
        : Error(what), best_(std::move(best)) {}

    /// Best Ritz pair reached before giving up.
    [[nodiscard]] const EigenResult &best() const { return best_; }

  private:
    EigenResult best_;
};

struct LanczosOptions {
    /// Absolute residual target ||B v - lambda v||.
    double tol = 1e-10;
    /// Budget of operator applications, the final residual checks included.
    int max_iter = 500;
    /// Krylov basis size per restart cycle.
    int krylov_dim = 64;
    ConvolutionPath path = ConvolutionPath::Auto;
};

/// Largest eigenpair by restarted Lanczos. Throws ConvergenceError on budget exhaustion.
EigenResult max_eigenpair(const ReducedBellOperator &op, const LanczosOptions &options = {});

inline EigenResult max_eigenpair(const ReducedBellOperator &op, double tol, int max_iter) {
    LanczosOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    return max_eigenpair(op, options);
}

/// Largest eigenpair by dense symmetric eigendecomposition; d <= kDenseMaxDim.
EigenResult dense_max_eigenpair(const ReducedBellOperator &op);

} // namespace cglmp
