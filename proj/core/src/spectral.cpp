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

#include "cglmp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "fft.hpp"

namespace cglmp {

namespace {

bool use_fft(std::size_t n, ConvolutionPath path) {
    switch (path) {
    case ConvolutionPath::Direct:
        return false;
    case ConvolutionPath::Fft:
        return true;
    case ConvolutionPath::Auto:
        break;
    }
    return n > static_cast<std::size_t>(kFastPathThreshold);
}

double dot(std::span<const double> x, std::span<const double> y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void sign_normalize(std::vector<double> &v) {
    const double n = norm(v);
    const double sign = std::accumulate(v.begin(), v.end(), 0.0) < 0.0 ? -1.0 : 1.0;
    for (double &x : v) {
        x *= sign / n;
    }
}

// a_j proportional to 1/sqrt((j+1)(d-j)): symmetric, positive, and close to
// the Perron vector for every d.
std::vector<double> approximate_start(int d) {
    std::vector<double> v(d);
    for (int j = 0; j < d; ++j) {
        v[j] = 1.0 / std::sqrt((j + 1.0) * (d - j));
    }
    return v;
}

std::vector<double> random_start(int d) {
    std::mt19937_64 rng(kFallbackSeed);
    std::uniform_real_distribution<double> unit(0.5, 1.5);
    std::vector<double> v(d);
    for (double &x : v) {
        x = unit(rng);
    }
    return v;
}

struct Cycle {
    double ritz_value = 0.0;
    std::vector<double> ritz_vector;
    bool invariant = false; // Krylov space became invariant
};

// One Lanczos cycle of at most `steps` operator applications starting at v.
Cycle lanczos_cycle(const ToeplitzMatVec &op, std::span<const double> v, int steps,
                    double tol, int &applied) {
    const int d = op.dim();
    Eigen::MatrixXd basis(d, steps);
    Eigen::Map<const Eigen::VectorXd> start(v.data(), d);
    basis.col(0) = start / start.norm();

    std::vector<double> alpha, beta;
    Eigen::VectorXd w(d);
    Eigen::VectorXd ritz;
    double theta = 0.0;
    bool invariant = false;
    int k = 0;
    for (; k < steps; ++k) {
        op.apply({basis.col(k).data(), std::size_t(d)}, {w.data(), std::size_t(d)});
        ++applied;
        const double a = basis.col(k).dot(w);
        alpha.push_back(a);
        w -= a * basis.col(k);
        if (k > 0) {
            w -= beta[k - 1] * basis.col(k - 1);
        }
        // Full reorthogonalization, two passes.
        for (int pass = 0; pass < 2; ++pass) {
            const Eigen::VectorXd overlap = basis.leftCols(k + 1).transpose() * w;
            w -= basis.leftCols(k + 1) * overlap;
        }
        const double b = w.norm();

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), k + 1);
        const Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(beta.data(), k);
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        theta = tri.eigenvalues()(k);
        ritz = tri.eigenvectors().col(k);

        const double estimate = b * std::abs(ritz(k));
        if (b <= 1e-13 * std::max(1.0, std::abs(theta))) {
            invariant = true;
            ++k;
            break;
        }
        if (estimate <= 0.1 * tol || k + 1 == steps) {
            ++k;
            break;
        }
        beta.push_back(b);
        basis.col(k + 1) = w / b;
    }

    Eigen::VectorXd y = basis.leftCols(k) * ritz;
    Cycle out;
    out.ritz_value = theta;
    out.ritz_vector.assign(y.data(), y.data() + d);
    out.invariant = invariant;
    return out;
}

} // namespace

// --- ToeplitzMatVec ---------------------------------------------------------

ToeplitzMatVec::ToeplitzMatVec(const ReducedBellOperator &op, ConvolutionPath path)
    : b_(op.coeffs().begin(), op.coeffs().end()) {
    const std::size_t d = b_.size();
    if (!use_fft(d, path)) {
        mirrored_.resize(2 * d - 1);
        for (std::size_t k = 0; k < mirrored_.size(); ++k) {
            mirrored_[k] = b_[k < d ? d - 1 - k : k - (d - 1)];
        }
        return;
    }
    // Embed the d x d Toeplitz matrix in an n x n circulant, n >= 2d.
    fft_ = std::make_unique<detail::RealFft>(detail::next_pow2(2 * d));
    const std::size_t n = fft_->size();
    auto column = fft_->real();
    std::fill(column.begin(), column.end(), 0.0);
    column[0] = b_[0];
    for (std::size_t r = 1; r < d; ++r) {
        column[r] = b_[r];
        column[n - r] = b_[r];
    }
    fft_->forward();
    const auto spec = fft_->spectrum();
    circulant_spectrum_.assign(spec.begin(), spec.end());
    for (auto &z : circulant_spectrum_) {
        z /= static_cast<double>(n);
    }
}

ToeplitzMatVec::~ToeplitzMatVec() = default;
ToeplitzMatVec::ToeplitzMatVec(ToeplitzMatVec &&) noexcept = default;
ToeplitzMatVec &ToeplitzMatVec::operator=(ToeplitzMatVec &&) noexcept = default;

void ToeplitzMatVec::apply(std::span<const double> v, std::span<double> w) const {
    const std::size_t d = b_.size();
    if (v.size() != d || w.size() != d) {
        throw DomainError("toeplitz_matvec: vector length " + std::to_string(v.size()) +
                          " does not match operator dimension " + std::to_string(d));
    }
    if (!fft_) {
        // Row m of the matrix is the contiguous window mirrored_[d-1-m, 2d-1-m).
        const Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(d));
        for (std::size_t m = 0; m < d; ++m) {
            const Eigen::Map<const Eigen::VectorXd> row(mirrored_.data() + (d - 1 - m), static_cast<Eigen::Index>(d));
            w[m] = row.dot(x);
        }
        return;
    }
    auto buffer = fft_->real();
    std::copy(v.begin(), v.end(), buffer.begin());
    std::fill(buffer.begin() + d, buffer.end(), 0.0);
    fft_->forward();
    auto spec = fft_->spectrum();
    for (std::size_t i = 0; i < spec.size(); ++i) {
        spec[i] *= circulant_spectrum_[i];
    }
    fft_->backward();
    std::copy(buffer.begin(), buffer.begin() + d, w.begin());
}

std::vector<double> toeplitz_matvec(const ReducedBellOperator &op, std::span<const double> v,
                                    ConvolutionPath path) {
    if (v.size() != static_cast<std::size_t>(op.dim())) {
        throw DomainError("toeplitz_matvec: vector length " + std::to_string(v.size()) +
                          " does not match operator dimension " + std::to_string(op.dim()));
    }
    std::vector<double> w(v.size());
    ToeplitzMatVec(op, path).apply(v, w);
    return w;
}

std::vector<double> autocorrelation(std::span<const double> v, ConvolutionPath path) {
    const std::size_t d = v.size();
    std::vector<double> c(d, 0.0);
    if (d == 0) {
        return c;
    }
    if (!use_fft(d, path)) {
        for (std::size_t r = 0; r < d; ++r) {
            double acc = 0.0;
            for (std::size_t m = 0; m + r < d; ++m) {
                acc += v[m] * v[m + r];
            }
            c[r] = 2.0 * acc;
        }
        return c;
    }
    // Power spectrum of the zero-padded vector is the transform of its
    // autocorrelation; padding to >= 2d removes the wrap-around.
    detail::RealFft fft(detail::next_pow2(2 * d));
    auto buffer = fft.real();
    std::copy(v.begin(), v.end(), buffer.begin());
    std::fill(buffer.begin() + d, buffer.end(), 0.0);
    fft.forward();
    for (auto &z : fft.spectrum()) {
        z = std::norm(z);
    }
    fft.backward();
    const double scale = 2.0 / static_cast<double>(fft.size());
    for (std::size_t r = 0; r < d; ++r) {
        c[r] = scale * buffer[r];
    }
    return c;
}

// --- eigensolvers -----------------------------------------------------------

EigenResult max_eigenpair(const ReducedBellOperator &op, const LanczosOptions &options) {
    if (!(options.tol > 0.0)) {
        throw DomainError("max_eigenpair: tol must be positive");
    }
    if (options.max_iter < 2) {
        throw DomainError("max_eigenpair: max_iter must be at least 2");
    }
    if (options.krylov_dim < 2) {
        throw DomainError("max_eigenpair: krylov_dim must be at least 2");
    }
    const int d = op.dim();
    const ToeplitzMatVec matvec(op, options.path);
    std::vector<double> scratch(d);

    EigenResult best;
    best.residual = std::numeric_limits<double>::infinity();
    int applied = 0;
    bool fell_back = false;
    std::vector<double> start = approximate_start(d);

    while (true) {
        // Keep one application in reserve for the explicit residual.
        const int steps = std::min({options.krylov_dim, d, options.max_iter - applied - 1});
        if (steps < 1) {
            break;
        }
        Cycle cycle = lanczos_cycle(matvec, start, steps, options.tol, applied);

        std::vector<double> &y = cycle.ritz_vector;
        const bool finite = std::all_of(y.begin(), y.end(), [](double x) { return std::isfinite(x); });
        if (finite && norm(y) > 0.0) {
            sign_normalize(y);
            // Rayleigh quotient of the normalized Ritz vector, then its residual.
            matvec.apply(y, scratch);
            ++applied;
            const double lambda = dot(y, scratch);
            double acc = 0.0;
            for (int i = 0; i < d; ++i) {
                const double r = scratch[i] - lambda * y[i];
                acc += r * r;
            }
            const double residual = std::sqrt(acc);
            if (residual < best.residual) {
                best = EigenResult{lambda, y, residual, applied};
            }
            if (residual <= options.tol) {
                best.iterations = applied;
                return best;
            }
            if (!cycle.invariant) {
                start = std::move(y);
                continue;
            }
        }
        // Breakdown without convergence: restart once from a seeded random vector.
        if (fell_back) {
            break;
        }
        fell_back = true;
        start = random_start(d);
    }
    best.iterations = applied;
    throw ConvergenceError("max_eigenpair: no convergence to " + std::to_string(options.tol) +
                               " within " + std::to_string(options.max_iter) +
                               " operator applications (best residual " +
                               std::to_string(best.residual) + ")",
                           std::move(best));
}

EigenResult dense_max_eigenpair(const ReducedBellOperator &op) {
    const int d = op.dim();
    if (d > kDenseMaxDim) {
        throw SizeError("dense_max_eigenpair: d = " + std::to_string(d) + " exceeds " +
                        std::to_string(kDenseMaxDim));
    }
    const Eigen::MatrixXd dense = op.to_dense();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw StructureError("dense_max_eigenpair: eigendecomposition failed");
    }
    const Eigen::VectorXd top = solver.eigenvectors().col(d - 1);
    EigenResult out;
    out.eigenvalue = solver.eigenvalues()(d - 1);
    out.eigenvector.assign(top.data(), top.data() + d);
    sign_normalize(out.eigenvector);
    const Eigen::Map<const Eigen::VectorXd> v(out.eigenvector.data(), d);
    out.residual = (dense * v - out.eigenvalue * v).norm();
    out.iterations = 0;
    return out;
}

} // namespace cglmp
