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

#include "cglmp/bell_operator.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "cglmp/error.hpp"
#include "cglmp/qudit.hpp"

namespace cglmp {

namespace {

using cd = std::complex<double>;
using std::numbers::pi;

constexpr double kBlockTolerance = 1e-10;

void require_dim(int d, const char *who) {
    if (d < 2) {
        throw InvalidDimension(std::string(who) + ": d must be >= 2, got " + std::to_string(d));
    }
}

cd expi(double angle) { return std::polar(1.0, angle); }

// The braced factor of a Bell matrix element. x = j - m is Alice's index
// difference, y = j' - m' Bob's.
cd setting_sums(int x, int y, int d) {
    const int cutoff = sum_cutoff(d);
    const double w = 2.0 * pi / d;
    cd s1{}, s2{}, s3{}, s4{};
    for (int k = 0; k <= cutoff; ++k) {
        const double weight = 1.0 - 2.0 * k / (d - 1);
        s1 += weight * (expi(w * k * x) - expi(-w * (k + 1) * y));
        s2 += weight * (expi(-w * k * y) - expi(w * (k + 1) * x));
        s3 += weight * (expi(-w * (k + 1) * y) - expi(w * k * x));
        s4 += weight * (expi(w * k * x) - expi(-w * (k + 1) * y));
    }
    const double half = pi / (2.0 * d);
    return expi(half * y) * s1 + expi(-half * y) * s2 + expi(pi / d * x + half * y) * s3 +
           expi(pi / d * x - half * y) * s4;
}

} // namespace

FullBellMatrix::FullBellMatrix(int d, Eigen::MatrixXcd entries)
    : d_(d), entries_(std::move(entries)) {
    require_dim(d, "FullBellMatrix");
    if (entries_.rows() != Eigen::Index(d) * d || entries_.cols() != entries_.rows()) {
        throw DomainError("FullBellMatrix: entries must be d^2 x d^2");
    }
}

ReducedBellOperator::ReducedBellOperator(std::vector<double> coeffs) : b_(std::move(coeffs)) {
    require_dim(static_cast<int>(b_.size()), "ReducedBellOperator");
    for (double x : b_) {
        if (!std::isfinite(x)) {
            throw DomainError("ReducedBellOperator: non-finite coefficient");
        }
    }
}

Eigen::MatrixXd ReducedBellOperator::to_dense() const {
    const int d = dim();
    Eigen::MatrixXd out(d, d);
    for (int m = 0; m < d; ++m) {
        for (int j = 0; j < d; ++j) {
            out(m, j) = b_[std::abs(j - m)];
        }
    }
    return out;
}

FullBellMatrix full_bell_matrix(int d) {
    require_dim(d, "full_bell_matrix");
    if (d > kFullMatrixMaxDim) {
        throw SizeError("full_bell_matrix: d = " + std::to_string(d) + " exceeds the dense limit " +
                        std::to_string(kFullMatrixMaxDim));
    }
    // Every factor depends on (j - m, j' - m') only; tabulate both over
    // differences in [-(d-1), d-1] before filling the d^4 entries.
    const int span = 2 * d - 1;
    auto at = [span, d](int x, int y) { return (x + d - 1) * span + (y + d - 1); };

    std::vector<cd> root_sum(d);
    for (int delta = 0; delta < d; ++delta) {
        cd acc{};
        for (int l = 0; l < d; ++l) {
            acc += expi(2.0 * pi / d * static_cast<double>(mod_d(std::int64_t(delta) * l, d)));
        }
        root_sum[delta] = acc;
    }
    std::vector<cd> brace(static_cast<std::size_t>(span) * span);
    for (int x = -(d - 1); x <= d - 1; ++x) {
        for (int y = -(d - 1); y <= d - 1; ++y) {
            brace[at(x, y)] = setting_sums(x, y, d);
        }
    }

    const int n = d * d;
    const double scale = 1.0 / (double(d) * d);
    Eigen::MatrixXcd entries(n, n);
    for (int m = 0; m < d; ++m) {
        for (int mp = 0; mp < d; ++mp) {
            for (int j = 0; j < d; ++j) {
                for (int jp = 0; jp < d; ++jp) {
                    const int x = j - m;
                    const int y = jp - mp;
                    entries(m * d + mp, j * d + jp) =
                        scale * root_sum[mod_d(x - y, d)] * brace[at(x, y)];
                }
            }
        }
    }
    return {d, std::move(entries)};
}

ReducedBellOperator reduced_bell_coefficients(int d) {
    require_dim(d, "reduced_bell_coefficients");
    std::vector<double> b(d, 0.0);
    for (int r = 1; r < d; ++r) {
        b[r] = 2.0 / ((d - 1) * std::cos(pi * r / (2.0 * d)));
    }
    return ReducedBellOperator(std::move(b));
}

ReducedBellOperator reduced_bell_coefficients_sinesum(int d) {
    require_dim(d, "reduced_bell_coefficients_sinesum");
    const int cutoff = sum_cutoff(d);
    std::vector<double> b(d, 0.0);
    for (int r = 1; r < d; ++r) {
        double acc = 0.0;
        for (int k = 0; k <= cutoff; ++k) {
            acc += (1.0 - 2.0 * k / (d - 1)) * std::sin(2.0 * pi / d * (k + 0.5) * r);
        }
        b[r] = 8.0 / d * std::sin(pi * r / (2.0 * d)) * acc;
    }
    return ReducedBellOperator(std::move(b));
}

ReducedBellOperator extract_first_block(const FullBellMatrix &full) {
    const int d = full.dim();
    std::vector<double> b(d, 0.0);
    for (int r = 0; r < d; ++r) {
        b[r] = full(0, 0, r, r).real();
    }
    for (int m = 0; m < d; ++m) {
        for (int j = 0; j < d; ++j) {
            const cd entry = full(m, m, j, j);
            if (std::abs(entry.imag()) > kBlockTolerance) {
                throw StructureError("extract_first_block: complex entry at (" +
                                     std::to_string(m) + ", " + std::to_string(j) + ")");
            }
            if (std::abs(entry.real() - b[std::abs(j - m)]) > kBlockTolerance) {
                throw StructureError("extract_first_block: block is not symmetric Toeplitz at (" +
                                     std::to_string(m) + ", " + std::to_string(j) + ")");
            }
        }
    }
    return ReducedBellOperator(std::move(b));
}

} // namespace cglmp
