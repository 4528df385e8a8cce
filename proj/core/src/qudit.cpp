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

#include "cglmp/qudit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cglmp/error.hpp"

namespace cglmp {

namespace {

void check_setting_index(int i, const char *what) {
    if (i != 1 && i != 2) {
        throw DomainError(std::string(what) + " setting index must be 1 or 2, got " +
                          std::to_string(i));
    }
}

} // namespace

std::int64_t mod_d(std::int64_t x, std::int64_t d) {
    if (d <= 0) {
        throw InvalidDimension("mod_d: modulus must be positive, got " + std::to_string(d));
    }
    const std::int64_t r = x % d;
    return r < 0 ? r + d : r;
}

int epsilon(std::int64_t x) { return x >= 0 ? 1 : -1; }

int sum_cutoff(int d) {
    // floor(d/2 - 1); for d >= 2 this is d/2 - 1 in integer arithmetic.
    if (d < 2) {
        throw InvalidDimension("sum_cutoff: d must be >= 2, got " + std::to_string(d));
    }
    return d / 2 - 1;
}

double f_coeff(int i, int j, int m, int n, int d) {
    if (d < 2) {
        throw InvalidDimension("f_coeff: d must be >= 2, got " + std::to_string(d));
    }
    check_setting_index(i, "f_coeff: Alice");
    check_setting_index(j, "f_coeff: Bob");
    if (m < 0 || m >= d || n < 0 || n >= d) {
        throw DomainError("f_coeff: outcomes must lie in [0, d-1]");
    }
    const double spin = 0.5 * (d - 1);
    const std::int64_t arg = static_cast<std::int64_t>(epsilon(i - j)) * (m + n);
    return spin - static_cast<double>(mod_d(arg, d));
}

// --- SchmidtState ---------------------------------------------------------

SchmidtState::SchmidtState(std::vector<double> coeffs, NoCheck) : coeffs_(std::move(coeffs)) {}

SchmidtState::SchmidtState(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw InvalidDimension("SchmidtState: d must be >= 2");
    }
    // Extended accumulator: for d ~ 1e5 a plain double sum drifts past the tolerance.
    long double acc = 0.0L;
    for (double a : coeffs_) {
        if (!std::isfinite(a)) {
            throw DomainError("SchmidtState: non-finite coefficient");
        }
        acc += static_cast<long double>(a) * a;
    }
    const double norm2 = static_cast<double>(acc);
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw DomainError("SchmidtState: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

SchmidtState SchmidtState::unchecked(std::vector<double> coeffs) {
    return SchmidtState(std::move(coeffs), NoCheck{});
}

// --- GeneralState ---------------------------------------------------------

GeneralState::GeneralState(Eigen::MatrixXcd coeffs, NoCheck) : coeffs_(std::move(coeffs)) {}

GeneralState::GeneralState(Eigen::MatrixXcd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != coeffs_.cols()) {
        throw DomainError("GeneralState: coefficient matrix must be square");
    }
    if (coeffs_.rows() < 2) {
        throw InvalidDimension("GeneralState: d must be >= 2");
    }
    if (!coeffs_.allFinite()) {
        throw DomainError("GeneralState: non-finite coefficient");
    }
    const double norm2 = coeffs_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw DomainError("GeneralState: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

GeneralState GeneralState::unchecked(Eigen::MatrixXcd coeffs) {
    return GeneralState(std::move(coeffs), NoCheck{});
}

GeneralState GeneralState::from_schmidt(const SchmidtState &state) {
    const int d = state.dim();
    Eigen::MatrixXcd alpha = Eigen::MatrixXcd::Zero(d, d);
    for (int j = 0; j < d; ++j) {
        alpha(j, j) = state[j];
    }
    return GeneralState(std::move(alpha), NoCheck{});
}

// --- MeasurementSettings --------------------------------------------------

MeasurementSettings::MeasurementSettings(std::vector<double> phi1, std::vector<double> phi2,
                                         std::vector<double> psi1, std::vector<double> psi2)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)), psi1_(std::move(psi1)),
      psi2_(std::move(psi2)) {
    const std::size_t d = phi1_.size();
    if (d < 2) {
        throw InvalidDimension("MeasurementSettings: d must be >= 2");
    }
    if (phi2_.size() != d || psi1_.size() != d || psi2_.size() != d) {
        throw DomainError("MeasurementSettings: all phase vectors must have length d");
    }
    for (const auto *v : {&phi1_, &phi2_, &psi1_, &psi2_}) {
        for (double x : *v) {
            if (!std::isfinite(x)) {
                throw DomainError("MeasurementSettings: non-finite phase");
            }
        }
    }
}

std::span<const double> MeasurementSettings::alice(int a) const {
    check_setting_index(a, "MeasurementSettings: Alice");
    return a == 1 ? std::span<const double>(phi1_) : std::span<const double>(phi2_);
}

std::span<const double> MeasurementSettings::bob(int b) const {
    check_setting_index(b, "MeasurementSettings: Bob");
    return b == 1 ? std::span<const double>(psi1_) : std::span<const double>(psi2_);
}

MeasurementSettings make_optimal_settings(int d) {
    if (d < 2) {
        throw InvalidDimension("make_optimal_settings: d must be >= 2, got " + std::to_string(d));
    }
    using std::numbers::pi;
    std::vector<double> phi1(d, 0.0), phi2(d), psi1(d), psi2(d);
    for (int j = 0; j < d; ++j) {
        phi2[j] = j * pi / d;
        psi1[j] = j * pi / (2.0 * d);
        psi2[j] = -psi1[j];
    }
    return {std::move(phi1), std::move(phi2), std::move(psi1), std::move(psi2)};
}

} // namespace cglmp
