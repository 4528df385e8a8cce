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

#include <span>

namespace cglmp {

struct FitPoint {
    double d = 0.0;
    double value = 0.0;
};

/// value(d) ~ asymptote - amplitude * d^(-exponent)
struct FitModel {
    double asymptote = 0.0;
    double amplitude = 0.0;
    double exponent = 0.0;
    double rms_residual = 0.0;

    [[nodiscard]] double operator()(double d) const;
};

/// Search interval for the exponent.
inline constexpr double kFitExponentMin = 1e-4;
inline constexpr double kFitExponentMax = 4.0;

/**
 * Least-squares fit of the power-law model. For fixed exponent the model is
 * linear in (asymptote, amplitude) and is solved in closed form; the
 * exponent minimizes the rms residual, located by a grid scan refined with
 * golden-section search. Deterministic.
 *
 * Needs at least 4 points with distinct positive d and non-constant values;
 * throws FitError otherwise.
 */
FitModel fit_power_law(std::span<const FitPoint> points);

} // namespace cglmp
