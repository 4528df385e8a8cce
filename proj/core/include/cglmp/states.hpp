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
 * @file states.hpp
 * Bell values of Schmidt states against the reduced operator, the two named
 * state families, and closed forms for the maximally entangled state.
 */

#include <cstdint>

#include "cglmp/bell_operator.hpp"
#include "cglmp/qudit.hpp"
#include "cglmp/spectral.hpp"

namespace cglmp {

/**
 * <psi| B |psi> = sum_{r>=1} b[r] c[r], with c the autocorrelation of the
 * Schmidt coefficients. O(d log d) above kFastPathThreshold.
 */
BellValue bell_value_schmidt(const SchmidtState &state, const ReducedBellOperator &op);

/// Maximally entangled state, a_j = 1/sqrt(d).
SchmidtState mes_state(int d);

/// a_j = 1/sqrt(N (j+1)(d-j)), N = sum_j 1/((j+1)(d-j)).
SchmidtState app_state(int d);

/// Closed-form Bell value of the maximally entangled state.
BellValue i_d_mes_closed(int d);

enum class TailCorrection { Off, On };

/**
 * d -> infinity limit of i_d_mes_closed,
 * (2/pi^2) sum_k [1/(k+1/4)^2 - 1/(k+3/4)^2] = 32 G / pi^2,
 * truncated after `terms` terms. With TailCorrection::On the remainder is
 * estimated by Euler-Maclaurin (integral, half endpoint and first
 * derivative terms), which is accurate to O(terms^-5).
 */
BellValue i_d_mes_limit(std::int64_t terms, TailCorrection tail = TailCorrection::On);

/// (I_eig - I_app) / I_eig for the reduced operator of dimension d.
double app_vs_eig_error(int d, const LanczosOptions &options = {});

} // namespace cglmp
