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


#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cglmp/bell_operator.hpp"
#include "cglmp/spectral.hpp"
#include "cglmp/states.hpp"

namespace {

using cglmp::ConvolutionPath;

void matvec(benchmark::State &state, ConvolutionPath path) {
    const int d = static_cast<int>(state.range(0));
    const cglmp::ToeplitzMatVec op(cglmp::reduced_bell_coefficients(d), path);
    std::vector<double> v(d, 1.0 / std::sqrt(double(d))), w(d);
    for (auto _ : state) {
        op.apply(v, w);
        benchmark::DoNotOptimize(w.data());
    }
    state.SetComplexityN(d);
}

void BM_MatVecDirect(benchmark::State &state) { matvec(state, ConvolutionPath::Direct); }
void BM_MatVecFft(benchmark::State &state) { matvec(state, ConvolutionPath::Fft); }

void BM_MaxEigenpair(benchmark::State &state) {
    const auto op = cglmp::reduced_bell_coefficients(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cglmp::max_eigenpair(op).eigenvalue);
}

void BM_DenseMaxEigenpair(benchmark::State &state) {
    const auto op = cglmp::reduced_bell_coefficients(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cglmp::dense_max_eigenpair(op).eigenvalue);
}

void BM_AppBellValue(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const auto op = cglmp::reduced_bell_coefficients(d);
    const auto s = cglmp::app_state(d);
    for (auto _ : state) benchmark::DoNotOptimize(cglmp::bell_value_schmidt(s, op).value);
}

} // namespace

BENCHMARK(BM_MatVecDirect)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_MatVecFft)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK(BM_MaxEigenpair)->Arg(100)->Arg(1000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DenseMaxEigenpair)->Arg(100)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AppBellValue)->Arg(8000)->Arg(600000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
