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

#include "fft.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

namespace cglmp::detail {

namespace {

// fftw_plan_* is not re-entrant; execution is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

std::size_t next_pow2(std::size_t n) { return n <= 1 ? 1 : std::bit_ceil(n); }

struct RealFft::Impl {
    double *real = nullptr;
    fftw_complex *spectrum = nullptr;
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;

    ~Impl() {
        std::lock_guard lock(planner_mutex());
        if (forward) fftw_destroy_plan(forward);
        if (backward) fftw_destroy_plan(backward);
        fftw_free(real);
        fftw_free(spectrum);
    }
};

RealFft::RealFft(std::size_t n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n == 0) {
        throw std::invalid_argument("RealFft: length must be positive");
    }
    impl_->real = fftw_alloc_real(n);
    impl_->spectrum = fftw_alloc_complex(n / 2 + 1);
    if (!impl_->real || !impl_->spectrum) {
        throw std::bad_alloc();
    }
    const int len = static_cast<int>(n);
    // FFTW_ESTIMATE keeps the chosen algorithm, and so the rounding, independent of timing.
    std::lock_guard lock(planner_mutex());
    impl_->forward = fftw_plan_dft_r2c_1d(len, impl_->real, impl_->spectrum, FFTW_ESTIMATE);
    impl_->backward = fftw_plan_dft_c2r_1d(len, impl_->spectrum, impl_->real, FFTW_ESTIMATE);
    if (!impl_->forward || !impl_->backward) {
        throw std::runtime_error("RealFft: FFTW planning failed");
    }
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft &&) noexcept = default;
RealFft &RealFft::operator=(RealFft &&) noexcept = default;

std::span<double> RealFft::real() const { return {impl_->real, n_}; }

std::span<std::complex<double>> RealFft::spectrum() const {
    return {reinterpret_cast<std::complex<double> *>(impl_->spectrum), spectrum_size()};
}

void RealFft::forward() const { fftw_execute(impl_->forward); }

// c2r destroys its input; callers refill spectrum() before every backward().
void RealFft::backward() const { fftw_execute(impl_->backward); }

} // namespace cglmp::detail
