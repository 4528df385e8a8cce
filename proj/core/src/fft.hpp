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

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace cglmp::detail {

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

/**
 * Real-to-complex / complex-to-real FFT pair of fixed length n backed by
 * FFTW. Owns aligned work buffers; an instance must not be used from two
 * threads at once. Plan creation is serialized internally.
 */
class RealFft {
  public:
    explicit RealFft(std::size_t n);
    ~RealFft();
    RealFft(const RealFft &) = delete;
    RealFft &operator=(const RealFft &) = delete;
    RealFft(RealFft &&) noexcept;
    RealFft &operator=(RealFft &&) noexcept;

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t spectrum_size() const { return n_ / 2 + 1; }

    /// Real work buffer of length size().
    [[nodiscard]] std::span<double> real() const;
    /// Complex work buffer of length spectrum_size().
    [[nodiscard]] std::span<std::complex<double>> spectrum() const;

    /// real() -> spectrum(). Unnormalized.
    void forward() const;
    /// spectrum() -> real(). Unnormalized: a round trip scales by size().
    void backward() const;

  private:
    struct Impl;
    std::size_t n_ = 0;
    std::unique_ptr<Impl> impl_;
};

} // namespace cglmp::detail
