// Copyright 2026 The qgfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qg {

/// In-place iterative radix-2 FFT of a fixed power-of-two length.
///
/// forward:  X_m = sum_n x_n exp(-2 pi i m n / L)
/// backward: x_n = sum_m X_m exp(+2 pi i m n / L)   (no 1/L factor)
class FftPlan {
public:
    explicit FftPlan(std::size_t length);

    std::size_t length() const { return length_; }
    void forward(std::span<std::complex<double>> data) const { run(data, false); }
    void backward(std::span<std::complex<double>> data) const { run(data, true); }

private:
    void run(std::span<std::complex<double>> data, bool backward) const;

    std::size_t length_;
    std::vector<std::size_t> bit_reverse_;
    std::vector<std::complex<double>> twiddle_;  // exp(-2 pi i k / L), k < L/2
};

/// Convenience wrappers with a per-thread plan cache.
void fft(std::span<std::complex<double>> data);
void ifft(std::span<std::complex<double>> data);

}  // namespace qg
