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

#include "qgfft/fft.hpp"

#include <cmath>
#include <map>
#include <memory>

#include "qgfft/error.hpp"

namespace qg {

FftPlan::FftPlan(std::size_t length) : length_(length) {
    if (length == 0 || (length & (length - 1)) != 0)
        throw Error(ErrorCode::invalid_argument, "FFT length " + std::to_string(length) + " is not a power of two");
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < length) ++bits;
    bit_reverse_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bit_reverse_[i] = r;
    }
    twiddle_.resize(length / 2);
    const double step = -2.0 * 3.14159265358979323846 / static_cast<double>(length);
    for (std::size_t k = 0; k < length / 2; ++k) twiddle_[k] = std::polar(1.0, step * static_cast<double>(k));
}

void FftPlan::run(std::span<std::complex<double>> data, bool backward) const {
    if (data.size() != length_)
        throw Error(ErrorCode::dimension, "FFT plan of length " + std::to_string(length_) + " applied to " +
                                              std::to_string(data.size()) + " samples");
    for (std::size_t i = 0; i < length_; ++i)
        if (i < bit_reverse_[i]) std::swap(data[i], data[bit_reverse_[i]]);
    for (std::size_t half = 1; half < length_; half *= 2) {
        const std::size_t stride = length_ / (2 * half);
        for (std::size_t start = 0; start < length_; start += 2 * half) {
            for (std::size_t j = 0; j < half; ++j) {
                auto w = twiddle_[j * stride];
                if (backward) w = std::conj(w);
                const auto u = data[start + j];
                const auto v = data[start + j + half] * w;
                data[start + j] = u + v;
                data[start + j + half] = u - v;
            }
        }
    }
}

namespace {

const FftPlan &cached_plan(std::size_t length) {
    thread_local std::map<std::size_t, std::unique_ptr<FftPlan>> cache;
    auto &slot = cache[length];
    if (!slot) slot = std::make_unique<FftPlan>(length);
    return *slot;
}

}  // namespace

void fft(std::span<std::complex<double>> data) { cached_plan(data.size()).forward(data); }
void ifft(std::span<std::complex<double>> data) { cached_plan(data.size()).backward(data); }

}  // namespace qg
