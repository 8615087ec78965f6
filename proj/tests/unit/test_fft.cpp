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

#include <gtest/gtest.h>

#include <random>

#include "qgfft/error.hpp"
#include "qgfft/fft.hpp"
#include "test_support.hpp"

using qgtest::C;

namespace {

double max_diff(const std::vector<C> &a, const std::vector<C> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

std::vector<C> random_vector(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist;
    std::vector<C> v(n);
    for (auto &z : v) z = {dist(rng), dist(rng)};
    return v;
}

}  // namespace

TEST(Fft, DeltaToConstant) {
    std::vector<C> x{1, 0, 0, 0};
    qg::fft(x);
    EXPECT_LT(max_diff(x, {1, 1, 1, 1}), 1e-15);
}

TEST(Fft, ConstantToDelta) {
    std::vector<C> x{1, 1, 1, 1};
    qg::fft(x);
    EXPECT_LT(max_diff(x, {4, 0, 0, 0}), 1e-15);
}

TEST(Fft, LengthOne) {
    std::vector<C> x{C(2.5, -1)};
    qg::fft(x);
    EXPECT_EQ(x[0], C(2.5, -1));
}

TEST(Fft, MatchesDenseDft) {
    for (std::size_t n : {2u, 8u, 64u, 256u}) {
        auto x = random_vector(n, static_cast<unsigned>(n));
        const auto want = qgtest::dense_dft(x, -1);
        qg::fft(x);
        EXPECT_LT(max_diff(x, want), 1e-12 * static_cast<double>(n)) << n;
    }
}

TEST(Fft, BackwardMatchesDenseInverseDft) {
    auto x = random_vector(32, 3);
    const auto want = qgtest::dense_dft(x, +1);
    qg::FftPlan(32).backward(x);
    EXPECT_LT(max_diff(x, want), 1e-12);
}

TEST(Fft, RoundTrip64) {
    const auto x0 = random_vector(64, 11);
    auto x = x0;
    qg::fft(x);
    qg::ifft(x);
    for (auto &z : x) z /= 64.0;
    EXPECT_LT(max_diff(x, x0), 1e-13);
}

TEST(Fft, Rejections) {
    EXPECT_THROW(qg::FftPlan(12), qg::Error);
    EXPECT_THROW(qg::FftPlan(0), qg::Error);
    std::vector<C> x(8);
    EXPECT_THROW(qg::FftPlan(16).forward(x), qg::Error);
}
