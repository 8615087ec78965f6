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

#include <cstddef>
#include <functional>
#include <vector>

#include "qgfft/transform.hpp"

namespace qg {

/// omega_{k,m} = omega_{k,0} + 2 pi m and lambda = omega^2 for every
/// coefficient slot. Row 0 only carries m = 0 (lambda = 0).
class ModeFrequencyTable {
public:
    ModeFrequencyTable(const FundamentalBasis &basis, std::size_t samples_per_edge);

    std::size_t rows() const { return rows_; }
    std::size_t row_length() const { return half_; }
    double omega(std::size_t k, std::size_t m) const { return omega_[k * half_ + m]; }
    double lambda(std::size_t k, std::size_t m) const { return omega(k, m) * omega(k, m); }
    /// False for the unused tail of the constant row.
    bool active(std::size_t k, std::size_t m) const { return m == 0 || k != constant_row_; }

    void check(const SpectralCoefficients &c) const;

private:
    std::size_t rows_;
    std::size_t half_;
    std::size_t constant_row_;
    std::vector<double> omega_;
};

/// u_t = a u_xx:  beta <- beta exp(-a lambda t).
void propagate_heat(SpectralCoefficients &c, const ModeFrequencyTable &modes, double t, double a);

/// psi_t = i a psi_xx:  beta <- beta exp(-i a lambda t).
void propagate_schrodinger(SpectralCoefficients &c, const ModeFrequencyTable &modes, double t, double a);

struct WaveState {
    SpectralCoefficients u;  // displacement
    SpectralCoefficients v;  // velocity
};

/// Exact per-mode rotation for u_tt = u_xx; the zero mode drifts as u + v t.
void propagate_wave(WaveState &s, const ModeFrequencyTable &modes, double t);

/// Entries with omega > f0 are multiplied by exp(-(omega - f0)^2).
void damping_filter(SpectralCoefficients &c, const ModeFrequencyTable &modes, double f0);

/// Exact flow of du/dt = k u (1 - u) over time h, pointwise on the real part.
/// Throws qg::Error(numeric) naming the sample if the denominator vanishes.
void logistic_step(SampledField &u, const SampledField &k, double h);

/// psi <- exp(-i p h) psi.
void potential_step(SampledField &psi, const SampledField &p, double h);

/// psi <- psi + p h, the exact flow of psi_t = p.
void source_step(SampledField &psi, const SampledField &p, double h);

/// One classical RK4 step of u' = v, v' = -sin u at every sample.
void sine_gordon_step(SampledField &u, SampledField &v, double h);

/// Exact flow of v' = -sin u with u frozen.
void sine_gordon_kick(SampledField &u, SampledField &v, double h);

using FieldFlow = std::function<void(SampledField &, double)>;
using CoefficientFlow = std::function<void(SpectralCoefficients &, double)>;
using PairFlow = std::function<void(SampledField &, SampledField &, double)>;
using WaveFlow = std::function<void(WaveState &, double)>;

/// T(h/2) S(h) T(h/2): sample-space flow, forward transform, coefficient
/// flow, inverse transform, sample-space flow.
void strang_step(const Transform &transform, SampledField &f, double h, const FieldFlow &nonlinear_half,
                 const CoefficientFlow &linear_full);

/// Same composition for a (u, v) pair with a wave-type linear part.
void strang_step(const Transform &transform, SampledField &u, SampledField &v, double h,
                 const PairFlow &nonlinear_half, const WaveFlow &linear_full);

}  // namespace qg
