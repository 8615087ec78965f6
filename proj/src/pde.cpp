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

#include "qgfft/pde.hpp"

#include <cmath>

#include "qgfft/error.hpp"

namespace qg {

ModeFrequencyTable::ModeFrequencyTable(const FundamentalBasis &basis, std::size_t samples_per_edge)
    : rows_(basis.size()), half_(samples_per_edge / 2), constant_row_(basis.size()) {
    omega_.resize(rows_ * half_);
    for (std::size_t k = 0; k < rows_; ++k) {
        if (basis[k].kind == ModeKind::constant) constant_row_ = k;
        for (std::size_t m = 0; m < half_; ++m)
            omega_[k * half_ + m] = basis[k].omega + kTwoPi * static_cast<double>(m);
    }
}

void ModeFrequencyTable::check(const SpectralCoefficients &c) const {
    if (c.rows() != rows_ || c.row_length() != half_)
        throw Error(ErrorCode::dimension, "coefficient array does not match the mode table");
}

void propagate_heat(SpectralCoefficients &c, const ModeFrequencyTable &modes, double t, double a) {
    modes.check(c);
    for (std::size_t k = 0; k < c.rows(); ++k)
        for (std::size_t m = 0; m < c.row_length(); ++m)
            if (modes.active(k, m)) c.at(k, m) *= std::exp(-a * modes.lambda(k, m) * t);
}

void propagate_schrodinger(SpectralCoefficients &c, const ModeFrequencyTable &modes, double t, double a) {
    modes.check(c);
    for (std::size_t k = 0; k < c.rows(); ++k)
        for (std::size_t m = 0; m < c.row_length(); ++m)
            if (modes.active(k, m)) c.at(k, m) *= std::polar(1.0, -a * modes.lambda(k, m) * t);
}

void propagate_wave(WaveState &s, const ModeFrequencyTable &modes, double t) {
    modes.check(s.u);
    modes.check(s.v);
    for (std::size_t k = 0; k < s.u.rows(); ++k) {
        for (std::size_t m = 0; m < s.u.row_length(); ++m) {
            if (!modes.active(k, m)) continue;
            const double w = modes.omega(k, m);
            const Complex u = s.u.at(k, m), v = s.v.at(k, m);
            if (w == 0.0) {
                s.u.at(k, m) = u + v * t;
                continue;
            }
            const double c = std::cos(w * t), sn = std::sin(w * t);
            s.u.at(k, m) = u * c + v * (sn / w);
            s.v.at(k, m) = -u * (w * sn) + v * c;
        }
    }
}

void damping_filter(SpectralCoefficients &c, const ModeFrequencyTable &modes, double f0) {
    modes.check(c);
    for (std::size_t k = 0; k < c.rows(); ++k) {
        for (std::size_t m = 0; m < c.row_length(); ++m) {
            const double excess = modes.omega(k, m) - f0;
            if (excess > 0.0) c.at(k, m) *= std::exp(-excess * excess);
        }
    }
}

namespace {

void require_same_shape(const SampledField &a, const SampledField &b) {
    if (a.edge_count() != b.edge_count() || a.samples_per_edge() != b.samples_per_edge())
        throw Error(ErrorCode::dimension, "sampled fields have different shapes");
}

}  // namespace

void logistic_step(SampledField &u, const SampledField &k, double h) {
    require_same_shape(u, k);
    for (std::size_t e = 0; e < u.edge_count(); ++e) {
        for (std::size_t s = 0; s <= u.samples_per_edge(); ++s) {
            const double x = u.at(e, s).real();
            const double growth = std::exp(k.at(e, s).real() * h);
            const double denom = 1.0 + x * (growth - 1.0);
            if (std::abs(denom) < 1e-14)
                throw Error(ErrorCode::numeric, "logistic flow blows up at edge " + std::to_string(e) + ", sample " +
                                                    std::to_string(s) + " (u = " + std::to_string(x) + ")");
            u.at(e, s) = x * growth / denom;
        }
    }
}

void potential_step(SampledField &psi, const SampledField &p, double h) {
    require_same_shape(psi, p);
    for (std::size_t i = 0; i < psi.values().size(); ++i)
        psi.values()[i] *= std::polar(1.0, -p.values()[i].real() * h);
}

void source_step(SampledField &psi, const SampledField &p, double h) {
    require_same_shape(psi, p);
    for (std::size_t i = 0; i < psi.values().size(); ++i) psi.values()[i] += p.values()[i] * h;
}

void sine_gordon_step(SampledField &u, SampledField &v, double h) {
    require_same_shape(u, v);
    for (std::size_t i = 0; i < u.values().size(); ++i) {
        const double u0 = u.values()[i].real(), v0 = v.values()[i].real();
        const double k1u = v0, k1v = -std::sin(u0);
        const double k2u = v0 + 0.5 * h * k1v, k2v = -std::sin(u0 + 0.5 * h * k1u);
        const double k3u = v0 + 0.5 * h * k2v, k3v = -std::sin(u0 + 0.5 * h * k2u);
        const double k4u = v0 + h * k3v, k4v = -std::sin(u0 + h * k3u);
        u.values()[i] = u0 + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v.values()[i] = v0 + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
}

void sine_gordon_kick(SampledField &u, SampledField &v, double h) {
    require_same_shape(u, v);
    for (std::size_t i = 0; i < u.values().size(); ++i) {
        const double u0 = u.values()[i].real();
        u.values()[i] = u0;
        v.values()[i] = v.values()[i].real() - h * std::sin(u0);
    }
}

void strang_step(const Transform &transform, SampledField &f, double h, const FieldFlow &nonlinear_half,
                 const CoefficientFlow &linear_full) {
    if (!(h > 0.0)) throw Error(ErrorCode::invalid_argument, "time step must be positive");
    nonlinear_half(f, 0.5 * h);
    auto c = transform.forward(f);
    linear_full(c, h);
    f = transform.inverse(c);
    nonlinear_half(f, 0.5 * h);
}

void strang_step(const Transform &transform, SampledField &u, SampledField &v, double h,
                 const PairFlow &nonlinear_half, const WaveFlow &linear_full) {
    if (!(h > 0.0)) throw Error(ErrorCode::invalid_argument, "time step must be positive");
    nonlinear_half(u, v, 0.5 * h);
    WaveState s{transform.forward(u), transform.forward(v)};
    linear_full(s, h);
    u = transform.inverse(s.u);
    v = transform.inverse(s.v);
    nonlinear_half(u, v, 0.5 * h);
}

}  // namespace qg
