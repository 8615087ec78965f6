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

#include "qgfft/transform.hpp"

#include <algorithm>
#include <cmath>

#include "qgfft/error.hpp"
#include "qgfft/fft.hpp"
#include "qgfft/parallel.hpp"

namespace qg {

namespace {

const double kHalfSqrt = std::sqrt(0.5);

void check_samples(std::size_t n) {
    if (n < 2 || !is_power_of_two(n))
        throw Error(ErrorCode::invalid_argument,
                    "samples per edge must be a power of two >= 2, got " + std::to_string(n));
}

}  // namespace

SampledField::SampledField(std::size_t edge_count, std::size_t samples_per_edge)
    : edges_(edge_count), n_(samples_per_edge), values_(edge_count * (samples_per_edge + 1)) {}

double SampledField::max_abs() const {
    double m = 0.0;
    for (const auto &v : values_) m = std::max(m, std::abs(v));
    return m;
}

SpectralCoefficients::SpectralCoefficients(std::size_t rows, std::size_t samples_per_edge,
                                           std::optional<std::size_t> oddcase)
    : rows_(rows), n_(samples_per_edge), oddcase_(oddcase), data_(rows * (samples_per_edge / 2)) {}

double SpectralCoefficients::sum_of_squares() const {
    double s = 0.0;
    for (const auto &b : data_) s += std::norm(b);
    return s;
}

Transform::Transform(const FundamentalBasis &basis, std::size_t samples_per_edge)
    : basis_(&basis), n_(samples_per_edge) {
    check_samples(n_);
    phase_.resize(basis.size() * (n_ + 1));
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t s = 0; s <= n_; ++s)
            phase_[k * (n_ + 1) + s] =
                std::polar(1.0, -basis[k].omega * static_cast<double>(s) / static_cast<double>(n_));
}

void Transform::check_field(const SampledField &f) const {
    if (f.edge_count() != basis_->edge_count())
        throw Error(ErrorCode::dimension, "field has " + std::to_string(f.edge_count()) + " edges, basis has " +
                                              std::to_string(basis_->edge_count()));
    if (f.samples_per_edge() != n_)
        throw Error(ErrorCode::dimension, "field has N = " + std::to_string(f.samples_per_edge()) +
                                              ", transform expects N = " + std::to_string(n_));
}

SpectralCoefficients Transform::forward(const SampledField &f) const {
    check_field(f);
    const auto &basis = *basis_;
    const std::size_t n = n_, half = n / 2, ne = basis.edge_count();
    SpectralCoefficients out(basis.size(), n, basis.oddcase());

    parallel_for(basis.size(), [&](std::size_t k) {
        const auto &fn = basis[k];
        const Complex *phase = &phase_[k * (n + 1)];
        // The DFT is linear, so the per-edge modulated sequences can be summed
        // before transforming: one FFT per branch and row.
        std::vector<Complex> s1(n + 1), s2(n + 1);
        for (std::size_t e = 0; e < ne; ++e) {
            const Complex g = std::conj(fn.gamma[e]), d = std::conj(fn.delta[e]);
            const auto samples = f.edge(e);
            for (std::size_t s = 0; s <= n; ++s) {
                s1[s] += g * samples[s];
                s2[s] += d * samples[s];
            }
        }
        std::vector<Complex> seq1(n), seq2(n);
        seq1[0] = 0.5 * (s1[0] + phase[n] * s1[n]);
        seq2[0] = 0.5 * (s2[0] + std::conj(phase[n]) * s2[n]);
        for (std::size_t s = 1; s < n; ++s) {
            seq1[s] = phase[s] * s1[s];
            seq2[s] = std::conj(phase[s]) * s2[s];
        }
        fft(seq1);
        fft(seq2);
        auto row = out.row(k);
        const double scale = 1.0 / static_cast<double>(n);
        row[0] = (seq1[0] + seq2[0]) * scale;
        for (std::size_t m = 1; m < half; ++m) row[m] = (seq1[m] + seq2[n - m]) * scale;
        if (fn.kind == ModeKind::constant)
            for (std::size_t m = 1; m < half; ++m) row[m] = 0.0;
        if (basis.oddcase() == k) row[half - 1] *= kHalfSqrt;
    });
    return out;
}

SampledField Transform::inverse(const SpectralCoefficients &c) const {
    const auto &basis = *basis_;
    if (c.rows() != basis.size())
        throw Error(ErrorCode::dimension, "coefficients have " + std::to_string(c.rows()) + " rows, basis has " +
                                              std::to_string(basis.size()));
    if (c.samples_per_edge() != n_)
        throw Error(ErrorCode::dimension, "coefficients have N = " + std::to_string(c.samples_per_edge()) +
                                              ", transform expects N = " + std::to_string(n_));
    const std::size_t n = n_, half = n / 2, ne = basis.edge_count(), rows = basis.size();

    // Per row: forward FFT of the zero-padded coefficients, then the two
    // phase-shifted read-outs G[N - s] e^{i w s/N} and G[s] e^{-i w s/N}.
    std::vector<Complex> up(rows * (n + 1)), down(rows * (n + 1));
    parallel_for(rows, [&](std::size_t k) {
        std::vector<Complex> g(n);
        const auto row = c.row(k);
        std::copy(row.begin(), row.end(), g.begin());
        if (basis.oddcase() == k) g[half - 1] *= kHalfSqrt;
        fft(g);
        const Complex *phase = &phase_[k * (n + 1)];
        for (std::size_t s = 0; s <= n; ++s) {
            up[k * (n + 1) + s] = std::conj(phase[s]) * g[(n - s) % n];
            down[k * (n + 1) + s] = phase[s] * g[s % n];
        }
    });
    SampledField out(ne, n);
    parallel_for(ne, [&](std::size_t e) {
        auto dst = out.edge(e);
        for (std::size_t k = 0; k < rows; ++k) {
            const Complex g = basis[k].gamma[e], d = basis[k].delta[e];
            const Complex *u = &up[k * (n + 1)];
            const Complex *w = &down[k * (n + 1)];
            for (std::size_t s = 0; s <= n; ++s) dst[s] += g * u[s] + d * w[s];
        }
    });
    return out;
}

SpectralCoefficients forward(const FundamentalBasis &basis, const SampledField &f) {
    return Transform(basis, f.samples_per_edge()).forward(f);
}

SampledField inverse(const FundamentalBasis &basis, const SpectralCoefficients &c) {
    return Transform(basis, c.samples_per_edge()).inverse(c);
}

SpectralCoefficients naive_forward(const FundamentalBasis &basis, const SampledField &f) {
    const std::size_t n = f.samples_per_edge();
    check_samples(n);
    if (f.edge_count() != basis.edge_count())
        throw Error(ErrorCode::dimension, "field has " + std::to_string(f.edge_count()) + " edges, basis has " +
                                              std::to_string(basis.edge_count()));
    const std::size_t half = n / 2;
    SpectralCoefficients out(basis.size(), n, basis.oddcase());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::size_t modes = basis[k].kind == ModeKind::constant ? 1 : half;
        for (std::size_t m = 0; m < modes; ++m) {
            Complex acc;
            for (std::size_t e = 0; e < basis.edge_count(); ++e) {
                for (std::size_t s = 0; s <= n; ++s) {
                    const double x = static_cast<double>(s) / static_cast<double>(n);
                    const double w = (s == 0 || s == n) ? 0.5 : 1.0;
                    acc += w * f.at(e, s) * std::conj(basis.evaluate(k, m, e, x));
                }
            }
            out.at(k, m) = acc / static_cast<double>(n);
        }
    }
    if (auto odd = basis.oddcase()) out.at(*odd, half - 1) *= kHalfSqrt;
    return out;
}

double field_norm(const SampledField &f) {
    const std::size_t n = f.samples_per_edge();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (std::size_t e = 0; e < f.edge_count(); ++e) {
        const auto v = f.edge(e);
        double s = 0.5 * (std::norm(v[0]) + std::norm(v[n]));
        for (std::size_t i = 1; i < n; ++i) s += std::norm(v[i]);
        total += s;
    }
    return std::sqrt(total / static_cast<double>(n));
}

SpectralCoefficients resample(const SpectralCoefficients &c, std::size_t samples_per_edge) {
    check_samples(samples_per_edge);
    if (samples_per_edge < c.samples_per_edge())
        throw Error(ErrorCode::invalid_argument, "resampling can only increase the sample count");
    SpectralCoefficients out(c.rows(), samples_per_edge, c.oddcase());
    const std::size_t half = c.row_length();
    for (std::size_t k = 0; k < c.rows(); ++k)
        for (std::size_t m = 0; m < half; ++m) out.at(k, m) = c.at(k, m);
    // The Nyquist cosine carries a sqrt(1/2) weight at its own sample count
    // only; at a finer count it is an ordinary mode.
    if (auto odd = c.oddcase(); odd && samples_per_edge > c.samples_per_edge()) {
        out.at(*odd, half - 1) *= kHalfSqrt;
    }
    return out;
}

}  // namespace qg
