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
#include <optional>
#include <span>
#include <vector>

#include "qgfft/spectral_basis.hpp"

namespace qg {

/// Complex samples at x_n = n/N, n = 0..N, on every unit edge.
class SampledField {
public:
    SampledField() = default;
    SampledField(std::size_t edge_count, std::size_t samples_per_edge);

    std::size_t edge_count() const { return edges_; }
    std::size_t samples_per_edge() const { return n_; }
    std::size_t stride() const { return n_ + 1; }

    Complex &at(EdgeIndex e, std::size_t s) { return values_[e * stride() + s]; }
    Complex at(EdgeIndex e, std::size_t s) const { return values_[e * stride() + s]; }
    std::span<Complex> edge(EdgeIndex e) { return {values_.data() + e * stride(), stride()}; }
    std::span<const Complex> edge(EdgeIndex e) const { return {values_.data() + e * stride(), stride()}; }
    std::vector<Complex> &values() { return values_; }
    const std::vector<Complex> &values() const { return values_; }

    double max_abs() const;

private:
    std::size_t edges_ = 0;
    std::size_t n_ = 0;
    std::vector<Complex> values_;
};

/// beta_{k,m} for m = 0..N/2-1 per fundamental frequency k.
class SpectralCoefficients {
public:
    SpectralCoefficients() = default;
    SpectralCoefficients(std::size_t rows, std::size_t samples_per_edge, std::optional<std::size_t> oddcase);

    std::size_t rows() const { return rows_; }
    std::size_t samples_per_edge() const { return n_; }
    std::size_t row_length() const { return n_ / 2; }
    std::optional<std::size_t> oddcase() const { return oddcase_; }

    Complex &at(std::size_t k, std::size_t m) { return data_[k * row_length() + m]; }
    Complex at(std::size_t k, std::size_t m) const { return data_[k * row_length() + m]; }
    std::span<Complex> row(std::size_t k) { return {data_.data() + k * row_length(), row_length()}; }
    std::span<const Complex> row(std::size_t k) const { return {data_.data() + k * row_length(), row_length()}; }
    std::vector<Complex> &values() { return data_; }
    const std::vector<Complex> &values() const { return data_; }

    double sum_of_squares() const;

private:
    std::size_t rows_ = 0;
    std::size_t n_ = 0;
    std::optional<std::size_t> oddcase_;
    std::vector<Complex> data_;
};

/// Forward and inverse quantum-graph FFT for one basis and sample count.
/// Phase tables are precomputed; the object is immutable and thread-safe.
class Transform {
public:
    Transform(const FundamentalBasis &basis, std::size_t samples_per_edge);

    const FundamentalBasis &basis() const { return *basis_; }
    std::size_t samples_per_edge() const { return n_; }

    SpectralCoefficients forward(const SampledField &f) const;
    SampledField inverse(const SpectralCoefficients &c) const;

private:
    void check_field(const SampledField &f) const;

    const FundamentalBasis *basis_;
    std::size_t n_;
    std::vector<Complex> phase_;  // exp(-i omega_k n / N), (N+1) per row
};

SpectralCoefficients forward(const FundamentalBasis &basis, const SampledField &f);
SampledField inverse(const FundamentalBasis &basis, const SpectralCoefficients &c);

/// Direct trapezoid evaluation of every coefficient, O(E^2 N^2).
SpectralCoefficients naive_forward(const FundamentalBasis &basis, const SampledField &f);

/// Trapezoid norm: sqrt(sum_e [|f(0)|^2/2 + |f(1)|^2/2 + sum_interior |f|^2] / N).
double field_norm(const SampledField &f);

/// Re-expresses coefficients at a finer sample count by zero padding the
/// higher frequencies, so inverse() at the new count interpolates the series.
SpectralCoefficients resample(const SpectralCoefficients &c, std::size_t samples_per_edge);

/// Samples a callable f(edge, x) on the N+1 points of every edge.
template <class Fn>
SampledField sample_field(std::size_t edge_count, std::size_t samples_per_edge, Fn &&fn) {
    SampledField out(edge_count, samples_per_edge);
    for (std::size_t e = 0; e < edge_count; ++e)
        for (std::size_t s = 0; s <= samples_per_edge; ++s)
            out.at(e, s) = fn(e, static_cast<double>(s) / static_cast<double>(samples_per_edge));
    return out;
}

}  // namespace qg
