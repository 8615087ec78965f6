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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgfft/graph.hpp"

namespace qg {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Threshold for treating nu as 0 or 2, sin(omega) as 0, and gamma == delta.
inline constexpr double kSpectralTolerance = 1e-10;

/// Eigenpairs of the vertex Laplacian I - T^{-1}A, ascending. Eigenvectors
/// have unit norm in <f,g> = 1/2 sum_v deg(v) f(v) g(v).
struct DiscreteSpectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
};

DiscreteSpectrum discrete_spectrum(const EquilateralGraph &g);

struct FrequencyPair {
    double low = 0.0;   // arccos(1 - nu), in (0, pi)
    double high = 0.0;  // 2 pi - low
};

FrequencyPair frequencies_from_nu(double nu);

/// Edge function c1 cos(wx) + c2 sin(wx) = gamma e^{iwx} + delta e^{-iwx}.
struct EdgeCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    Complex gamma;
    Complex delta;
};

/// Extends a vertex eigenvector to every unit edge (tail at x = 0).
std::vector<EdgeCoefficients> edge_coefficients(std::span<const double> phi, double omega,
                                                const EquilateralGraph &g);

/// Per-edge cosine/sine amplitudes of an eigenfunction at omega = n pi.
struct CosSinFunction {
    std::vector<double> a;
    std::vector<double> b;
};

struct SpecialEigenspace {
    int n = 0;
    double frequency = 0.0;
    /// Orthonormal under sum_e (a_e^2 + b_e^2) / 2. For n = 2 the first
    /// element is the global cosine and the rest have a == 0.
    std::vector<CosSinFunction> basis;
};

SpecialEigenspace special_eigenspace(const EquilateralGraph &g, int n);

enum class ModeKind { constant, regular, pi, two_pi_cosine, two_pi_sine };

struct BasisFunction {
    double omega = 0.0;
    ModeKind kind = ModeKind::regular;
    std::vector<Complex> gamma;  // per unit edge
    std::vector<Complex> delta;
};

/// L2-orthonormal Laplace eigenfunctions with fundamental frequencies in
/// [0, 2 pi], sorted by frequency. Higher frequencies omega + 2 pi m reuse the
/// same edge coefficients.
class FundamentalBasis {
public:
    FundamentalBasis() = default;
    FundamentalBasis(std::size_t edge_count, std::vector<BasisFunction> functions);

    std::size_t size() const { return functions_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    const BasisFunction &operator[](std::size_t k) const { return functions_[k]; }
    const std::vector<BasisFunction> &functions() const { return functions_; }
    std::vector<double> frequencies() const;
    /// Index of the 2 pi pure-cosine function, if any.
    std::optional<std::size_t> oddcase() const { return oddcase_; }

    /// Psi_{k,m}(x) on edge e.
    Complex evaluate(std::size_t k, std::size_t m, EdgeIndex e, double x) const;

private:
    std::size_t edge_count_ = 0;
    std::vector<BasisFunction> functions_;
    std::optional<std::size_t> oddcase_;
};

FundamentalBasis build_basis(const EquilateralGraph &g);

/// Trapezoid inner products <Psi_{j,m}, Psi_{k,m}>_N over the rows that carry
/// a sampled mode at shift m: row 0 only at m = 0, no 2 pi sine rows at the
/// Nyquist shift, and the oddcase row weighted by sqrt(1/2) there.
struct GramMatrix {
    std::vector<std::size_t> rows;
    std::vector<Complex> entries;  // row-major, rows.size()^2

    Complex at(std::size_t i, std::size_t j) const { return entries[i * rows.size() + j]; }
    double max_diagonal_deviation() const;
    double max_off_diagonal() const;
};

GramMatrix gram_matrix(const FundamentalBasis &basis, std::size_t samples_per_edge, std::size_t shift);

/// `k omega edge re(gamma) im(gamma) re(delta) im(delta)` rows.
std::string export_basis(const FundamentalBasis &basis);

bool is_power_of_two(std::size_t n);

}  // namespace qg
