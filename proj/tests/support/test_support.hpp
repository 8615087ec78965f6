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

// Helpers shared by the unit and acceptance tests. The oracles here are
// written independently of the library: dense DFT, cyclic Jacobi
// eigenvalues, Gaussian-elimination rank and closed-form edge integrals.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qgfft/graph.hpp"
#include "qgfft/transform.hpp"

namespace qgtest {

using C = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

inline std::string graph_path(const std::string &name) { return std::string(QG_DATA_DIR) + "/graphs/" + name; }
inline std::string scenario_path(const std::string &name) {
    return std::string(QG_DATA_DIR) + "/scenarios/" + name;
}

/// X[k] = sum_n x[n] exp(sign * 2 pi i k n / L).
inline std::vector<C> dense_dft(const std::vector<C> &x, int sign = -1) {
    const std::size_t n = x.size();
    std::vector<C> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        C acc;
        for (std::size_t j = 0; j < n; ++j)
            acc += x[j] * std::polar(1.0, sign * 2.0 * pi * static_cast<double>((k * j) % n) / static_cast<double>(n));
        out[k] = acc;
    }
    return out;
}

/// Eigenvalues of a dense symmetric matrix (row-major) by cyclic Jacobi
/// rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

/// Numerical rank by Gaussian elimination with full pivoting.
inline std::size_t matrix_rank(std::vector<double> a, std::size_t rows, std::size_t cols, double tol = 1e-9) {
    auto at = [&](std::size_t i, std::size_t j) -> double & { return a[i * cols + j]; };
    std::size_t rank = 0;
    std::vector<std::size_t> col_order(cols);
    for (std::size_t j = 0; j < cols; ++j) col_order[j] = j;
    for (std::size_t r = 0; r < rows && rank < cols; ++r) {
        double best = 0.0;
        std::size_t bi = rank, bj = rank;
        for (std::size_t i = rank; i < rows; ++i)
            for (std::size_t j = rank; j < cols; ++j)
                if (std::abs(at(i, j)) > best) best = std::abs(at(i, j)), bi = i, bj = j;
        if (best < tol) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(bi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, rank), at(i, bj));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const double f = at(i, rank) / at(rank, rank);
            for (std::size_t j = rank; j < cols; ++j) at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Integral over [0, 1] of exp(i w x).
inline C integral_exp(double w) {
    if (std::abs(w) < 1e-12) return 1.0;
    return (std::polar(1.0, w) - 1.0) / C(0.0, w);
}

/// Integral over [0, 1] of (g1 e^{i a x} + d1 e^{-i a x}) conj(g2 e^{i b x} + d2 e^{-i b x}).
inline C edge_inner(C g1, C d1, double a, C g2, C d2, double b) {
    return g1 * std::conj(g2) * integral_exp(a - b) + g1 * std::conj(d2) * integral_exp(a + b) +
           d1 * std::conj(g2) * integral_exp(-a - b) + d1 * std::conj(d2) * integral_exp(b - a);
}

/// Random complex samples that agree at shared vertices, i.e. a sampled
/// continuous function on the graph.
inline qg::SampledField continuous_random(const qg::EquilateralGraph &g, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<C> vertex(g.vertex_count());
    for (auto &z : vertex) z = {dist(rng), dist(rng)};
    qg::SampledField f(g.edge_count(), n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        f.at(e, 0) = vertex[g.edge(e).tail];
        f.at(e, n) = vertex[g.edge(e).head];
        for (std::size_t s = 1; s < n; ++s) f.at(e, s) = {dist(rng), dist(rng)};
    }
    return f;
}

/// Classical RK4 for a scalar autonomous ODE.
template <class F>
double rk4(F f, double y, double t, std::size_t steps) {
    const double h = t / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double k1 = f(y), k2 = f(y + 0.5 * h * k1), k3 = f(y + 0.5 * h * k2), k4 = f(y + h * k3);
        y += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return y;
}

}  // namespace qgtest
