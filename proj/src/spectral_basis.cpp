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

#include "qgfft/spectral_basis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qgfft/error.hpp"

namespace qg {

namespace {

// Fix the sign of an eigenvector so that its first non-negligible entry is
// positive. Keeps output stable across runs without rotating eigenspaces.
void canonical_sign(std::vector<double> &v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0)
                for (double &y : v) y = -y;
            return;
        }
    }
}

double l2_norm_squared(const std::vector<Complex> &gamma, const std::vector<Complex> &delta) {
    // (|A|^2 + |B|^2) / 2 with A = gamma + delta, B = i(gamma - delta).
    double s = 0.0;
    for (std::size_t e = 0; e < gamma.size(); ++e) s += std::norm(gamma[e]) + std::norm(delta[e]);
    return s;
}

void normalize(BasisFunction &f) {
    const double scale = 1.0 / std::sqrt(l2_norm_squared(f.gamma, f.delta));
    for (auto &g : f.gamma) g *= scale;
    for (auto &d : f.delta) d *= scale;
}

BasisFunction from_cos_sin(const CosSinFunction &cs, double omega, ModeKind kind) {
    BasisFunction f;
    f.omega = omega;
    f.kind = kind;
    for (std::size_t e = 0; e < cs.a.size(); ++e) {
        f.gamma.emplace_back(cs.a[e] / 2.0, -cs.b[e] / 2.0);
        f.delta.emplace_back(cs.a[e] / 2.0, cs.b[e] / 2.0);
    }
    return f;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

DiscreteSpectrum discrete_spectrum(const EquilateralGraph &g) {
    g.require_min_degree_two();
    const auto nv = static_cast<Eigen::Index>(g.vertex_count());
    Eigen::VectorXd inv_sqrt_deg(nv);
    for (Eigen::Index v = 0; v < nv; ++v) inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(nv, nv);
    for (const auto &e : g.edges()) {
        const auto t = static_cast<Eigen::Index>(e.tail), h = static_cast<Eigen::Index>(e.head);
        const double w = inv_sqrt_deg(t) * inv_sqrt_deg(h);
        s(t, h) -= w;
        s(h, t) -= w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::numeric,
                    "symmetric eigensolver did not converge on a " + std::to_string(nv) + "x" + std::to_string(nv) +
                        " matrix within " +
                        std::to_string(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>::m_maxIterations * nv) +
                        " QR iterations");
    DiscreteSpectrum out;
    out.eigenvalues.resize(static_cast<std::size_t>(nv));
    out.eigenvectors.resize(static_cast<std::size_t>(nv));
    for (Eigen::Index j = 0; j < nv; ++j) {
        out.eigenvalues[j] = solver.eigenvalues()(j);
        auto &phi = out.eigenvectors[j];
        phi.resize(static_cast<std::size_t>(nv));
        // T^{-1/2} maps to eigenvectors of I - T^{-1}A; sqrt(2) restores unit
        // norm under the half-weighted degree inner product.
        for (Eigen::Index v = 0; v < nv; ++v) phi[v] = std::sqrt(2.0) * inv_sqrt_deg(v) * solver.eigenvectors()(v, j);
        canonical_sign(phi);
    }
    return out;
}

FrequencyPair frequencies_from_nu(double nu) {
    if (!(nu > 0.0 && nu < 2.0))
        throw Error(ErrorCode::invalid_argument, "nu = " + std::to_string(nu) + " is outside (0, 2)");
    const double low = std::acos(1.0 - nu);
    return {low, kTwoPi - low};
}

std::vector<EdgeCoefficients> edge_coefficients(std::span<const double> phi, double omega,
                                                const EquilateralGraph &g) {
    if (phi.size() != g.vertex_count())
        throw Error(ErrorCode::dimension, "vertex vector has " + std::to_string(phi.size()) + " entries, graph has " +
                                              std::to_string(g.vertex_count()) + " vertices");
    const double s = std::sin(omega), c = std::cos(omega);
    if (std::abs(s) < kSpectralTolerance)
        throw Error(ErrorCode::precondition, "sin(omega) vanishes; use the special eigenspace construction");
    std::vector<EdgeCoefficients> out;
    out.reserve(g.edge_count());
    for (const auto &e : g.edges()) {
        EdgeCoefficients ec;
        ec.c1 = phi[e.tail];
        ec.c2 = (phi[e.head] - phi[e.tail] * c) / s;
        ec.gamma = Complex(ec.c1, -ec.c2) / 2.0;
        ec.delta = Complex(ec.c1, ec.c2) / 2.0;
        out.push_back(ec);
    }
    return out;
}

SpecialEigenspace special_eigenspace(const EquilateralGraph &g, int n) {
    if (n != 1 && n != 2) throw Error(ErrorCode::invalid_argument, "special eigenspaces exist for n = 1, 2 only");
    const auto ne = static_cast<Eigen::Index>(g.edge_count());
    const double head_sign = (n % 2 == 0) ? 1.0 : -1.0;  // cos(n pi)

    // Endpoint incidences per vertex: (edge, endpoint is tail).
    std::vector<std::vector<std::pair<Eigen::Index, bool>>> incident(g.vertex_count());
    for (Eigen::Index e = 0; e < ne; ++e) {
        incident[g.edge(e).tail].push_back({e, true});
        incident[g.edge(e).head].push_back({e, false});
    }
    // Unknowns: a_e in [0, ne), b_e in [ne, 2 ne). Kirchhoff rows divided by n pi.
    std::vector<Eigen::VectorXd> rows;
    for (const auto &inc : incident) {
        auto value_row = [&](const std::pair<Eigen::Index, bool> &end) {
            Eigen::VectorXd r = Eigen::VectorXd::Zero(2 * ne);
            r(end.first) = end.second ? 1.0 : head_sign;
            return r;
        };
        for (std::size_t j = 1; j < inc.size(); ++j) rows.push_back(value_row(inc[0]) - value_row(inc[j]));
        Eigen::VectorXd k = Eigen::VectorXd::Zero(2 * ne);
        for (const auto &[e, is_tail] : inc) k(ne + e) += is_tail ? 1.0 : -head_sign;
        rows.push_back(k);
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), 2 * ne);
    for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const double threshold = kSpectralTolerance * (sv.size() > 0 ? sv(0) : 1.0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > threshold) ++rank;
    Eigen::MatrixXd null = svd.matrixV().rightCols(2 * ne - rank);

    if (n == 2) {
        // Split off the global cosine so the oddcase element is unambiguous.
        Eigen::VectorXd cosine = Eigen::VectorXd::Zero(2 * ne);
        cosine.head(ne).setConstant(1.0 / std::sqrt(static_cast<double>(ne)));
        Eigen::MatrixXd rest = null - cosine * (cosine.transpose() * null);
        Eigen::MatrixXd sines(2 * ne, 0);
        if (rest.cols() > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXd> split(rest, Eigen::ComputeThinU);
            Eigen::Index keep = 0;
            while (keep < split.singularValues().size() && split.singularValues()(keep) > 0.5) ++keep;
            sines = split.matrixU().leftCols(keep);
        }
        null.resize(2 * ne, 1 + sines.cols());
        null.col(0) = cosine;
        null.rightCols(sines.cols()) = sines;
    }

    SpecialEigenspace out;
    out.n = n;
    out.frequency = n * kPi;
    for (Eigen::Index j = 0; j < null.cols(); ++j) {
        CosSinFunction f;
        f.a.resize(static_cast<std::size_t>(ne));
        f.b.resize(static_cast<std::size_t>(ne));
        for (Eigen::Index e = 0; e < ne; ++e) {
            f.a[e] = std::sqrt(2.0) * null(e, j);
            f.b[e] = std::sqrt(2.0) * null(ne + e, j);
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

FundamentalBasis::FundamentalBasis(std::size_t edge_count, std::vector<BasisFunction> functions)
    : edge_count_(edge_count), functions_(std::move(functions)) {
    for (std::size_t k = 0; k < functions_.size(); ++k) {
        const auto &f = functions_[k];
        if (f.gamma.size() != edge_count_ || f.delta.size() != edge_count_)
            throw Error(ErrorCode::dimension, "basis function " + std::to_string(k) + " has wrong edge count");
        if (std::abs(f.omega - kTwoPi) >= kSpectralTolerance || oddcase_) continue;
        bool cosine = std::abs(f.gamma[0]) > kSpectralTolerance;
        for (std::size_t e = 0; e < edge_count_ && cosine; ++e)
            cosine = std::abs(f.gamma[e] - f.delta[e]) < kSpectralTolerance;
        if (cosine) oddcase_ = k;
    }
}

std::vector<double> FundamentalBasis::frequencies() const {
    std::vector<double> out;
    out.reserve(functions_.size());
    for (const auto &f : functions_) out.push_back(f.omega);
    return out;
}

Complex FundamentalBasis::evaluate(std::size_t k, std::size_t m, EdgeIndex e, double x) const {
    const auto &f = functions_.at(k);
    const double w = f.omega + kTwoPi * static_cast<double>(m);
    return f.gamma[e] * std::polar(1.0, w * x) + f.delta[e] * std::polar(1.0, -w * x);
}

FundamentalBasis build_basis(const EquilateralGraph &g) {
    const auto spectrum = discrete_spectrum(g);
    const std::size_t ne = g.edge_count();
    std::vector<BasisFunction> fns;

    BasisFunction constant;
    constant.kind = ModeKind::constant;
    constant.gamma.assign(ne, Complex(0.5 / std::sqrt(static_cast<double>(ne)), 0.0));
    constant.delta = constant.gamma;
    fns.push_back(std::move(constant));

    for (std::size_t j = 0; j < spectrum.eigenvalues.size(); ++j) {
        const double nu = spectrum.eigenvalues[j];
        if (std::abs(nu) < kSpectralTolerance || std::abs(nu - 2.0) < kSpectralTolerance) continue;
        const auto [low, high] = frequencies_from_nu(nu);
        for (double omega : {low, high}) {
            BasisFunction f;
            f.omega = omega;
            for (const auto &ec : edge_coefficients(spectrum.eigenvectors[j], omega, g)) {
                f.gamma.push_back(ec.gamma);
                f.delta.push_back(ec.delta);
            }
            fns.push_back(std::move(f));
        }
    }
    for (const auto &cs : special_eigenspace(g, 1).basis) fns.push_back(from_cos_sin(cs, kPi, ModeKind::pi));
    const auto two_pi = special_eigenspace(g, 2);
    for (std::size_t j = 0; j < two_pi.basis.size(); ++j)
        fns.push_back(from_cos_sin(two_pi.basis[j], kTwoPi, j == 0 ? ModeKind::two_pi_cosine : ModeKind::two_pi_sine));

    // The constant is already unit-norm; the (|A|^2 + |B|^2) / 2 rule only
    // holds for omega > 0.
    for (auto &f : fns)
        if (f.kind != ModeKind::constant) normalize(f);
    std::stable_sort(fns.begin(), fns.end(),
                     [](const BasisFunction &a, const BasisFunction &b) { return a.omega < b.omega; });
    FundamentalBasis basis(ne, std::move(fns));
    if (!basis.oddcase() || basis[*basis.oddcase()].kind != ModeKind::two_pi_cosine)
        throw Error(ErrorCode::numeric, "failed to identify the 2 pi cosine eigenfunction");
    return basis;
}

double GramMatrix::max_diagonal_deviation() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) worst = std::max(worst, std::abs(at(i, i) - 1.0));
    return worst;
}

double GramMatrix::max_off_diagonal() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (i != j) worst = std::max(worst, std::abs(at(i, j)));
    return worst;
}

GramMatrix gram_matrix(const FundamentalBasis &basis, std::size_t samples_per_edge, std::size_t shift) {
    const std::size_t n = samples_per_edge;
    if (!is_power_of_two(n) || n < 2)
        throw Error(ErrorCode::invalid_argument, "samples per edge must be a power of two >= 2");
    const double nyquist = kPi * static_cast<double>(n);
    const auto oddcase = basis.oddcase();

    GramMatrix out;
    std::vector<double> weight;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].kind == ModeKind::constant) {
            if (shift != 0) continue;
        } else {
            const double w = basis[k].omega + kTwoPi * static_cast<double>(shift);
            const bool at_nyquist = std::abs(w - nyquist) < kSpectralTolerance;
            if (w > nyquist + kSpectralTolerance) continue;
            if (at_nyquist && k != oddcase) continue;
        }
        out.rows.push_back(k);
        const double w = basis[k].omega + kTwoPi * static_cast<double>(shift);
        weight.push_back(k == oddcase && std::abs(w - nyquist) < kSpectralTolerance ? std::sqrt(0.5) : 1.0);
    }
    const std::size_t r = out.rows.size();
    // samples[i][e * (n+1) + s]
    std::vector<std::vector<Complex>> samples(r, std::vector<Complex>(basis.edge_count() * (n + 1)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t e = 0; e < basis.edge_count(); ++e)
            for (std::size_t s = 0; s <= n; ++s)
                samples[i][e * (n + 1) + s] =
                    weight[i] * basis.evaluate(out.rows[i], shift, e, static_cast<double>(s) / static_cast<double>(n));
    out.entries.assign(r * r, Complex());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Complex acc;
            for (std::size_t e = 0; e < basis.edge_count(); ++e) {
                const Complex *a = &samples[i][e * (n + 1)];
                const Complex *b = &samples[j][e * (n + 1)];
                Complex edge_sum = 0.5 * (a[0] * std::conj(b[0]) + a[n] * std::conj(b[n]));
                for (std::size_t s = 1; s < n; ++s) edge_sum += a[s] * std::conj(b[s]);
                acc += edge_sum;
            }
            out.entries[i * r + j] = acc / static_cast<double>(n);
        }
    }
    return out;
}

std::string export_basis(const FundamentalBasis &basis) {
    std::ostringstream out;
    out << "# k omega edge re(gamma) im(gamma) re(delta) im(delta)\n";
    char buf[256];
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto &f = basis[k];
        for (std::size_t e = 0; e < basis.edge_count(); ++e) {
            std::snprintf(buf, sizeof buf, "%zu %.17g %zu %.17g %.17g %.17g %.17g\n", k, f.omega, e,
                          f.gamma[e].real(), f.gamma[e].imag(), f.delta[e].real(), f.delta[e].imag());
            out << buf;
        }
    }
    return out.str();
}

}  // namespace qg
