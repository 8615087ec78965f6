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

#include "qgfft/error.hpp"
#include "qgfft/parallel.hpp"
#include "qgfft/report.hpp"
#include "qgfft/transform.hpp"
#include "test_support.hpp"

using namespace qg;
using qgtest::C;

namespace {

struct Fixture {
    EquilateralGraph graph;
    FundamentalBasis basis;
};

Fixture fixture(const std::string &name, bool doubled = false) {
    auto g = load_graph(qgtest::graph_path(name));
    Fixture f;
    f.graph = subdivide(doubled ? double_at_leaves(g).graph : g);
    f.basis = build_basis(f.graph);
    return f;
}

double max_diff(const std::vector<C> &a, const std::vector<C> &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

SampledField real_random(std::size_t edges, std::size_t n, std::uint64_t seed) {
    auto f = random_field(edges, n, seed);
    for (auto &z : f.values()) z = z.real();
    return f;
}

}  // namespace

TEST(Transform, ConstantOnCube) {
    const auto fx = fixture("cube.graph");
    const auto f = sample_field(12, 16, [](std::size_t, double) { return C(1.0); });
    const auto c = forward(fx.basis, f);
    EXPECT_NEAR(std::abs(c.at(0, 0) - std::sqrt(12.0)), 0.0, 1e-13);
    double rest = 0.0;
    for (std::size_t k = 0; k < c.rows(); ++k)
        for (std::size_t m = 0; m < c.row_length(); ++m)
            if (k || m) rest = std::max(rest, std::abs(c.at(k, m)));
    EXPECT_LT(rest, 1e-13);
}

TEST(Transform, InverseOfConstantCoefficient) {
    const auto fx = fixture("cube.graph");
    SpectralCoefficients c(fx.basis.size(), 16, fx.basis.oddcase());
    c.at(0, 0) = std::sqrt(12.0);
    const auto f = inverse(fx.basis, c);
    for (const auto &z : f.values()) EXPECT_LT(std::abs(z - 1.0), 1e-13);
}

TEST(Transform, SampledEigenfunctionGivesUnitCoefficient) {
    const auto fx = fixture("triangle.graph");
    const std::size_t n = 16;
    const Transform t(fx.basis, n);
    for (std::size_t k = 0; k < fx.basis.size(); ++k) {
        const std::size_t top = fx.basis[k].kind == ModeKind::constant ? 1 : n / 2;
        for (std::size_t m = 0; m < top; ++m) {
            if (fx.basis[k].kind == ModeKind::two_pi_sine && m == n / 2 - 1) continue;  // samples to zero
            const auto f = sample_field(fx.basis.edge_count(), n,
                                        [&](std::size_t e, double x) { return fx.basis.evaluate(k, m, e, x); });
            const auto c = t.forward(f);
            const double expect = (k == fx.basis.oddcase() && m == n / 2 - 1) ? std::sqrt(2.0) : 1.0;
            for (std::size_t j = 0; j < c.rows(); ++j)
                for (std::size_t q = 0; q < c.row_length(); ++q) {
                    const double want = (j == k && q == m) ? expect : 0.0;
                    EXPECT_LT(std::abs(c.at(j, q) - want), 1e-13) << k << "," << m << " -> " << j << "," << q;
                }
        }
    }
}

TEST(Transform, InverseOfUnitCoefficientIsSampledEigenfunction) {
    const auto fx = fixture("loop_box.graph");
    const std::size_t n = 32;
    const Transform t(fx.basis, n);
    for (std::size_t k = 0; k < fx.basis.size(); ++k) {
        for (std::size_t m : {0u, 1u, 7u, 15u}) {
            if (fx.basis[k].kind == ModeKind::constant && m) continue;
            SpectralCoefficients c(fx.basis.size(), n, fx.basis.oddcase());
            c.at(k, m) = 1.0;
            const auto f = t.inverse(c);
            const double scale = (k == fx.basis.oddcase() && m == n / 2 - 1) ? std::sqrt(0.5) : 1.0;
            double worst = 0.0;
            for (std::size_t e = 0; e < fx.basis.edge_count(); ++e)
                for (std::size_t s = 0; s <= n; ++s)
                    worst = std::max(worst, std::abs(f.at(e, s) - scale * fx.basis.evaluate(k, m, e, double(s) / n)));
            EXPECT_LT(worst, 1e-13) << k << "," << m;
        }
    }
}

TEST(Transform, AgreesWithNaiveOnRealAndComplexFields) {
    for (const auto &[name, dbl] : std::vector<std::pair<std::string, bool>>{
             {"cube.graph", false}, {"bridge.graph", false}, {"tree.graph", true}, {"petersen.graph", false}}) {
        const auto fx = fixture(name, dbl);
        for (std::size_t n : {16u, 32u}) {
            const std::size_t ne = fx.basis.edge_count();
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                for (const auto &f : {random_field(ne, n, seed), real_random(ne, n, seed + 100)}) {
                    const auto a = forward(fx.basis, f).values();
                    const auto b = naive_forward(fx.basis, f).values();
                    EXPECT_LT(max_diff(a, b), 1e-12) << name << " N=" << n;
                }
            }
        }
    }
}

TEST(Transform, RoundTripAndParseval) {
    for (const auto &[name, dbl] : std::vector<std::pair<std::string, bool>>{
             {"cube.graph", false}, {"fig8.graph", false}, {"star.graph", true}, {"triangle.graph", false}}) {
        const auto fx = fixture(name, dbl);
        for (std::size_t n : {16u, 64u, 256u}) {
            const Transform t(fx.basis, n);
            const auto f = qgtest::continuous_random(fx.graph, n, n);
            const auto c = t.forward(f);
            const auto back = t.inverse(c);
            EXPECT_LT(max_diff(back.values(), f.values()), 1e-12 * std::max(1.0, f.max_abs())) << name << n;
            const double nf = field_norm(f);
            EXPECT_NEAR(c.sum_of_squares(), nf * nf, 1e-12 * nf * nf) << name << n;
        }
    }
}

TEST(Transform, DiscontinuousDataIsProjected) {
    // Samples that disagree at a vertex are not in the sampled space; the
    // round trip returns the vertex average instead.
    const auto fx = fixture("triangle.graph");
    auto f = qgtest::continuous_random(fx.graph, 16, 5);
    const C shared = f.at(0, 0);
    f.at(0, 0) += 1.0;
    const auto back = inverse(fx.basis, forward(fx.basis, f));
    // Both ends meeting at that vertex now carry the average of 2 values.
    EXPECT_LT(std::abs(back.at(0, 0) - (shared + 0.5)), 1e-12);
    for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t s = 1; s < 16; ++s) EXPECT_LT(std::abs(back.at(e, s) - f.at(e, s)), 1e-12);
}

TEST(Transform, Linearity) {
    const auto fx = fixture("k4.graph");
    const Transform t(fx.basis, 32);
    const auto f = random_field(6, 32, 1), g = random_field(6, 32, 2);
    const C a(0.3, -1.2), b(2.0, 0.5);
    SampledField h(6, 32);
    for (std::size_t i = 0; i < h.values().size(); ++i) h.values()[i] = a * f.values()[i] + b * g.values()[i];
    const auto cf = t.forward(f), cg = t.forward(g), ch = t.forward(h);
    double worst = 0.0;
    for (std::size_t i = 0; i < ch.values().size(); ++i)
        worst = std::max(worst, std::abs(ch.values()[i] - a * cf.values()[i] - b * cg.values()[i]));
    EXPECT_LT(worst, 1e-12);
}

TEST(Transform, DeterministicAcrossThreadCounts) {
    const auto fx = fixture("fig8.graph");
    const auto f = random_field(fx.basis.edge_count(), 64, 9);
    setenv("QG_THREADS", "1", 1);
    const auto a = forward(fx.basis, f);
    const auto ia = inverse(fx.basis, a);
    setenv("QG_THREADS", "4", 1);
    const auto b = forward(fx.basis, f);
    const auto ib = inverse(fx.basis, b);
    unsetenv("QG_THREADS");
    EXPECT_EQ(a.values(), b.values());
    EXPECT_EQ(ia.values(), ib.values());
}

TEST(Transform, ShapeErrors) {
    const auto fx = fixture("triangle.graph");
    EXPECT_THROW(Transform(fx.basis, 24), Error);
    const Transform t(fx.basis, 16);
    EXPECT_THROW(t.forward(SampledField(3, 32)), Error);
    EXPECT_THROW(t.forward(SampledField(4, 16)), Error);
    EXPECT_THROW(t.inverse(SpectralCoefficients(fx.basis.size(), 32, fx.basis.oddcase())), Error);
}

TEST(FieldNorm, Examples) {
    const auto one = sample_field(12, 16, [](std::size_t, double) { return C(1.0); });
    EXPECT_NEAR(field_norm(one), std::sqrt(12.0), 1e-14);
    const auto s = sample_field(5, 8, [](std::size_t e, double x) {
        return C(e == 2 ? std::sin(2 * qgtest::pi * x) : 0.0);
    });
    EXPECT_NEAR(field_norm(s), std::sqrt(0.5), 1e-13);
    EXPECT_EQ(field_norm(SampledField(4, 8)), 0.0);
}

TEST(Resample, PreservesSmoothDataAndNorm) {
    const auto fx = fixture("triangle.graph");
    const auto f = sample_field(3, 16, [&](std::size_t e, double x) {
        return fx.basis.evaluate(2, 1, e, x) + 0.5 * fx.basis.evaluate(4, 0, e, x);
    });
    const auto c = forward(fx.basis, f);
    const auto up = resample(c, 64);
    const auto g = inverse(fx.basis, up);
    double worst = 0.0;
    for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t s = 0; s <= 64; ++s) {
            const double x = double(s) / 64;
            worst = std::max(worst, std::abs(g.at(e, s) - fx.basis.evaluate(2, 1, e, x) -
                                                 0.5 * fx.basis.evaluate(4, 0, e, x)));
        }
    EXPECT_LT(worst, 1e-12);
    EXPECT_NEAR(up.sum_of_squares(), c.sum_of_squares(), 1e-12);
    EXPECT_THROW(resample(up, 16), Error);
}

TEST(Resample, NyquistCosineKeepsItsAmplitude) {
    const auto fx = fixture("cube.graph");
    const auto d = standard_inputs(12, 16)[3].second;  // (-1)^n: cos(16 pi x)
    const auto g = inverse(fx.basis, resample(forward(fx.basis, d), 64));
    for (std::size_t s = 0; s <= 64; ++s)
        EXPECT_NEAR(g.at(5, s).real(), std::cos(16 * qgtest::pi * double(s) / 64), 1e-12);
}
