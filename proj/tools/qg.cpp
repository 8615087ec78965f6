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

// qg: command-line front end to libqgfft. Uses only the C interface.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgfft/qgfft.h"

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct GraphDeleter {
    void operator()(qg_graph *g) const { qg_graph_free(g); }
};
struct BasisDeleter {
    void operator()(qg_basis *b) const { qg_basis_free(b); }
};
using GraphPtr = std::unique_ptr<qg_graph, GraphDeleter>;
using BasisPtr = std::unique_ptr<qg_basis, BasisDeleter>;

struct Failure {
    qg_status status;
};

void check(qg_status s) {
    if (s != QG_OK) throw Failure{s};
}

GraphPtr open_graph(const std::string &path, bool double_leaves) {
    qg_graph *g = nullptr;
    check(qg_graph_load(path.c_str(), double_leaves ? 1 : 0, &g));
    return GraphPtr(g);
}

BasisPtr open_basis(const qg_graph *g) {
    qg_basis *b = nullptr;
    check(qg_basis_build(g, &b));
    return BasisPtr(b);
}

int cmd_spectrum(const std::string &graph, bool doubled) {
    auto g = open_graph(graph, doubled);
    const std::size_t nv = qg_graph_vertex_count(g.get());
    std::vector<double> nu(nv);
    check(qg_spectrum(g.get(), nu.data()));
    std::size_t pi_dim = 0, two_pi_dim = 0;
    check(qg_special_dimensions(g.get(), &pi_dim, &two_pi_dim));
    std::printf("# vertices %zu, unit edges %zu\n", nv, qg_graph_edge_count(g.get()));
    std::printf("%-20s %-20s %-20s\n", "nu", "omega1", "omega2");
    for (double v : nu) {
        // acos is ill-conditioned at the ends of [0, 2]; print those exactly.
        if (std::abs(v) < 1e-10) v = 0.0;
        if (std::abs(v - 2.0) < 1e-10) v = 2.0;
        const double w1 = std::acos(std::clamp(1.0 - v, -1.0, 1.0));
        std::printf("%-20.12f %-20.12f %-20.12f\n", v, w1, kTwoPi - w1);
    }
    std::printf("pi-space dimension %zu\n", pi_dim);
    std::printf("2pi-space dimension %zu\n", two_pi_dim);
    return 0;
}

int cmd_validate(const std::string &graph, bool doubled, std::size_t n, std::size_t gram_n,
                 const std::string &matrices, double tol) {
    auto g = open_graph(graph, doubled);
    auto b = open_basis(g.get());
    qg_validation r{};
    check(qg_validate(b.get(), n, gram_n, matrices.empty() ? nullptr : matrices.c_str(), &r));
    std::printf("graph %s: %zu unit edges, %zu fundamental rows, oddcase %s\n", graph.c_str(),
                qg_basis_edge_count(b.get()), r.rows, r.oddcase ? "yes" : "no");
    std::printf("orthonormality (N = %zu, all shifts): max|<Psi_k,Psi_k> - 1| = %.3e  max offdiag = %.3e\n", gram_n,
                r.gram_diagonal, r.gram_off_diagonal);
    std::printf("%-6s %-14s %-18s %-18s\n", "input", "norm", "parseval (rel)", "round trip (abs)");
    double worst = std::max(r.gram_diagonal, r.gram_off_diagonal);
    for (std::size_t i = 0; i < r.input_count; ++i) {
        const auto &in = r.inputs[i];
        std::printf("%-6s %-14.6e %-18.3e %-18.3e\n", in.name, in.field_norm, in.parseval_error, in.roundtrip_error);
        worst = std::max({worst, in.parseval_error, in.roundtrip_error});
    }
    const bool ok = worst <= tol;
    std::printf("%s (worst %.3e, tolerance %.1e)\n", ok ? "PASS" : "FAIL", worst, tol);
    return ok ? 0 : 1;
}

int cmd_simulate(const std::string &scenario, const std::string &prefix) {
    std::size_t step = 0;
    std::string written(1 << 16, '\0');
    const qg_status s =
        qg_simulate_file(scenario.c_str(), prefix.empty() ? nullptr : prefix.c_str(), &step, written.data(), written.size());
    if (s == QG_ERR_INSTABILITY) std::fprintf(stderr, "qg: simulation diverged at step %zu\n", step);
    check(s);
    std::fputs(written.c_str(), stdout);
    return 0;
}

int cmd_bench(const std::string &graph, bool doubled, const std::vector<std::size_t> &sizes, std::uint64_t seed,
              bool inject) {
    auto g = open_graph(graph, doubled);
    auto b = open_basis(g.get());
    std::vector<qg_bench_row> rows(sizes.size());
    check(qg_bench(b.get(), sizes.data(), sizes.size(), seed, inject ? 1 : 0, rows.data()));
    const std::size_t ne = qg_basis_edge_count(b.get());
    std::printf("%-6s %-6s %-14s %-14s %-10s %-10s\n", "E", "N", "forward_s", "naive_s", "ratio", "max_diff");
    for (const auto &r : rows)
        std::printf("%-6zu %-6zu %-14.6e %-14.6e %-10.2f %-10.2e\n", ne, r.samples, r.fast_seconds, r.naive_seconds,
                    r.naive_seconds / r.fast_seconds, r.max_difference);
    return 0;
}

int cmd_path(const std::string &graph, bool doubled, const std::vector<std::size_t> &vertices,
             const std::string &field, std::size_t n, const std::string &out) {
    auto g = open_graph(graph, doubled);
    check(qg_project_field_csv(g.get(), vertices.data(), vertices.size(), field.c_str(), n,
                               out.empty() ? nullptr : out.c_str()));
    return 0;
}

int cmd_basis(const std::string &graph, bool doubled, const std::string &out) {
    auto g = open_graph(graph, doubled);
    auto b = open_basis(g.get());
    check(qg_basis_export(b.get(), out.c_str()));
    std::printf("wrote %zu basis functions to %s\n", qg_basis_size(b.get()), out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum-graph FFT toolkit"};
    app.set_version_flag("--version", std::string(qg_version()));
    app.require_subcommand(1);

    std::string graph, scenario, field, out, prefix, matrices;
    bool doubled = false, inject = false;
    std::size_t n = 64, gram_n = 16, path_n = 0;
    double tol = 1e-13;
    std::vector<std::size_t> sizes, vertices;
    std::uint64_t seed = 1;

    auto *spectrum = app.add_subcommand("spectrum", "Print the discrete spectrum and special eigenspace dimensions");
    spectrum->add_option("graph", graph, "Graph file")->required();
    spectrum->add_flag("--double-leaves", doubled, "Glue a mirror copy along degree-1 vertices first");

    auto *validate = app.add_subcommand("validate", "Orthonormality, Parseval and round-trip tables");
    validate->add_option("graph", graph, "Graph file")->required();
    validate->add_option("--n", n, "Samples per edge for Parseval and round trip")->default_val(64);
    validate->add_option("--gram-n", gram_n, "Samples per edge for the Gram matrices")->default_val(16);
    validate->add_option("--matrices", matrices, "Directory to write every Gram matrix to");
    validate->add_option("--tol", tol, "Pass threshold for every table entry")->default_val(1e-13);
    validate->add_flag("--double-leaves", doubled, "Glue a mirror copy along degree-1 vertices first");

    auto *simulate = app.add_subcommand("simulate", "Run a PDE scenario and write CSV snapshots");
    simulate->add_option("scenario", scenario, "Scenario file")->required();
    simulate->add_option("--prefix", prefix, "Output file prefix (default: output_path or the scenario stem)");

    auto *bench = app.add_subcommand("bench", "Time the fast transform against the direct sum");
    bench->add_option("graph", graph, "Graph file")->required();
    bench->add_option("--n", sizes, "Samples per edge, comma separated")->delimiter(',')->required();
    bench->add_option("--seed", seed, "Seed for the random test fields")->default_val(1);
    bench->add_flag("--inject-mismatch", inject, "Perturb the fast result to exercise the failure path");
    bench->add_flag("--double-leaves", doubled, "Glue a mirror copy along degree-1 vertices first");

    auto *path = app.add_subcommand("path", "Project a field CSV onto a walk through the graph");
    path->add_option("graph", graph, "Graph file")->required();
    path->add_option("--vertices", vertices, "Walk through metric-graph vertices, comma separated")
        ->delimiter(',')
        ->required();
    path->add_option("--field", field, "Field CSV with edge,n,re,im columns")->required();
    path->add_option("--n", path_n, "Samples per edge (default: inferred from the CSV)")->default_val(0);
    path->add_option("--out", out, "Output CSV (default: stdout)");
    path->add_flag("--double-leaves", doubled, "Glue a mirror copy along degree-1 vertices first");

    auto *basis = app.add_subcommand("basis", "Export the fundamental basis coefficients");
    basis->add_option("graph", graph, "Graph file")->required();
    basis->add_option("--out", out, "Output file")->required();
    basis->add_flag("--double-leaves", doubled, "Glue a mirror copy along degree-1 vertices first");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*spectrum) return cmd_spectrum(graph, doubled);
        if (*validate) return cmd_validate(graph, doubled, n, gram_n, matrices, tol);
        if (*simulate) return cmd_simulate(scenario, prefix);
        if (*bench) return cmd_bench(graph, doubled, sizes, seed, inject);
        if (*path) return cmd_path(graph, doubled, vertices, field, path_n, out);
        if (*basis) return cmd_basis(graph, doubled, out);
    } catch (const Failure &f) {
        std::fprintf(stderr, "qg: %s: %s\n", qg_status_string(f.status), qg_last_error());
        return static_cast<int>(f.status);
    }
    return 0;
}
