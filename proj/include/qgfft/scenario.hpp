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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgfft/graph.hpp"
#include "qgfft/pde.hpp"
#include "qgfft/spectral_basis.hpp"
#include "qgfft/transform.hpp"

namespace qg {

enum class Equation { heat, schrodinger, wave, fisher_kpp, sine_gordon };

/// How p(x) enters psi_t = i a psi_xx (...): as -i p psi, or as a source + p.
enum class PotentialForm { multiplicative, source };

/// rk4: u' = v, v' = -sin u by RK4 between wave steps.
/// kick: v' = -sin u only (u frozen), integrated exactly.
enum class SineGordonSplit { rk4, kick };

struct Scenario {
    std::string graph_path;
    bool double_leaves = false;
    Equation equation = Equation::heat;
    double coefficient = 1.0;
    std::size_t samples = 64;
    double dt = 0.05;
    double t_end = 1.0;
    bool damping = false;
    std::optional<double> f0;  // default pi N / 8
    std::vector<double> output_times;
    std::string output_path;

    /// Unit-edge index -> expression name, plus a "default" fallback.
    std::map<std::string, std::string> init;
    std::map<std::string, std::string> velocity;
    std::map<std::string, std::string> coef;
    std::string init_file;

    PotentialForm potential = PotentialForm::multiplicative;
    SineGordonSplit split = SineGordonSplit::rk4;
    /// Abort when max |u| exceeds this; non-finite values always abort.
    double blowup = std::numeric_limits<double>::infinity();
    /// Original-vertex walk for path-projected output.
    std::vector<VertexId> path;

    double damping_threshold() const;
    std::vector<double> resolved_output_times() const;
};

Equation parse_equation(std::string_view name);
std::string_view equation_name(Equation eq);

/// `key = value` lines; relative graph/init_file paths resolve against base_dir.
Scenario parse_scenario(std::string_view text, const std::string &base_dir = ".");
Scenario load_scenario(const std::string &path);

/// Value of a named closed-form edge profile at x in [0, 1]. Accepts zero,
/// one, tent, raised_cosine, one_minus_cos, sin_pi, neg_sin_pi,
/// capacity_dip, or a numeric literal.
double expression_value(std::string_view name, double x);

/// Graph, basis and mirror data shared by every run of a scenario.
struct Problem {
    MetricGraph metric;
    EquilateralGraph graph;
    FundamentalBasis basis;
    /// Present when the metric graph was doubled at its leaves.
    std::optional<std::vector<MirrorEdge>> mirror;
    std::size_t base_unit_edges = 0;
};

Problem prepare_problem(const MetricGraph &metric, bool double_leaves);
Problem prepare_problem(const Scenario &s);

/// Samples per-edge expressions. Keys are unit-edge indices or "default".
/// On doubled graphs an assignment to an original edge is copied to its
/// mirror unless the mirror has its own entry.
SampledField field_from_expressions(const Problem &p, std::size_t samples_per_edge,
                                    const std::map<std::string, std::string> &exprs, std::string_view fallback);

/// Reads `edge,n,...,re,im` CSV (header required) into a field.
SampledField load_field_csv(const std::string &path, std::size_t edge_count, std::size_t samples_per_edge);

// Replaces every vertex sample by the mean over its incident edge ends, so a
// pointwise flow driven by the field keeps continuous data continuous.
void share_vertex_values(const EquilateralGraph &g, SampledField &f);

struct Snapshot {
    double time = 0.0;
    SampledField u;
    std::optional<SampledField> v;
};

/// Runs the scenario and returns the state at each output time.
/// Throws InstabilityError on non-finite or blown-up states.
std::vector<Snapshot> simulate(const Scenario &s, const Problem &p);

}  // namespace qg
