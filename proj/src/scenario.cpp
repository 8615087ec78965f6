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

#include "qgfft/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgfft/error.hpp"

namespace qg {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool to_double(std::string_view s, double &out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

bool to_size(std::string_view s, std::size_t &out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ',' && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_bool(std::string_view s, bool &out) {
    s = trim(s);
    if (s == "on" || s == "true" || s == "yes" || s == "1") return out = true, true;
    if (s == "off" || s == "false" || s == "no" || s == "0") return out = false, true;
    return false;
}

std::string resolve(const std::string &base, std::string_view rel) {
    std::filesystem::path p{std::string(rel)};
    if (p.is_relative()) p = std::filesystem::path(base) / p;
    return p.lexically_normal().string();
}

}  // namespace

Equation parse_equation(std::string_view name) {
    if (name == "heat") return Equation::heat;
    if (name == "schrodinger") return Equation::schrodinger;
    if (name == "wave") return Equation::wave;
    if (name == "fisher-kpp") return Equation::fisher_kpp;
    if (name == "sine-gordon") return Equation::sine_gordon;
    throw Error(ErrorCode::parse, "unknown equation `" + std::string(name) + "`");
}

std::string_view equation_name(Equation eq) {
    switch (eq) {
    case Equation::heat: return "heat";
    case Equation::schrodinger: return "schrodinger";
    case Equation::wave: return "wave";
    case Equation::fisher_kpp: return "fisher-kpp";
    case Equation::sine_gordon: return "sine-gordon";
    }
    return "?";
}

double Scenario::damping_threshold() const { return f0 ? *f0 : kPi * static_cast<double>(samples) / 8.0; }

std::vector<double> Scenario::resolved_output_times() const {
    std::vector<double> t = output_times;
    if (t.empty()) t.push_back(t_end);
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

Scenario parse_scenario(std::string_view text, const std::string &base_dir) {
    Scenario s;
    bool have_graph = false, have_equation = false, have_t_end = false;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string &why) {
            return Error(ErrorCode::parse, "scenario line " + std::to_string(line_no) + ": " + why);
        };
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw fail("expected `key = value`");
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw fail("empty value for `" + key + "`");

        auto need_double = [&](double &dst) {
            if (!to_double(value, dst)) throw fail("`" + key + "` expects a number");
        };
        auto need_bool = [&](bool &dst) {
            if (!to_bool(value, dst)) throw fail("`" + key + "` expects on/off");
        };
        auto edge_key = [&](std::string_view prefix, std::map<std::string, std::string> &dst) {
            std::string_view sel = std::string_view(key).substr(prefix.size());
            std::size_t idx = 0;
            if (sel != "default" && !to_size(sel, idx)) throw fail("bad edge selector in `" + key + "`");
            try {
                (void)expression_value(value, 0.5);
            } catch (const Error &) {
                throw fail("unknown expression `" + std::string(value) + "`");
            }
            dst[std::string(sel)] = std::string(value);
        };

        if (key == "graph") {
            s.graph_path = resolve(base_dir, value);
            have_graph = true;
        } else if (key == "double_leaves") {
            need_bool(s.double_leaves);
        } else if (key == "equation") {
            try {
                s.equation = parse_equation(value);
            } catch (const Error &e) {
                throw fail(e.what());
            }
            have_equation = true;
        } else if (key == "N") {
            if (!to_size(value, s.samples) || !is_power_of_two(s.samples) || s.samples < 2)
                throw fail("N must be a power of two >= 2");
        } else if (key == "dt") {
            need_double(s.dt);
            if (!(s.dt > 0.0)) throw fail("dt must be positive");
        } else if (key == "t_end") {
            need_double(s.t_end);
            if (!(s.t_end >= 0.0)) throw fail("t_end must be nonnegative");
            have_t_end = true;
        } else if (key == "a") {
            need_double(s.coefficient);
        } else if (key == "damping") {
            need_bool(s.damping);
        } else if (key == "f0") {
            double f = 0.0;
            need_double(f);
            if (!(f > 0.0)) throw fail("f0 must be positive");
            s.f0 = f;
        } else if (key == "output_times") {
            for (auto tok : split_list(value)) {
                double t = 0.0;
                if (!to_double(tok, t) || t < 0.0) throw fail("bad output time `" + std::string(tok) + "`");
                s.output_times.push_back(t);
            }
        } else if (key == "output_path") {
            s.output_path = resolve(base_dir, value);
        } else if (key.rfind("init.", 0) == 0) {
            edge_key("init.", s.init);
        } else if (key.rfind("velocity.", 0) == 0) {
            edge_key("velocity.", s.velocity);
        } else if (key.rfind("coef.", 0) == 0) {
            edge_key("coef.", s.coef);
        } else if (key == "init_file") {
            s.init_file = resolve(base_dir, value);
        } else if (key == "potential") {
            if (value == "multiplicative" || value == "potential") s.potential = PotentialForm::multiplicative;
            else if (value == "source") s.potential = PotentialForm::source;
            else throw fail("potential must be `multiplicative` or `source`");
        } else if (key == "sine_gordon_split") {
            if (value == "rk4") s.split = SineGordonSplit::rk4;
            else if (value == "kick") s.split = SineGordonSplit::kick;
            else throw fail("sine_gordon_split must be `rk4` or `kick`");
        } else if (key == "blowup") {
            need_double(s.blowup);
        } else if (key == "path") {
            for (auto tok : split_list(value)) {
                std::size_t v = 0;
                if (!to_size(tok, v)) throw fail("bad path vertex `" + std::string(tok) + "`");
                s.path.push_back(v);
            }
        } else {
            throw fail("unknown key `" + key + "`");
        }
    }
    if (!have_graph) throw Error(ErrorCode::parse, "scenario is missing `graph`");
    if (!have_equation) throw Error(ErrorCode::parse, "scenario is missing `equation`");
    if (!have_t_end && !s.output_times.empty()) s.t_end = *std::max_element(s.output_times.begin(), s.output_times.end());
    for (double t : s.output_times)
        if (t > s.t_end + 1e-12) throw Error(ErrorCode::parse, "output time beyond t_end");
    if (s.equation == Equation::heat && !s.coef.empty())
        throw Error(ErrorCode::parse, "heat has no coefficient field; use equation = fisher-kpp");
    return s;
}

Scenario load_scenario(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open scenario file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto base = std::filesystem::path(path).parent_path().string();
    return parse_scenario(ss.str(), base.empty() ? "." : base);
}

double expression_value(std::string_view name, double x) {
    if (name == "zero") return 0.0;
    if (name == "one") return 1.0;
    if (name == "tent") return x <= 0.5 ? 2.0 * x : 2.0 - 2.0 * x;
    if (name == "raised_cosine") return 0.5 * (1.0 - std::cos(kTwoPi * x));
    if (name == "one_minus_cos") return 1.0 - std::cos(kTwoPi * x);
    if (name == "sin_pi") return std::sin(kPi * x);
    if (name == "neg_sin_pi") return -std::sin(kPi * x);
    if (name == "capacity_dip") return 1.0 - 0.3 * (1.0 - std::cos(kTwoPi * x));
    double c = 0.0;
    if (to_double(name, c)) return c;
    throw Error(ErrorCode::parse, "unknown expression `" + std::string(name) + "`");
}

Problem prepare_problem(const MetricGraph &metric, bool double_leaves) {
    Problem p;
    if (double_leaves) {
        auto doubled = double_at_leaves(metric);
        p.base_unit_edges = metric.total_length();  // original pieces come first
        p.metric = doubled.graph;
        p.graph = subdivide(p.metric);
        p.mirror = mirror_unit_edges(p.graph, doubled);
    } else {
        p.metric = metric;
        p.graph = subdivide(p.metric);
        p.base_unit_edges = p.graph.edge_count();
    }
    p.basis = build_basis(p.graph);
    return p;
}

Problem prepare_problem(const Scenario &s) { return prepare_problem(load_graph(s.graph_path), s.double_leaves); }

SampledField field_from_expressions(const Problem &p, std::size_t samples_per_edge,
                                    const std::map<std::string, std::string> &exprs, std::string_view fallback) {
    const std::size_t ne = p.graph.edge_count();
    std::string def{fallback};
    if (auto it = exprs.find("default"); it != exprs.end()) def = it->second;
    // (expression, flipped) per edge
    std::vector<std::pair<std::string, bool>> chosen(ne, {def, false});
    std::vector<bool> explicit_entry(ne, false);
    for (const auto &[sel, expr] : exprs) {
        if (sel == "default") continue;
        const std::size_t e = std::stoul(sel);
        if (e >= ne)
            throw Error(ErrorCode::invalid_argument,
                        "edge " + sel + " out of range (graph has " + std::to_string(ne) + " unit edges)");
        chosen[e] = {expr, false};
        explicit_entry[e] = true;
    }
    if (p.mirror) {
        for (std::size_t e = 0; e < p.base_unit_edges; ++e) {
            const auto [img, flipped] = (*p.mirror)[e];
            if (explicit_entry[e] && !explicit_entry[img]) chosen[img] = {chosen[e].first, flipped};
        }
    }
    return sample_field(ne, samples_per_edge, [&](std::size_t e, double x) {
        return Complex(expression_value(chosen[e].first, chosen[e].second ? 1.0 - x : x), 0.0);
    });
}

SampledField load_field_csv(const std::string &path, std::size_t edge_count, std::size_t samples_per_edge) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open field file " + path);
    std::string header;
    if (!std::getline(in, header)) throw Error(ErrorCode::parse, path + ": empty field file");
    std::vector<std::string> cols;
    for (auto tok : split_list(header)) cols.emplace_back(tok);
    auto col = [&](const std::string &name) -> std::size_t {
        auto it = std::find(cols.begin(), cols.end(), name);
        if (it == cols.end()) throw Error(ErrorCode::parse, path + ": missing column `" + name + "`");
        return static_cast<std::size_t>(it - cols.begin());
    };
    const std::size_t ce = col("edge"), cn = col("n"), cr = col("re"), ci = col("im");
    SampledField f(edge_count, samples_per_edge);
    std::vector<bool> seen(edge_count * (samples_per_edge + 1), false);
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_list(line);
        if (toks.empty()) continue;
        if (toks.size() < cols.size())
            throw Error(ErrorCode::parse, path + ":" + std::to_string(line_no) + ": too few columns");
        std::size_t e = 0, n = 0;
        double re = 0.0, im = 0.0;
        if (!to_size(toks[ce], e) || !to_size(toks[cn], n) || !to_double(toks[cr], re) || !to_double(toks[ci], im))
            throw Error(ErrorCode::parse, path + ":" + std::to_string(line_no) + ": malformed row");
        if (e >= edge_count || n > samples_per_edge)
            throw Error(ErrorCode::dimension, path + ":" + std::to_string(line_no) + ": sample outside the grid");
        f.at(e, n) = Complex(re, im);
        seen[e * (samples_per_edge + 1) + n] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error(ErrorCode::dimension, path + ": field does not cover every sample");
    return f;
}

void share_vertex_values(const EquilateralGraph &g, SampledField &f) {
    const std::size_t n = f.samples_per_edge();
    std::vector<Complex> sum(g.vertex_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        sum[g.edge(e).tail] += f.at(e, 0);
        sum[g.edge(e).head] += f.at(e, n);
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        const auto &ue = g.edge(e);
        f.at(e, 0) = sum[ue.tail] / static_cast<double>(g.degree(ue.tail));
        f.at(e, n) = sum[ue.head] / static_cast<double>(g.degree(ue.head));
    }
}

namespace {

void check_state(const SampledField &u, double bound, std::size_t step, double t) {
    double worst = 0.0;
    for (const auto &z : u.values()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InstabilityError(step, t, "non-finite state at step " + std::to_string(step) + " (t = " +
                                                std::to_string(t) + ")");
        worst = std::max(worst, std::abs(z));
    }
    if (worst > bound)
        throw InstabilityError(step, t, "max |u| = " + std::to_string(worst) + " exceeds " + std::to_string(bound) +
                                            " at step " + std::to_string(step) + " (t = " + std::to_string(t) + ")");
}

bool all_zero(const SampledField &f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Complex &z) { return z == Complex(); });
}

}  // namespace

std::vector<Snapshot> simulate(const Scenario &s, const Problem &p) {
    const std::size_t n = s.samples;
    const Transform transform(p.basis, n);
    const ModeFrequencyTable modes(p.basis, n);
    const bool wave_type = s.equation == Equation::wave || s.equation == Equation::sine_gordon;

    SampledField u = s.init_file.empty() ? field_from_expressions(p, n, s.init, "zero")
                                         : load_field_csv(s.init_file, p.graph.edge_count(), n);
    SampledField v = field_from_expressions(p, n, s.velocity, "zero");
    SampledField coef = field_from_expressions(p, n, s.coef, s.equation == Equation::fisher_kpp ? "one" : "zero");
    share_vertex_values(p.graph, coef);
    const bool has_coef = !all_zero(coef);
    const double a = s.coefficient;

    std::vector<Snapshot> out;
    double t = 0.0;
    std::size_t step = 0;
    auto record = [&](double time) {
        Snapshot snap{time, u, std::nullopt};
        if (wave_type) snap.v = v;
        out.push_back(std::move(snap));
    };
    auto steps_for = [&](double interval) {
        return static_cast<std::size_t>(std::max(1.0, std::ceil(interval / s.dt - 1e-9)));
    };

    const CoefficientFlow heat = [&](SpectralCoefficients &c, double h) { propagate_heat(c, modes, h, a); };
    const CoefficientFlow schrodinger = [&](SpectralCoefficients &c, double h) {
        propagate_schrodinger(c, modes, h, a);
    };
    const FieldFlow logistic = [&](SampledField &f, double h) { logistic_step(f, coef, h); };
    const FieldFlow potential = [&](SampledField &f, double h) {
        if (s.potential == PotentialForm::multiplicative) potential_step(f, coef, h);
        else source_step(f, coef, h);
    };
    const PairFlow sine = [&](SampledField &uu, SampledField &vv, double h) {
        if (s.split == SineGordonSplit::rk4) sine_gordon_step(uu, vv, h);
        else sine_gordon_kick(uu, vv, h);
    };
    const double f0 = s.damping_threshold();
    const WaveFlow wave_linear = [&](WaveState &st, double h) {
        propagate_wave(st, modes, h);
        if (s.damping) {
            damping_filter(st.u, modes, f0);
            damping_filter(st.v, modes, f0);
        }
    };

    for (double target : s.resolved_output_times()) {
        const double interval = target - t;
        if (interval > 0.0) {
            switch (s.equation) {
            case Equation::heat: {
                auto c = transform.forward(u);
                propagate_heat(c, modes, interval, a);
                u = transform.inverse(c);
                check_state(u, s.blowup, ++step, target);
                break;
            }
            case Equation::wave: {
                WaveState st{transform.forward(u), transform.forward(v)};
                propagate_wave(st, modes, interval);
                u = transform.inverse(st.u);
                v = transform.inverse(st.v);
                check_state(u, s.blowup, ++step, target);
                break;
            }
            case Equation::schrodinger:
                if (!has_coef) {
                    auto c = transform.forward(u);
                    propagate_schrodinger(c, modes, interval, a);
                    u = transform.inverse(c);
                    check_state(u, s.blowup, ++step, target);
                    break;
                }
                [[fallthrough]];
            case Equation::fisher_kpp: {
                const std::size_t count = steps_for(interval);
                const double h = interval / static_cast<double>(count);
                const bool fisher = s.equation == Equation::fisher_kpp;
                for (std::size_t i = 0; i < count; ++i) {
                    strang_step(transform, u, h, fisher ? logistic : potential, fisher ? heat : schrodinger);
                    check_state(u, s.blowup, ++step, t + h * static_cast<double>(i + 1));
                }
                break;
            }
            case Equation::sine_gordon: {
                const std::size_t count = steps_for(interval);
                const double h = interval / static_cast<double>(count);
                for (std::size_t i = 0; i < count; ++i) {
                    strang_step(transform, u, v, h, sine, wave_linear);
                    check_state(u, s.blowup, ++step, t + h * static_cast<double>(i + 1));
                }
                break;
            }
            }
            t = target;
        }
        record(target);
    }
    return out;
}

}  // namespace qg
