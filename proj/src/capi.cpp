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

#include "qgfft/qgfft.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "qgfft/error.hpp"
#include "qgfft/graph.hpp"
#include "qgfft/report.hpp"
#include "qgfft/scenario.hpp"
#include "qgfft/spectral_basis.hpp"
#include "qgfft/transform.hpp"

struct qg_graph {
    qg::MetricGraph metric;
    qg::EquilateralGraph graph;
    bool doubled = false;
};

struct qg_basis {
    qg::FundamentalBasis basis;
};

namespace {

thread_local std::string last_error;

qg_status to_status(qg::ErrorCode c) {
    switch (c) {
    case qg::ErrorCode::invalid_argument: return QG_ERR_INVALID_ARGUMENT;
    case qg::ErrorCode::parse: return QG_ERR_PARSE;
    case qg::ErrorCode::graph: return QG_ERR_GRAPH;
    case qg::ErrorCode::precondition: return QG_ERR_PRECONDITION;
    case qg::ErrorCode::dimension: return QG_ERR_DIMENSION;
    case qg::ErrorCode::numeric: return QG_ERR_NUMERIC;
    case qg::ErrorCode::instability: return QG_ERR_INSTABILITY;
    case qg::ErrorCode::io: return QG_ERR_IO;
    case qg::ErrorCode::mismatch: return QG_ERR_MISMATCH;
    }
    return QG_ERR_INTERNAL;
}

template <class Fn>
qg_status guarded(Fn &&fn) {
    try {
        last_error.clear();
        fn();
        return QG_OK;
    } catch (const qg::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return QG_ERR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return QG_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown exception";
        return QG_ERR_INTERNAL;
    }
}

void require(bool ok, const char *what) {
    if (!ok) throw qg::Error(qg::ErrorCode::invalid_argument, what);
}

qg::SampledField read_field(const qg_basis *b, std::size_t n, const double *data) {
    qg::SampledField f(b->basis.edge_count(), n);
    for (std::size_t i = 0; i < f.values().size(); ++i) f.values()[i] = {data[2 * i], data[2 * i + 1]};
    return f;
}

template <class Values>
void write_complex(const Values &v, double *out) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
}

qg_graph *make_graph(qg::MetricGraph metric, bool double_leaves) {
    auto g = std::make_unique<qg_graph>();
    if (double_leaves) metric = qg::double_at_leaves(metric).graph;
    g->graph = qg::subdivide(metric);
    g->metric = std::move(metric);
    g->doubled = double_leaves;
    return g.release();
}

void check_samples(std::size_t n) {
    require(n >= 2 && qg::is_power_of_two(n), "samples per edge must be a power of two >= 2");
}

// Largest `n` in a field CSV, used when the caller does not pass N.
std::size_t infer_samples(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw qg::Error(qg::ErrorCode::io, "cannot open field file " + path);
    std::string line;
    std::getline(in, line);
    std::size_t col = 0, idx = 0;
    bool found = false;
    for (std::size_t start = 0; start <= line.size(); ++idx) {
        std::size_t end = line.find(',', start);
        if (end == std::string::npos) end = line.size();
        if (line.substr(start, end - start) == "n") col = idx, found = true;
        start = end + 1;
    }
    if (!found) throw qg::Error(qg::ErrorCode::parse, path + ": missing column `n`");
    std::size_t best = 0;
    while (std::getline(in, line)) {
        std::size_t start = 0;
        for (std::size_t i = 0; i < col && start != std::string::npos; ++i) {
            start = line.find(',', start);
            if (start != std::string::npos) ++start;
        }
        if (start == std::string::npos) continue;
        best = std::max<std::size_t>(best, std::strtoull(line.c_str() + start, nullptr, 10));
    }
    return best;
}

}  // namespace

extern "C" {

const char *qg_version(void) { return "1.0.0"; }

const char *qg_status_string(qg_status status) {
    switch (status) {
    case QG_OK: return "ok";
    case QG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QG_ERR_PARSE: return "parse error";
    case QG_ERR_GRAPH: return "invalid graph";
    case QG_ERR_PRECONDITION: return "precondition violated";
    case QG_ERR_DIMENSION: return "dimension mismatch";
    case QG_ERR_NUMERIC: return "numerical failure";
    case QG_ERR_INSTABILITY: return "instability";
    case QG_ERR_IO: return "i/o error";
    case QG_ERR_MISMATCH: return "implementation mismatch";
    case QG_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char *qg_last_error(void) { return last_error.c_str(); }

qg_status qg_graph_load(const char *path, int double_leaves, qg_graph **out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = make_graph(qg::load_graph(path), double_leaves != 0);
    });
}

qg_status qg_graph_parse(const char *text, int double_leaves, qg_graph **out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = make_graph(qg::parse_graph(text), double_leaves != 0);
    });
}

void qg_graph_free(qg_graph *g) { delete g; }

size_t qg_graph_vertex_count(const qg_graph *g) { return g ? g->graph.vertex_count() : 0; }
size_t qg_graph_original_vertex_count(const qg_graph *g) { return g ? g->graph.original_vertex_count() : 0; }
size_t qg_graph_edge_count(const qg_graph *g) { return g ? g->graph.edge_count() : 0; }
int qg_graph_is_doubled(const qg_graph *g) { return g && g->doubled ? 1 : 0; }

qg_status qg_graph_edge(const qg_graph *g, size_t e, size_t *tail, size_t *head) {
    return guarded([&] {
        require(g && tail && head, "null argument");
        require(e < g->graph.edge_count(), "edge index out of range");
        *tail = g->graph.edge(e).tail;
        *head = g->graph.edge(e).head;
    });
}

qg_status qg_graph_path(const qg_graph *g, const size_t *vertices, size_t vertex_count, size_t *edges,
                        int *reversed, size_t capacity, size_t *count) {
    return guarded([&] {
        require(g && vertices && count, "null argument");
        const auto path = qg::path_trace_metric(g->graph, {vertices, vertices + vertex_count});
        *count = path.size();
        if (!edges && !reversed) return;  // size query
        if (capacity < path.size())
            throw qg::Error(qg::ErrorCode::dimension, "path needs " + std::to_string(path.size()) +
                                                          " entries, buffer holds " + std::to_string(capacity));
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (edges) edges[i] = path[i].edge;
            if (reversed) reversed[i] = path[i].reversed ? 1 : 0;
        }
    });
}

qg_status qg_spectrum(const qg_graph *g, double *nu) {
    return guarded([&] {
        require(g && nu, "null argument");
        const auto s = qg::discrete_spectrum(g->graph);
        std::copy(s.eigenvalues.begin(), s.eigenvalues.end(), nu);
    });
}

qg_status qg_special_dimensions(const qg_graph *g, size_t *pi_dim, size_t *two_pi_dim) {
    return guarded([&] {
        require(g && pi_dim && two_pi_dim, "null argument");
        g->graph.require_min_degree_two();
        *pi_dim = qg::special_eigenspace(g->graph, 1).basis.size();
        *two_pi_dim = qg::special_eigenspace(g->graph, 2).basis.size();
    });
}

qg_status qg_basis_build(const qg_graph *g, qg_basis **out) {
    return guarded([&] {
        require(g && out, "null argument");
        auto b = std::make_unique<qg_basis>();
        b->basis = qg::build_basis(g->graph);
        *out = b.release();
    });
}

void qg_basis_free(qg_basis *b) { delete b; }
size_t qg_basis_size(const qg_basis *b) { return b ? b->basis.size() : 0; }
size_t qg_basis_edge_count(const qg_basis *b) { return b ? b->basis.edge_count() : 0; }

qg_status qg_basis_frequencies(const qg_basis *b, double *omega) {
    return guarded([&] {
        require(b && omega, "null argument");
        const auto f = b->basis.frequencies();
        std::copy(f.begin(), f.end(), omega);
    });
}

long qg_basis_oddcase(const qg_basis *b) {
    if (!b || !b->basis.oddcase()) return -1;
    return static_cast<long>(*b->basis.oddcase());
}

qg_status qg_basis_export(const qg_basis *b, const char *path) {
    return guarded([&] {
        require(b && path, "null argument");
        std::ofstream out(path);
        if (!out) throw qg::Error(qg::ErrorCode::io, std::string("cannot write ") + path);
        out << qg::export_basis(b->basis);
    });
}

qg_status qg_forward(const qg_basis *b, size_t samples_per_edge, const double *field, double *coefficients) {
    return guarded([&] {
        require(b && field && coefficients, "null argument");
        check_samples(samples_per_edge);
        const auto c = qg::Transform(b->basis, samples_per_edge).forward(read_field(b, samples_per_edge, field));
        write_complex(c.values(), coefficients);
    });
}

qg_status qg_inverse(const qg_basis *b, size_t samples_per_edge, const double *coefficients, double *field) {
    return guarded([&] {
        require(b && field && coefficients, "null argument");
        check_samples(samples_per_edge);
        qg::SpectralCoefficients c(b->basis.size(), samples_per_edge, b->basis.oddcase());
        for (std::size_t i = 0; i < c.values().size(); ++i)
            c.values()[i] = {coefficients[2 * i], coefficients[2 * i + 1]};
        write_complex(qg::Transform(b->basis, samples_per_edge).inverse(c).values(), field);
    });
}

qg_status qg_naive_forward(const qg_basis *b, size_t samples_per_edge, const double *field, double *coefficients) {
    return guarded([&] {
        require(b && field && coefficients, "null argument");
        check_samples(samples_per_edge);
        write_complex(qg::naive_forward(b->basis, read_field(b, samples_per_edge, field)).values(), coefficients);
    });
}

qg_status qg_field_norm(size_t edge_count, size_t samples_per_edge, const double *field, double *norm) {
    return guarded([&] {
        require(field && norm, "null argument");
        require(samples_per_edge > 0, "samples per edge must be positive");
        qg::SampledField f(edge_count, samples_per_edge);
        for (std::size_t i = 0; i < f.values().size(); ++i) f.values()[i] = {field[2 * i], field[2 * i + 1]};
        *norm = qg::field_norm(f);
    });
}

qg_status qg_validate(const qg_basis *b, size_t samples, size_t gram_samples, const char *matrix_dir,
                      qg_validation *out) {
    return guarded([&] {
        require(b && out, "null argument");
        check_samples(samples);
        check_samples(gram_samples);
        const auto r = qg::validate(b->basis, samples, gram_samples, matrix_dir ? matrix_dir : "");
        *out = qg_validation{};
        out->samples = r.samples;
        out->rows = r.rows;
        out->oddcase = r.oddcase ? 1 : 0;
        out->gram_diagonal = r.gram_diagonal;
        out->gram_off_diagonal = r.gram_off_diagonal;
        out->input_count = std::min<std::size_t>(r.inputs.size(), 4);
        for (std::size_t i = 0; i < out->input_count; ++i) {
            auto &dst = out->inputs[i];
            std::strncpy(dst.name, r.inputs[i].name.c_str(), sizeof dst.name - 1);
            dst.field_norm = r.inputs[i].field_norm;
            dst.parseval_error = r.inputs[i].parseval_error;
            dst.roundtrip_error = r.inputs[i].roundtrip_error;
        }
    });
}

qg_status qg_bench(const qg_basis *b, const size_t *sizes, size_t count, uint64_t seed, int inject,
                   qg_bench_row *rows) {
    return guarded([&] {
        require(b && sizes && rows, "null argument");
        const auto r = qg::bench(b->basis, {sizes, sizes + count}, seed, inject != 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            rows[i] = {r[i].samples, r[i].fast_seconds, r[i].naive_seconds, r[i].max_difference};
    });
}

qg_status qg_simulate_file(const char *scenario_path, const char *prefix, size_t *failed_step, char *written,
                           size_t capacity) {
    if (failed_step) *failed_step = 0;
    return guarded([&] {
        require(scenario_path != nullptr, "null argument");
        const auto s = qg::load_scenario(scenario_path);
        const auto problem = qg::prepare_problem(s);
        std::string pre;
        if (prefix && *prefix) pre = prefix;
        else if (!s.output_path.empty()) pre = s.output_path;
        else {
            std::filesystem::path p(scenario_path);
            pre = (p.parent_path() / p.stem()).string();
        }
        std::vector<qg::Snapshot> snaps;
        try {
            snaps = qg::simulate(s, problem);
        } catch (const qg::InstabilityError &e) {
            if (failed_step) *failed_step = e.step();
            throw;
        }
        const auto files = qg::write_snapshots(s, problem, snaps, pre);
        if (written && capacity > 0) {
            std::string joined;
            for (const auto &f : files) joined += f + '\n';
            const std::size_t len = std::min(joined.size(), capacity - 1);
            std::memcpy(written, joined.data(), len);
            written[len] = '\0';
        }
    });
}

qg_status qg_project_field_csv(const qg_graph *g, const size_t *vertices, size_t vertex_count,
                               const char *field_csv, size_t samples_per_edge, const char *out_path) {
    return guarded([&] {
        require(g && vertices && field_csv, "null argument");
        const std::size_t n = samples_per_edge ? samples_per_edge : infer_samples(field_csv);
        check_samples(n);
        const auto f = qg::load_field_csv(field_csv, g->graph.edge_count(), n);
        const auto path = qg::path_trace_metric(g->graph, {vertices, vertices + vertex_count});
        const auto text = qg::path_csv(path, f);
        if (!out_path || std::string_view(out_path) == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(out_path);
        if (!out) throw qg::Error(qg::ErrorCode::io, std::string("cannot write ") + out_path);
        out << text;
    });
}

}  // extern "C"
