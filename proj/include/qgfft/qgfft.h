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

/* C interface to the quantum-graph FFT library.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * fallible function returns a qg_status; on failure a thread-local message is
 * available from qg_last_error() until the next call on the same thread.
 *
 * Complex arrays are interleaved (re, im) doubles. A sampled field on E unit
 * edges with N samples per edge holds E * (N + 1) complex values, edge-major.
 * A coefficient array holds rows * N / 2 complex values, row-major.
 */
#ifndef QGFFT_QGFFT_H
#define QGFFT_QGFFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QG_BUILDING_LIBRARY)
#    define QG_API __declspec(dllexport)
#  else
#    define QG_API __declspec(dllimport)
#  endif
#else
#  define QG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qg_status {
    QG_OK = 0,
    QG_ERR_INVALID_ARGUMENT = 1,
    QG_ERR_PARSE = 2,
    QG_ERR_GRAPH = 3,
    QG_ERR_PRECONDITION = 4,
    QG_ERR_DIMENSION = 5,
    QG_ERR_NUMERIC = 6,
    QG_ERR_INSTABILITY = 7,
    QG_ERR_IO = 8,
    QG_ERR_MISMATCH = 9,
    QG_ERR_INTERNAL = 100
} qg_status;

typedef struct qg_graph qg_graph;
typedef struct qg_basis qg_basis;

QG_API const char *qg_version(void);
QG_API const char *qg_status_string(qg_status status);
/* Message for the most recent failure on this thread ("" if none). */
QG_API const char *qg_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

/* Loads a metric graph and subdivides it into unit edges. With
 * double_leaves != 0 the graph is first glued to a mirror copy along its
 * degree-1 vertices. */
QG_API qg_status qg_graph_load(const char *path, int double_leaves, qg_graph **out);
QG_API qg_status qg_graph_parse(const char *text, int double_leaves, qg_graph **out);
QG_API void qg_graph_free(qg_graph *g);

QG_API size_t qg_graph_vertex_count(const qg_graph *g);
/* Vertices of the metric graph before subdivision (after doubling). */
QG_API size_t qg_graph_original_vertex_count(const qg_graph *g);
QG_API size_t qg_graph_edge_count(const qg_graph *g);
QG_API int qg_graph_is_doubled(const qg_graph *g);
/* Tail and head of unit edge e (tail < head); returns QG_ERR_INVALID_ARGUMENT
 * when e is out of range. */
QG_API qg_status qg_graph_edge(const qg_graph *g, size_t e, size_t *tail, size_t *head);

/* Expands a walk through metric-graph vertices into unit edges. The required
 * length is always written to *count. Pass edges = reversed = NULL to query
 * it; otherwise each non-NULL buffer needs `capacity` >= *count entries or
 * QG_ERR_DIMENSION is returned. */
QG_API qg_status qg_graph_path(const qg_graph *g, const size_t *vertices, size_t vertex_count, size_t *edges,
                               int *reversed, size_t capacity, size_t *count);

/* ---- spectrum ---------------------------------------------------------- */

/* Eigenvalues nu of I - T^{-1/2} A T^{-1/2}, ascending. `nu` must hold
 * qg_graph_vertex_count(g) values. */
QG_API qg_status qg_spectrum(const qg_graph *g, double *nu);
/* Dimensions of the Kirchhoff eigenspaces at omega = pi and omega = 2 pi. */
QG_API qg_status qg_special_dimensions(const qg_graph *g, size_t *pi_dim, size_t *two_pi_dim);

/* ---- basis and transforms ---------------------------------------------- */

QG_API qg_status qg_basis_build(const qg_graph *g, qg_basis **out);
QG_API void qg_basis_free(qg_basis *b);
QG_API size_t qg_basis_size(const qg_basis *b);
QG_API size_t qg_basis_edge_count(const qg_basis *b);
/* Fundamental frequencies in [0, 2 pi], ascending; `omega` holds size values. */
QG_API qg_status qg_basis_frequencies(const qg_basis *b, double *omega);
/* Row of the 2 pi cosine eigenfunction, or -1 if absent. */
QG_API long qg_basis_oddcase(const qg_basis *b);
QG_API qg_status qg_basis_export(const qg_basis *b, const char *path);

QG_API qg_status qg_forward(const qg_basis *b, size_t samples_per_edge, const double *field, double *coefficients);
QG_API qg_status qg_inverse(const qg_basis *b, size_t samples_per_edge, const double *coefficients, double *field);
QG_API qg_status qg_naive_forward(const qg_basis *b, size_t samples_per_edge, const double *field,
                                  double *coefficients);
/* Trapezoid norm sqrt(sum_e (1/N) sum_n' |f|^2). */
QG_API qg_status qg_field_norm(size_t edge_count, size_t samples_per_edge, const double *field, double *norm);

/* ---- validation and benchmarking --------------------------------------- */

typedef struct qg_input_check {
    char name[8];
    double field_norm;
    double parseval_error; /* relative */
    double roundtrip_error; /* max abs */
} qg_input_check;

typedef struct qg_validation {
    size_t samples;
    size_t rows;
    int oddcase;
    double gram_diagonal;
    double gram_off_diagonal;
    size_t input_count;
    qg_input_check inputs[4];
} qg_validation;

/* Gram deviations swept over every shift at gram_samples; Parseval and round
 * trip on the four standard inputs at `samples`. matrix_dir may be NULL. */
QG_API qg_status qg_validate(const qg_basis *b, size_t samples, size_t gram_samples, const char *matrix_dir,
                             qg_validation *out);

typedef struct qg_bench_row {
    size_t samples;
    double fast_seconds;
    double naive_seconds;
    double max_difference;
} qg_bench_row;

/* Times forward against naive_forward for each N. Returns QG_ERR_MISMATCH if
 * they disagree by more than 1e-12; `inject` perturbs one coefficient to
 * exercise that path. `rows` holds `count` entries. */
QG_API qg_status qg_bench(const qg_basis *b, const size_t *sizes, size_t count, uint64_t seed, int inject,
                          qg_bench_row *rows);

/* ---- simulation -------------------------------------------------------- */

/* Runs a scenario file and writes one CSV per output time to
 * <prefix>_t<time>.csv (plus <prefix>_path_t<time>.csv when the scenario names
 * a path). `prefix` may be NULL to use the scenario's output_path, or the
 * scenario file's stem next to it. On QG_ERR_INSTABILITY, *failed_step (if
 * non-NULL) receives the step index. The written paths, newline-separated,
 * are copied into `written` when it is non-NULL (truncated to capacity). */
QG_API qg_status qg_simulate_file(const char *scenario_path, const char *prefix, size_t *failed_step, char *written,
                                  size_t capacity);

/* Reads an `edge,n,...,re,im` field CSV for graph g and writes the samples
 * along the metric-vertex walk as `s,edge,n,re,im` CSV to out_path (stdout if
 * NULL or "-"). */
QG_API qg_status qg_project_field_csv(const qg_graph *g, const size_t *vertices, size_t vertex_count,
                                      const char *field_csv, size_t samples_per_edge, const char *out_path);

#ifdef __cplusplus
}
#endif

#endif /* QGFFT_QGFFT_H */
