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

#include "qgfft/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qgfft/error.hpp"

namespace qg {

namespace {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string time_tag(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorCode::io, "write failed for " + path);
}

double max_difference(const SpectralCoefficients &a, const SpectralCoefficients &b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
    return d;
}

// Best of several runs, each repeated until it lasts long enough to time.
template <class Fn>
double time_call(Fn &&fn) {
    using clock = std::chrono::steady_clock;
    double best = std::numeric_limits<double>::infinity();
    std::size_t reps = 1;
    for (int trial = 0; trial < 5; ++trial) {
        for (;;) {
            const auto start = clock::now();
            for (std::size_t r = 0; r < reps; ++r) fn();
            const double secs = std::chrono::duration<double>(clock::now() - start).count();
            if (secs >= 0.02 || reps >= (std::size_t{1} << 20)) {
                best = std::min(best, secs / static_cast<double>(reps));
                break;
            }
            reps *= 2;
        }
    }
    return best;
}

}  // namespace

double ValidationReport::worst() const {
    double w = std::max(gram_diagonal, gram_off_diagonal);
    for (const auto &in : inputs) w = std::max({w, in.parseval_error, in.roundtrip_error});
    return w;
}

std::vector<std::pair<std::string, SampledField>> standard_inputs(std::size_t edges, std::size_t samples) {
    std::vector<std::pair<std::string, SampledField>> out;
    SampledField a(edges, samples);
    a.at(0, samples / 2) = 1.0;
    out.emplace_back("A", std::move(a));
    out.emplace_back("B", sample_field(edges, samples, [](std::size_t, double) { return Complex(1.0); }));
    out.emplace_back("C", sample_field(edges, samples, [](std::size_t e, double x) {
                         return Complex(e == 0 ? 1.0 - std::cos(kTwoPi * x) : 0.0);
                     }));
    SampledField d(edges, samples);
    for (std::size_t e = 0; e < edges; ++e)
        for (std::size_t n = 0; n <= samples; ++n) d.at(e, n) = n % 2 == 0 ? 1.0 : -1.0;
    out.emplace_back("D", std::move(d));
    return out;
}

ValidationReport validate(const FundamentalBasis &basis, std::size_t samples, std::size_t gram_samples,
                          const std::string &matrix_dir) {
    ValidationReport r;
    r.samples = samples;
    r.rows = basis.size();
    r.oddcase = basis.oddcase().has_value();
    if (!matrix_dir.empty()) std::filesystem::create_directories(matrix_dir);
    for (std::size_t m = 0; m <= gram_samples / 2; ++m) {
        const auto gm = gram_matrix(basis, gram_samples, m);
        r.gram_diagonal = std::max(r.gram_diagonal, gm.max_diagonal_deviation());
        r.gram_off_diagonal = std::max(r.gram_off_diagonal, gm.max_off_diagonal());
        if (!matrix_dir.empty()) {
            std::ostringstream os;
            os << "# rows";
            for (auto k : gm.rows) os << ' ' << k;
            os << '\n';
            for (std::size_t i = 0; i < gm.rows.size(); ++i) {
                for (std::size_t j = 0; j < gm.rows.size(); ++j) {
                    const Complex z = gm.at(i, j);
                    os << (j ? " " : "") << g17(z.real()) << ',' << g17(z.imag());
                }
                os << '\n';
            }
            write_text((std::filesystem::path(matrix_dir) / ("gram_m" + std::to_string(m) + ".txt")).string(),
                       os.str());
        }
    }
    const Transform t(basis, samples);
    for (auto &[name, f] : standard_inputs(basis.edge_count(), samples)) {
        InputCheck c;
        c.name = name;
        const auto beta = t.forward(f);
        const auto back = t.inverse(beta);
        const double fn = field_norm(f);
        c.field_norm = fn;
        c.coefficient_norm = std::sqrt(beta.sum_of_squares());
        c.parseval_error = std::abs(fn * fn - beta.sum_of_squares()) / (fn * fn);
        for (std::size_t i = 0; i < f.values().size(); ++i)
            c.roundtrip_error = std::max(c.roundtrip_error, std::abs(f.values()[i] - back.values()[i]));
        r.inputs.push_back(std::move(c));
    }
    return r;
}

SampledField random_field(std::size_t edges, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SampledField f(edges, samples);
    for (auto &z : f.values()) {
        const double re = dist(rng);
        z = Complex(re, dist(rng));
    }
    return f;
}

std::vector<BenchRow> bench(const FundamentalBasis &basis, const std::vector<std::size_t> &sizes,
                            std::uint64_t seed, bool inject) {
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        if (!is_power_of_two(n) || n < 2) throw Error(ErrorCode::invalid_argument, "N must be a power of two >= 2");
        const Transform t(basis, n);
        const SampledField f = random_field(basis.edge_count(), n, seed + n);
        auto fast = t.forward(f);
        const auto slow = naive_forward(basis, f);
        if (inject) fast.values().front() += 1e-6;
        BenchRow row;
        row.samples = n;
        row.max_difference = max_difference(fast, slow);
        if (!(row.max_difference <= 1e-12))
            throw Error(ErrorCode::mismatch, "forward and naive_forward disagree by " + g17(row.max_difference) +
                                                 " at N = " + std::to_string(n));
        row.fast_seconds = time_call([&] { (void)t.forward(f); });
        row.naive_seconds = time_call([&] { (void)naive_forward(basis, f); });
        rows.push_back(row);
    }
    return rows;
}

std::string field_csv(const SampledField &u, const SampledField *v) {
    if (v && (v->edge_count() != u.edge_count() || v->samples_per_edge() != u.samples_per_edge()))
        throw Error(ErrorCode::dimension, "velocity field shape differs from displacement");
    std::string out = v ? "edge,n,x,re,im,vre,vim\n" : "edge,n,x,re,im\n";
    const std::size_t n = u.samples_per_edge();
    for (std::size_t e = 0; e < u.edge_count(); ++e) {
        for (std::size_t s = 0; s <= n; ++s) {
            const Complex z = u.at(e, s);
            out += std::to_string(e) + ',' + std::to_string(s) + ',' +
                   g17(static_cast<double>(s) / static_cast<double>(n)) + ',' + g17(z.real()) + ',' + g17(z.imag());
            if (v) {
                const Complex w = v->at(e, s);
                out += ',' + g17(w.real()) + ',' + g17(w.imag());
            }
            out += '\n';
        }
    }
    return out;
}

void write_field_csv(const std::string &path, const SampledField &u, const SampledField *v) {
    write_text(path, field_csv(u, v));
}

std::string path_csv(const EdgePath &path, const SampledField &u) {
    std::string out = "s,edge,n,re,im\n";
    const std::size_t n = u.samples_per_edge();
    for (std::size_t i = 0; i < path.size(); ++i) {
        const auto &seg = path[i];
        if (seg.edge >= u.edge_count()) throw Error(ErrorCode::dimension, "path edge outside the field");
        // Shared vertices appear once: every segment after the first skips its start sample.
        for (std::size_t j = i == 0 ? 0 : 1; j <= n; ++j) {
            const std::size_t s = seg.reversed ? n - j : j;
            const Complex z = u.at(seg.edge, s);
            const double arc = static_cast<double>(i) + static_cast<double>(j) / static_cast<double>(n);
            out += g17(arc) + ',' + std::to_string(seg.edge) + ',' + std::to_string(s) + ',' + g17(z.real()) + ',' +
                   g17(z.imag()) + '\n';
        }
    }
    return out;
}

std::string coefficients_text(const SpectralCoefficients &c) {
    std::string out;
    for (std::size_t k = 0; k < c.rows(); ++k)
        for (std::size_t m = 0; m < c.row_length(); ++m) {
            const Complex z = c.at(k, m);
            out += std::to_string(k) + ' ' + std::to_string(m) + ' ' + g17(z.real()) + ' ' + g17(z.imag()) + '\n';
        }
    return out;
}

std::vector<std::string> write_snapshots(const Scenario &s, const Problem &p, const std::vector<Snapshot> &snaps,
                                         const std::string &prefix) {
    std::vector<std::string> written;
    const auto parent = std::filesystem::path(prefix).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    EdgePath walk;
    if (!s.path.empty()) walk = path_trace_metric(p.graph, s.path);
    for (const auto &snap : snaps) {
        const std::string name = prefix + "_t" + time_tag(snap.time) + ".csv";
        write_field_csv(name, snap.u, snap.v ? &*snap.v : nullptr);
        written.push_back(name);
        if (!walk.empty()) {
            const std::string pname = prefix + "_path_t" + time_tag(snap.time) + ".csv";
            write_text(pname, path_csv(walk, snap.u));
            written.push_back(pname);
        }
    }
    return written;
}

}  // namespace qg
