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

#include <cstdint>
#include <string>
#include <vector>

#include "qgfft/graph.hpp"
#include "qgfft/scenario.hpp"
#include "qgfft/spectral_basis.hpp"
#include "qgfft/transform.hpp"

namespace qg {

struct InputCheck {
    std::string name;
    double field_norm = 0.0;
    double coefficient_norm = 0.0;
    double parseval_error = 0.0;   // | |f|^2 - sum |beta|^2 | / |f|^2
    double roundtrip_error = 0.0;  // max |f - inverse(forward(f))|
};

struct ValidationReport {
    std::size_t samples = 0;
    std::size_t rows = 0;
    bool oddcase = false;
    double gram_diagonal = 0.0;
    double gram_off_diagonal = 0.0;
    std::vector<InputCheck> inputs;

    double worst() const;
};

/// The four standard test fields: value 1 at the midpoint sample of edge 0
/// (A), the constant 1 (B), 1 - cos 2 pi x on edge 0 and zero elsewhere (C),
/// and the Nyquist cosine, (-1)^n on every edge (D).
std::vector<std::pair<std::string, SampledField>> standard_inputs(std::size_t edges, std::size_t samples);

/// Gram deviations are swept over every shift at `gram_samples`; Parseval and
/// round trip use `samples`. When `matrix_dir` is non-empty the Gram matrix
/// for each shift is written there.
ValidationReport validate(const FundamentalBasis &basis, std::size_t samples,
                          std::size_t gram_samples = 16, const std::string &matrix_dir = {});

struct BenchRow {
    std::size_t samples = 0;
    double fast_seconds = 0.0;
    double naive_seconds = 0.0;
    double max_difference = 0.0;
};

/// Times forward against naive_forward on seeded random fields and throws
/// Error(mismatch) when they disagree by more than 1e-12. `inject` perturbs
/// one fast coefficient to exercise that path.
std::vector<BenchRow> bench(const FundamentalBasis &basis, const std::vector<std::size_t> &sizes,
                            std::uint64_t seed, bool inject = false);

SampledField random_field(std::size_t edges, std::size_t samples, std::uint64_t seed);

/// `edge,n,x,re,im` (plus `vre,vim` when v is given), 17 significant digits.
std::string field_csv(const SampledField &u, const SampledField *v = nullptr);
void write_field_csv(const std::string &path, const SampledField &u, const SampledField *v = nullptr);

/// Samples along a walk: `s,edge,n,re,im` where s is arc length from the start.
std::string path_csv(const EdgePath &path, const SampledField &u);

/// `k m re im` per coefficient.
std::string coefficients_text(const SpectralCoefficients &c);

/// Writes each snapshot to <prefix>_t<time>.csv and, when the scenario names a
/// path, <prefix>_path_t<time>.csv. Returns the files written.
std::vector<std::string> write_snapshots(const Scenario &s, const Problem &p, const std::vector<Snapshot> &snaps,
                                         const std::string &prefix);

}  // namespace qg
