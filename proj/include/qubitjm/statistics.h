// Copyright 2026 The qubitjm Authors
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

#ifndef QUBITJM_STATISTICS_H
#define QUBITJM_STATISTICS_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qubitjm/bloch.h"

namespace qubitjm {

/// Rounds per independently seeded stream. Results depend on (seed, N) only,
/// never on how many workers share the chunks.
inline constexpr uint64_t MC_CHUNK_ROUNDS = 1 << 16;

/// Engine for chunk `chunk` of a run seeded with `seed`.
Rng chunk_rng(uint64_t seed, uint64_t chunk);

/// Runs `rounds` Monte Carlo rounds split into MC_CHUNK_ROUNDS-sized chunks over `workers` threads.
/// `round(rng)` returns a bin index in [0, n_bins); counts are summed across chunks.
std::vector<uint64_t> run_counts(uint64_t rounds, uint64_t seed, unsigned workers, size_t n_bins,
                                 const std::function<size_t(Rng &)> &round);

/// (count/N - p) / sqrt(p (1 - p) / N); 0 when the cell is deterministic and matches, +-inf otherwise.
double binomial_z(uint64_t count, uint64_t n, double p);

struct ChiSquare {
    double statistic = 0;
    int dof = 0;
    /// P(X >= statistic) under the chi-square law with `dof` degrees of freedom.
    double p_value = 1;
};

/// Pearson chi-square of observed counts against expected probabilities.
/// Cells with expected probability below 1e-15 contribute +inf if observed, nothing otherwise.
ChiSquare chi_square(std::span<const uint64_t> counts, std::span<const double> probabilities);

/// Upper quantile of the chi-square law (e.g. q = 0.999).
double chi_square_quantile(int dof, double q);

}  // namespace qubitjm

#endif
