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

#include "qubitjm/statistics.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

namespace qubitjm {

Rng chunk_rng(uint64_t seed, uint64_t chunk) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(chunk),
        static_cast<uint32_t>(chunk >> 32),
    };
    return Rng(seq);
}

std::vector<uint64_t> run_counts(uint64_t rounds, uint64_t seed, unsigned workers, size_t n_bins,
                                 const std::function<size_t(Rng &)> &round) {
    const uint64_t n_chunks = (rounds + MC_CHUNK_ROUNDS - 1) / MC_CHUNK_ROUNDS;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<uint64_t>(1, n_chunks))));
    std::vector<std::vector<uint64_t>> partial(workers, std::vector<uint64_t>(n_bins, 0));
    std::atomic<uint64_t> next{0};

    auto work = [&](unsigned w) {
        auto &counts = partial[w];
        for (uint64_t c = next++; c < n_chunks; c = next++) {
            Rng rng = chunk_rng(seed, c);
            uint64_t len = std::min(MC_CHUNK_ROUNDS, rounds - c * MC_CHUNK_ROUNDS);
            for (uint64_t r = 0; r < len; r++) {
                counts[round(rng)]++;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; w++) {
            threads.emplace_back(work, w);
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    std::vector<uint64_t> total(n_bins, 0);
    for (const auto &counts : partial) {
        for (size_t b = 0; b < n_bins; b++) {
            total[b] += counts[b];
        }
    }
    return total;
}

double binomial_z(uint64_t count, uint64_t n, double p) {
    if (n == 0) {
        return 0;
    }
    double freq = static_cast<double>(count) / static_cast<double>(n);
    double var = p * (1 - p) / static_cast<double>(n);
    if (var <= 0) {
        if (std::abs(freq - p) < 1e-15) {
            return 0;
        }
        return freq > p ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    }
    return (freq - p) / std::sqrt(var);
}

ChiSquare chi_square(std::span<const uint64_t> counts, std::span<const double> probabilities) {
    ChiSquare r;
    uint64_t n = 0;
    for (uint64_t c : counts) {
        n += c;
    }
    int live = 0;
    for (size_t k = 0; k < counts.size(); k++) {
        double p = probabilities[k];
        if (p < 1e-15) {
            if (counts[k] > 0) {
                r.statistic = std::numeric_limits<double>::infinity();
            }
            continue;
        }
        live++;
        double expected = p * static_cast<double>(n);
        double d = static_cast<double>(counts[k]) - expected;
        r.statistic += d * d / expected;
    }
    r.dof = std::max(0, live - 1);
    if (n == 0 || r.dof == 0) {
        r.p_value = std::isinf(r.statistic) ? 0 : 1;
        return r;
    }
    if (std::isinf(r.statistic)) {
        r.p_value = 0;
        return r;
    }
    boost::math::chi_squared dist(r.dof);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

double chi_square_quantile(int dof, double q) {
    boost::math::chi_squared dist(dof);
    return boost::math::quantile(dist, q);
}

}  // namespace qubitjm
