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

#include "qubitjm/joint_measurement.h"

#include <algorithm>
#include <cmath>

#include "qubitjm/errors.h"
#include "qubitjm/statistics.h"

namespace qubitjm {

std::array<OctantOperator, NUM_OCTANTS> octant_operators(const Rotation &frame) {
    std::array<OctantOperator, NUM_OCTANTS> result;
    CubeVertices cube(frame);
    for (int k = 0; k < NUM_OCTANTS; k++) {
        result[k] = {octant_signs(k), PauliOperator{1.0 / 8, cube.v[k] / 16}};
    }
    return result;
}

std::vector<double> compute_alphas(const QubitPovm &povm, const Rotation &frame) {
    CubeVertices cube(frame);
    std::vector<double> alphas;
    alphas.reserve(povm.size());
    for (const Outcome &o : povm.outcomes) {
        double s = 0;
        for (const Vec3 &v : cube.v) {
            s += theta(o.direction.dot(v));
        }
        alphas.push_back(o.weight / 2 * (1 - s / 4));
    }
    return alphas;
}

CondProbTable build_table(const QubitPovm &povm, const FrameCertificate &frame) {
    CondProbTable table;
    table.povm = povm;
    // Recomputed rather than trusted: the certificate may come from elsewhere.
    table.frame = make_certificate(povm, frame.rotation, frame.method);
    if (table.frame.max_value > 1 + EPS_FRAME) {
        throw InvalidFrame("frame has max f(v) = " + std::to_string(table.frame.max_value) + " > 1");
    }
    table.alphas = compute_alphas(povm, frame.rotation);
    double alpha_sum = 0;
    for (double a : table.alphas) {
        alpha_sum += a;
    }

    CubeVertices cube(frame.rotation);
    const size_t n = povm.size();
    for (int s = 0; s < NUM_OCTANTS; s++) {
        auto &row = table.rows[s];
        row.assign(n, 0);
        double slack = 1 - table.frame.vertex_values[s];
        double sum = 0;
        for (size_t i = 0; i < n; i++) {
            double p = povm[i].weight * theta(povm[i].direction.dot(cube.v[s]));
            if (alpha_sum >= 1e-12) {
                p += slack * table.alphas[i] / alpha_sum;
            }
            row[i] = p;
            sum += p;
        }
        table.renormalization_residual = std::max(table.renormalization_residual, std::abs(sum - 1));
        bool clamped = false;
        for (double &p : row) {
            if (p < 0 || p > 1) {
                p = std::clamp(p, 0.0, 1.0);
                clamped = true;
            }
        }
        if (clamped) {
            double total = 0;
            for (double p : row) {
                total += p;
            }
            for (double &p : row) {
                p /= total;
            }
        }
    }
    return table;
}

CondProbTable build_table(const QubitPovm &povm) {
    return build_table(povm, find_frame(povm));
}

DecompositionReport verify_decomposition(const CondProbTable &table) {
    DecompositionReport report;
    const QubitPovm &povm = table.povm;
    auto g = octant_operators(table.frame.rotation);
    CubeVertices cube(table.frame.rotation);
    double alpha_sum = 0;
    for (double a : table.alphas) {
        alpha_sum += a;
    }

    for (size_t i = 0; i < povm.size(); i++) {
        PauliOperator target = noisy_element(povm, i, Visibility(PARENT_VISIBILITY));
        PauliOperator mixture;
        PauliOperator signal;
        PauliOperator noise;
        for (int s = 0; s < NUM_OCTANTS; s++) {
            mixture += g[s].op * table.rows[s][i];
            double signal_coeff = povm[i].weight * theta(povm[i].direction.dot(cube.v[s]));
            signal += g[s].op * signal_coeff;
            if (alpha_sum >= 1e-12) {
                noise += g[s].op * ((1 - table.frame.vertex_values[s]) * table.alphas[i] / alpha_sum);
            }
        }
        PauliOperator alpha_identity = PauliOperator::identity(table.alphas[i]);
        double r = mixture.max_abs_diff(target);
        report.per_outcome_residual.push_back(r);
        report.max_residual = std::max(report.max_residual, r);
        report.signal_term_residual =
            std::max(report.signal_term_residual, signal.max_abs_diff(target - alpha_identity));
        report.noise_term_residual = std::max(report.noise_term_residual, noise.max_abs_diff(alpha_identity));
    }
    return report;
}

Vec3 sample_lambda(Rng &rng) {
    return haar_direction(rng);
}

int octant_in_frame(const Rotation &frame, const Vec3 &lambda) {
    return octant_of(frame.apply_transpose(lambda));
}

size_t simulate_outcome(const CondProbTable &table, const Vec3 &lambda, Rng &rng) {
    const auto &row = table.rows[octant_in_frame(table.frame.rotation, lambda)];
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0;
    size_t last_live = 0;
    for (size_t i = 0; i < row.size(); i++) {
        if (row[i] <= 0) {
            continue;
        }
        last_live = i;
        acc += row[i];
        if (u < acc) {
            return i;
        }
    }
    return last_live;
}

Vec3 sample_parent_outcome(const Vec3 &state, Rng &rng) {
    Vec3 u = haar_direction(rng);
    double accept = (1 + u.dot(state)) / 2;
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < accept ? u : -u;
}

double SimulationReport::max_abs_z() const {
    double m = 0;
    for (double v : z) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SimulationReport simulate_statistics(const CondProbTable &table, const Vec3 &state, uint64_t n, uint64_t seed,
                                     unsigned workers) {
    const size_t n_out = table.num_outcomes();
    SimulationReport report;
    report.samples = n;
    report.seed = seed;
    for (size_t i = 0; i < n_out; i++) {
        report.born.push_back(born(noisy_element(table.povm, i, Visibility(PARENT_VISIBILITY)), state));
    }
    report.counts = run_counts(n, seed, workers, n_out, [&](Rng &rng) {
        return simulate_outcome(table, sample_parent_outcome(state, rng), rng);
    });
    if (n > 0) {
        for (size_t i = 0; i < n_out; i++) {
            report.empirical.push_back(static_cast<double>(report.counts[i]) / static_cast<double>(n));
            report.z.push_back(binomial_z(report.counts[i], n, report.born[i]));
        }
        ChiSquare chi = chi_square(report.counts, report.born);
        report.chi2 = chi.statistic;
        report.chi2_dof = chi.dof;
        report.p_value = chi.p_value;
    }
    return report;
}

SimulationReport simulate_statistics(const QubitPovm &povm, const Vec3 &state, uint64_t n, uint64_t seed,
                                     unsigned workers) {
    if (!state.is_finite() || state.norm() > 1 + EPS_POVM) {
        throw InvalidState("Bloch vector has norm " + std::to_string(state.norm()) + " > 1");
    }
    return simulate_statistics(build_table(povm), state, n, seed, workers);
}

}  // namespace qubitjm
