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

#ifndef QUBITJM_JOINT_MEASUREMENT_H
#define QUBITJM_JOINT_MEASUREMENT_H

#include <array>
#include <cstdint>
#include <vector>

#include "qubitjm/bloch.h"
#include "qubitjm/frame_search.h"
#include "qubitjm/povm.h"

namespace qubitjm {

/// Visibility simulated by the parent measurement.
inline constexpr double PARENT_VISIBILITY = 0.5;

/// The parent measurement G_lambda = (1 + lambda.sigma)/(4 pi) coarse-grained over one octant of a frame.
struct OctantOperator {
    std::array<int, 3> signs;
    PauliOperator op;
};

/// G_s = 1/8 + (R s).sigma / 16 for each octant s, in the octant order of frame_search.h.
std::array<OctantOperator, NUM_OCTANTS> octant_operators(const Rotation &frame);
inline std::array<OctantOperator, NUM_OCTANTS> octant_operators(const FrameCertificate &cert) {
    return octant_operators(cert.rotation);
}

/// alpha_i = (p_i / 2)(1 - (1/4) sum_s Theta(a_i . v_s))
std::vector<double> compute_alphas(const QubitPovm &povm, const Rotation &frame);

/// Conditional probabilities p(i | octant) for simulating {A^{1/2}_i} from the parent measurement.
struct CondProbTable {
    QubitPovm povm;
    FrameCertificate frame;
    std::vector<double> alphas;
    /// rows[s][i] = p(i | octant s); each row sums to 1.
    std::array<std::vector<double>, NUM_OCTANTS> rows;
    /// Largest |row sum - 1| before clamping/renormalization.
    double renormalization_residual = 0;

    size_t num_outcomes() const {
        return povm.size();
    }
};

/// p(i|s) = p_i Theta(a_i . v_s) + (1 - f(v_s)) alpha_i / sum alpha.
/// The noise term is dropped when sum alpha < 1e-12 (then f = 1 at every vertex).
/// Throws InvalidFrame when the frame has some f(v_s) > 1 + EPS_FRAME for this POVM.
CondProbTable build_table(const QubitPovm &povm, const FrameCertificate &frame);
/// find_frame + build_table.
CondProbTable build_table(const QubitPovm &povm);

struct DecompositionReport {
    /// max over i of |sum_s p(i|s) G_s - A^{1/2}_i| in (t, w) coordinates.
    double max_residual = 0;
    /// sum_s p_i Theta(a_i.v_s) G_s against A^{1/2}_i - alpha_i 1.
    double signal_term_residual = 0;
    /// noise part of the table against alpha_i 1.
    double noise_term_residual = 0;
    std::vector<double> per_outcome_residual;

    bool pass(double tol = 1e-10) const {
        return max_residual <= tol && signal_term_residual <= tol && noise_term_residual <= tol;
    }
};

DecompositionReport verify_decomposition(const CondProbTable &table);

/// Uniform unit vector (z uniform in [-1, 1], azimuth uniform in [0, 2 pi)).
Vec3 sample_lambda(Rng &rng);

/// Octant of lambda in the table's frame (sgn(0) = +1).
int octant_in_frame(const Rotation &frame, const Vec3 &lambda);

/// Draws an outcome index from the row of lambda's octant.
size_t simulate_outcome(const CondProbTable &table, const Vec3 &lambda, Rng &rng);

/// Outcome of one parent-measurement round on the state with Bloch vector `state`:
/// a Haar direction u, then lambda = +u with probability (1 + u.x)/2 and -u otherwise.
Vec3 sample_parent_outcome(const Vec3 &state, Rng &rng);

struct SimulationReport {
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::vector<uint64_t> counts;
    /// Empty when samples == 0.
    std::vector<double> empirical;
    /// tr[A^{1/2}_i rho]
    std::vector<double> born;
    /// Empty when samples == 0.
    std::vector<double> z;
    double chi2 = 0;
    int chi2_dof = 0;
    double p_value = 1;

    double max_abs_z() const;
};

/// N rounds of the parent measurement + post-processing on rho(state).
/// Throws InvalidState for |state| > 1.
SimulationReport simulate_statistics(const CondProbTable &table, const Vec3 &state, uint64_t n, uint64_t seed,
                                     unsigned workers = 1);
SimulationReport simulate_statistics(const QubitPovm &povm, const Vec3 &state, uint64_t n, uint64_t seed,
                                     unsigned workers = 1);

}  // namespace qubitjm

#endif
