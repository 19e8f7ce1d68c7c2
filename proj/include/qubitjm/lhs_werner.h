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

#ifndef QUBITJM_LHS_WERNER_H
#define QUBITJM_LHS_WERNER_H

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qubitjm/bloch.h"
#include "qubitjm/joint_measurement.h"
#include "qubitjm/povm.h"

namespace qubitjm {

/// rho = eta |Psi-><Psi-| + (1 - eta) 1/4 with |Psi-> = (|01> - |10>)/sqrt(2),
/// computational basis = sigma_z eigenbasis, qubit order Alice (x) Bob.
struct WernerState {
    Visibility eta;

    Eigen::Matrix4cd dense() const;
};

/// Alice-outcome x Bob-outcome probability table.
struct JointDistribution {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<double> p;

    JointDistribution() = default;
    JointDistribution(size_t rows, size_t cols) : rows(rows), cols(cols), p(rows * cols, 0) {
    }
    double &operator()(size_t i, size_t j) {
        return p[i * cols + j];
    }
    double operator()(size_t i, size_t j) const {
        return p[i * cols + j];
    }
    double total() const;
    std::vector<double> alice_marginal() const;
    std::vector<double> bob_marginal() const;
    /// Largest entrywise |this - other|; shapes must match.
    double max_abs_diff(const JointDistribution &other) const;
};

/// Kronecker product A (x) B of qubit operators.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b);

/// tr[(A_i (x) B_j) rho_W^eta] by the dense 4x4 trace.
JointDistribution werner_joint_dense(const QubitPovm &alice, const QubitPovm &bob, Visibility eta);

/// Returns (p_i q_j / 4)(1 - eta a_i.b_j), after checking it against werner_joint_dense.
/// Throws DisagreementError if the two routes differ by more than 1e-10.
JointDistribution werner_joint_quantum(const QubitPovm &alice, const QubitPovm &bob, Visibility eta);

/// Alice's post-processing table for the local hidden state model (directions flipped).
CondProbTable lhs_alice_table(const QubitPovm &alice);

/// sum_s p(i|s) G_s / 2: Bob's unnormalized state given Alice's outcome i.
PauliOperator bob_conditional_state(const CondProbTable &alice_flipped, size_t i);

/// Exact joint distribution of the local hidden state model, from octant integrals.
/// Propagates FrameNotFound.
JointDistribution lhs_joint_exact(const QubitPovm &alice, const QubitPovm &bob);
JointDistribution lhs_joint_exact(const CondProbTable &alice_flipped, const QubitPovm &bob);

/// One round of the local hidden state model: lambda Haar-uniform, Alice post-processes
/// with the flipped table, Bob outputs j with probability q_j (1 + b_j . lambda)/2.
class LhsSampler {
   public:
    LhsSampler(const QubitPovm &alice, const QubitPovm &bob);

    std::pair<size_t, size_t> operator()(Rng &rng) const;

    const CondProbTable &alice_table() const {
        return alice_;
    }
    const QubitPovm &bob() const {
        return bob_;
    }

   private:
    CondProbTable alice_;
    QubitPovm bob_;
};

inline std::pair<size_t, size_t> lhs_sample(const LhsSampler &sampler, Rng &rng) {
    return sampler(rng);
}

struct LhsSampleReport {
    uint64_t samples = 0;
    uint64_t seed = 0;
    /// Row-major n_A x n_B counts.
    std::vector<uint64_t> counts;
    JointDistribution empirical;
    JointDistribution exact;
    double chi2 = 0;
    int chi2_dof = 0;
    double p_value = 1;
};

/// N rounds of LhsSampler, compared against lhs_joint_exact.
LhsSampleReport lhs_sample_statistics(const QubitPovm &alice, const QubitPovm &bob, uint64_t n, uint64_t seed,
                                      unsigned workers = 1);

/// |E(a,b) + E(a,b') + E(a',b) - E(a',b')| for projective measurements on rho_W^eta,
/// with E(u,v) = -eta u.v cross-checked against the Werner joint distribution.
/// Throws DisagreementError if the routes differ by more than 1e-12.
double chsh_value(const Vec3 &a, const Vec3 &a2, const Vec3 &b, const Vec3 &b2, Visibility eta);

struct ChshSettings {
    Vec3 a;
    Vec3 a2;
    Vec3 b;
    Vec3 b2;
};

/// a = z, a' = x, b = -(z + x)/sqrt(2), b' = (x - z)/sqrt(2): reaches 2 sqrt(2) eta.
ChshSettings optimal_chsh_settings();

}  // namespace qubitjm

#endif
