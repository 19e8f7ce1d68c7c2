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

#include "qubitjm/lhs_werner.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qubitjm/errors.h"
#include "qubitjm/statistics.h"

namespace qubitjm {

Eigen::Matrix4cd WernerState::dense() const {
    Eigen::Vector4cd singlet = Eigen::Vector4cd::Zero();
    singlet(1) = 1 / std::sqrt(2.0);
    singlet(2) = -1 / std::sqrt(2.0);
    double v = eta.value();
    return v * (singlet * singlet.adjoint()) + (1 - v) / 4 * Eigen::Matrix4cd::Identity();
}

double JointDistribution::total() const {
    double s = 0;
    for (double x : p) {
        s += x;
    }
    return s;
}

std::vector<double> JointDistribution::alice_marginal() const {
    std::vector<double> m(rows, 0);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            m[i] += (*this)(i, j);
        }
    }
    return m;
}

std::vector<double> JointDistribution::bob_marginal() const {
    std::vector<double> m(cols, 0);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            m[j] += (*this)(i, j);
        }
    }
    return m;
}

double JointDistribution::max_abs_diff(const JointDistribution &other) const {
    if (rows != other.rows || cols != other.cols) {
        throw std::invalid_argument("joint distributions have different shapes");
    }
    double m = 0;
    for (size_t k = 0; k < p.size(); k++) {
        m = std::max(m, std::abs(p[k] - other.p[k]));
    }
    return m;
}

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    Eigen::Matrix4cd r;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return r;
}

JointDistribution werner_joint_dense(const QubitPovm &alice, const QubitPovm &bob, Visibility eta) {
    Eigen::Matrix4cd rho = WernerState{eta}.dense();
    JointDistribution d(alice.size(), bob.size());
    for (size_t i = 0; i < alice.size(); i++) {
        Eigen::Matrix2cd a = to_dense(alice.element(i));
        for (size_t j = 0; j < bob.size(); j++) {
            d(i, j) = (kron(a, to_dense(bob.element(j))) * rho).trace().real();
        }
    }
    return d;
}

JointDistribution werner_joint_quantum(const QubitPovm &alice, const QubitPovm &bob, Visibility eta) {
    JointDistribution closed(alice.size(), bob.size());
    for (size_t i = 0; i < alice.size(); i++) {
        for (size_t j = 0; j < bob.size(); j++) {
            closed(i, j) = alice[i].weight * bob[j].weight / 4 *
                           (1 - eta.value() * alice[i].direction.dot(bob[j].direction));
        }
    }
    double gap = closed.max_abs_diff(werner_joint_dense(alice, bob, eta));
    if (gap > 1e-10) {
        throw DisagreementError("closed-form Werner statistics differ from the dense trace by " +
                                std::to_string(gap));
    }
    return closed;
}

CondProbTable lhs_alice_table(const QubitPovm &alice) {
    return build_table(alice.flipped());
}

PauliOperator bob_conditional_state(const CondProbTable &alice_flipped, size_t i) {
    if (i >= alice_flipped.num_outcomes()) {
        throw std::out_of_range("outcome index out of range");
    }
    auto g = octant_operators(alice_flipped.frame.rotation);
    PauliOperator state;
    for (int s = 0; s < NUM_OCTANTS; s++) {
        // Integral of rho_lambda over an octant is G_s / 2.
        state += g[s].op * (alice_flipped.rows[s][i] / 2);
    }
    return state;
}

JointDistribution lhs_joint_exact(const CondProbTable &alice_flipped, const QubitPovm &bob) {
    JointDistribution d(alice_flipped.num_outcomes(), bob.size());
    for (size_t i = 0; i < d.rows; i++) {
        PauliOperator rho_b = bob_conditional_state(alice_flipped, i);
        for (size_t j = 0; j < d.cols; j++) {
            d(i, j) = trace_product(bob.element(j), rho_b);
        }
    }
    return d;
}

JointDistribution lhs_joint_exact(const QubitPovm &alice, const QubitPovm &bob) {
    return lhs_joint_exact(lhs_alice_table(alice), bob);
}

LhsSampler::LhsSampler(const QubitPovm &alice, const QubitPovm &bob) : alice_(lhs_alice_table(alice)), bob_(bob) {
}

std::pair<size_t, size_t> LhsSampler::operator()(Rng &rng) const {
    Vec3 lambda = sample_lambda(rng);
    size_t i = simulate_outcome(alice_, lambda, rng);
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double acc = 0;
    size_t j = bob_.size() - 1;
    for (size_t k = 0; k < bob_.size(); k++) {
        acc += bob_[k].weight * (1 + bob_[k].direction.dot(lambda)) / 2;
        if (u < acc) {
            j = k;
            break;
        }
    }
    return {i, j};
}

LhsSampleReport lhs_sample_statistics(const QubitPovm &alice, const QubitPovm &bob, uint64_t n, uint64_t seed,
                                      unsigned workers) {
    LhsSampler sampler(alice, bob);
    LhsSampleReport report;
    report.samples = n;
    report.seed = seed;
    report.exact = lhs_joint_exact(sampler.alice_table(), bob);
    const size_t cols = bob.size();
    report.counts = run_counts(n, seed, workers, alice.size() * cols, [&](Rng &rng) {
        auto [i, j] = sampler(rng);
        return i * cols + j;
    });
    report.empirical = JointDistribution(alice.size(), cols);
    if (n > 0) {
        for (size_t k = 0; k < report.counts.size(); k++) {
            report.empirical.p[k] = static_cast<double>(report.counts[k]) / static_cast<double>(n);
        }
        ChiSquare chi = chi_square(report.counts, report.exact.p);
        report.chi2 = chi.statistic;
        report.chi2_dof = chi.dof;
        report.p_value = chi.p_value;
    }
    return report;
}

namespace {

double correlator_from_table(const Vec3 &u, const Vec3 &v, Visibility eta) {
    JointDistribution d = werner_joint_quantum(projective_povm(u), projective_povm(v), eta);
    // Outcome 0 is +1, outcome 1 is -1.
    return d(0, 0) - d(0, 1) - d(1, 0) + d(1, 1);
}

}  // namespace

double chsh_value(const Vec3 &a, const Vec3 &a2, const Vec3 &b, const Vec3 &b2, Visibility eta) {
    const double v = eta.value();
    double closed = -v * (a.dot(b) + a.dot(b2) + a2.dot(b) - a2.dot(b2));
    double tabled = correlator_from_table(a, b, eta) + correlator_from_table(a, b2, eta) +
                    correlator_from_table(a2, b, eta) - correlator_from_table(a2, b2, eta);
    if (std::abs(closed - tabled) > 1e-12) {
        throw DisagreementError("CHSH correlators disagree by " + std::to_string(std::abs(closed - tabled)));
    }
    return std::abs(closed);
}

ChshSettings optimal_chsh_settings() {
    const double r = 1 / std::sqrt(2.0);
    Vec3 x{1, 0, 0};
    Vec3 z{0, 0, 1};
    return {z, x, (z + x) * -r, (x - z) * r};
}

}  // namespace qubitjm
