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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "qubitjm/errors.h"

using namespace qubitjm;

namespace {

CondProbTable sic_table() {
    return build_table(sic_povm(), make_certificate(sic_povm(), Rotation(), FrameMethod::MinimaxSearch));
}

// Dense-matrix version of sum_s p(i|s) G_s, with G_s built from Pauli matrices and
// explicitly multiplied cube vertices.
Eigen::Matrix2cd dense_mixture(const CondProbTable &t, size_t i) {
    auto verts = oracle::cube(t.frame.rotation);
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
    for (int s = 0; s < NUM_OCTANTS; s++) {
        Vec3 v{verts[s](0), verts[s](1), verts[s](2)};
        acc += t.rows[s][i] * oracle::dense(1.0 / 8, v / 16);
    }
    return acc;
}

}  // namespace

TEST(joint_measurement, octant_operators_identity_frame) {
    auto g = octant_operators(Rotation());
    ASSERT_EQ(g[0].signs, (std::array<int, 3>{1, 1, 1}));
    ASSERT_DOUBLE_EQ(g[0].op.t, 1.0 / 8);
    ASSERT_EQ(g[0].op.w, Vec3(1.0 / 16, 1.0 / 16, 1.0 / 16));
    ASSERT_EQ(g[7].signs, (std::array<int, 3>{-1, -1, -1}));
    ASSERT_EQ(g[7].op.w, Vec3(-1.0 / 16, -1.0 / 16, -1.0 / 16));
}

TEST(joint_measurement, octant_operators_complete) {
    Rng rng(1);
    for (int k = 0; k < 200; k++) {
        auto g = octant_operators(Rotation::random(rng));
        PauliOperator total;
        for (int s = 0; s < NUM_OCTANTS; s++) {
            total += g[s].op;
            ASSERT_LE((g[s].op + g[7 - s].op).max_abs_diff(PauliOperator::identity(0.25)), 1e-14);
        }
        ASSERT_LE(total.max_abs_diff(PauliOperator::identity()), 1e-14);
    }
}

TEST(joint_measurement, octant_operators_match_quadrature) {
    Rotation r = Rotation::about_axis({0.2, -0.5, 1}, 1.3);
    auto g = octant_operators(r);
    for (int s = 0; s < NUM_OCTANTS; s++) {
        auto q = oracle::octant_quadrature(octant_signs(s), 400);
        Vec3 w = r.apply({q[1], q[2], q[3]});
        ASSERT_NEAR(g[s].op.t, q[0], 1e-6);
        ASSERT_NEAR(g[s].op.w.x, w.x, 1e-6);
        ASSERT_NEAR(g[s].op.w.y, w.y, 1e-6);
        ASSERT_NEAR(g[s].op.w.z, w.z, 1e-6);
    }
}

TEST(joint_measurement, sic_alphas) {
    auto a = compute_alphas(sic_povm(), Rotation());
    ASSERT_NEAR(a[0], 0, 1e-15);
    ASSERT_NEAR(a[1], 0.014, 5e-4);
    ASSERT_NEAR(a[2], 0.046, 5e-4);
    ASSERT_NEAR(a[3], 0.046, 5e-4);
}

TEST(joint_measurement, alpha_identity_and_sign) {
    Rng rng(2);
    for (int k = 0; k < 500; k++) {
        QubitPovm p = random_povm(2 + k % 7, rng);
        Rotation r = Rotation::random(rng);
        auto a = compute_alphas(p, r);
        double lhs = 0;
        for (double x : a) {
            ASSERT_GE(x, -1e-12);
            lhs += 8 * x;
        }
        double rhs = 0;
        for (const Vec3 &v : CubeVertices(r).v) {
            rhs += 1 - f_value(p, v);
        }
        ASSERT_NEAR(lhs, rhs, 1e-12);
    }
}

TEST(joint_measurement, projective_table_is_hemispheres) {
    Rng rng(3);
    for (int k = 0; k < 20; k++) {
        QubitPovm p = projective_povm(haar_direction(rng));
        CondProbTable t = build_table(p);
        CubeVertices cube(t.frame.rotation);
        for (int s = 0; s < NUM_OCTANTS; s++) {
            double expected = p[0].direction.dot(cube.v[s]) >= 0 ? 1 : 0;
            ASSERT_NEAR(t.rows[s][0], expected, 1e-12);
            ASSERT_NEAR(t.rows[s][1], 1 - expected, 1e-12);
        }
        ASSERT_LT(verify_decomposition(t).max_residual, 1e-14);
    }
}

TEST(joint_measurement, sic_table_matches_reference_values) {
    CondProbTable t = sic_table();
    const double expected[4][8] = {
        {0.5, 0, 0.5, 0, 0.5, 0, 0.5, 0},
        {0.330, 0.641, 0.330, 0.641, 0.003, 0.026, 0.003, 0.026},
        {0.088, 0.349, 0.082, 0.010, 0.487, 0.893, 0.010, 0.082},
        {0.082, 0.010, 0.088, 0.349, 0.010, 0.082, 0.487, 0.893},
    };
    for (int s = 0; s < NUM_OCTANTS; s++) {
        double row = 0;
        for (size_t i = 0; i < 4; i++) {
            ASSERT_NEAR(t.rows[s][i], expected[i][s], 5e-4) << "outcome " << i + 1 << " octant " << octant_label(s);
            row += t.rows[s][i];
        }
        ASSERT_NEAR(row, 1, 1e-12);
    }
}

TEST(joint_measurement, build_table_rejects_uncertified_frame) {
    // f(v_{+++}) = |v.a| = sqrt3 when a points along the cube diagonal.
    QubitPovm p = projective_povm({1, 1, 1});
    ASSERT_THROW(build_table(p, make_certificate(p, Rotation(), FrameMethod::MinimaxSearch)), InvalidFrame);
}

TEST(joint_measurement, decomposition_holds_for_fixtures) {
    ASSERT_TRUE(verify_decomposition(sic_table()).pass());
    ASSERT_TRUE(verify_decomposition(build_table(trine_povm())).pass());
    ASSERT_TRUE(verify_decomposition(build_table(projective_povm({0, 0, 1}))).pass());
}

TEST(joint_measurement, decomposition_holds_for_random_povms_and_matches_dense) {
    for (uint64_t seed = 0; seed < 100; seed++) {
        QubitPovm p = random_povm(2 + seed % 7, seed + 1000);
        CondProbTable t = build_table(p);
        for (const auto &row : t.rows) {
            double sum = 0;
            for (double x : row) {
                ASSERT_GE(x, 0);
                ASSERT_LE(x, 1);
                sum += x;
            }
            ASSERT_NEAR(sum, 1, 1e-12);
        }
        DecompositionReport rep = verify_decomposition(t);
        ASSERT_TRUE(rep.pass()) << rep.max_residual << " " << rep.signal_term_residual << " "
                                << rep.noise_term_residual;
        for (size_t i = 0; i < p.size(); i++) {
            Eigen::Matrix2cd target = oracle::dense(p[i].weight / 2, p[i].direction * (p[i].weight / 4));
            ASSERT_LE((dense_mixture(t, i) - target).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(joint_measurement, sample_lambda_moments) {
    Rng rng(4);
    const int n = 1000000;
    Vec3 mean;
    Vec3 second;
    for (int k = 0; k < n; k++) {
        Vec3 l = sample_lambda(rng);
        ASSERT_NEAR(l.norm(), 1, 1e-12);
        mean += l;
        second += Vec3(l.x * l.x, l.y * l.y, l.z * l.z);
    }
    mean = mean / n;
    second = second / n;
    ASSERT_LT(mean.norm(), 0.004);
    ASSERT_NEAR(second.x, 1.0 / 3, 0.002);
    ASSERT_NEAR(second.y, 1.0 / 3, 0.002);
    ASSERT_NEAR(second.z, 1.0 / 3, 0.002);
}

TEST(joint_measurement, sample_lambda_reproducible) {
    Rng a(5), b(5);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(sample_lambda(a), sample_lambda(b));
    }
}

TEST(joint_measurement, simulate_outcome_projective_is_deterministic) {
    CondProbTable t = build_table(projective_povm({0, 0, 1}));
    Rng rng(6);
    for (int k = 0; k < 1000; k++) {
        ASSERT_EQ(simulate_outcome(t, {0, 0, 1}, rng), 0u);
        ASSERT_EQ(simulate_outcome(t, {0, 0, -1}, rng), 1u);
    }
}

TEST(joint_measurement, simulate_outcome_follows_sic_row) {
    CondProbTable t = sic_table();
    Rng rng(7);
    const int n = 200000;
    std::vector<int> counts(4, 0);
    Vec3 lambda = Vec3(-1, 1, 1).normalized();
    for (int k = 0; k < n; k++) {
        counts[simulate_outcome(t, lambda, rng)]++;
    }
    for (size_t i = 0; i < 4; i++) {
        double q = t.rows[4][i];
        double sigma = std::sqrt(q * (1 - q) / n);
        ASSERT_NEAR(counts[i] / double(n), q, 4 * sigma + 1e-12);
    }
    ASSERT_NEAR(t.rows[4][0], 0.5, 5e-4);
    ASSERT_NEAR(t.rows[4][2], 0.487, 5e-4);
}

TEST(joint_measurement, simulate_outcome_marginal_over_haar_lambda) {
    QubitPovm p = random_povm(5, 77);
    CondProbTable t = build_table(p);
    Rng rng(8);
    const int n = 1000000;
    std::vector<int> counts(p.size(), 0);
    for (int k = 0; k < n; k++) {
        counts[simulate_outcome(t, sample_lambda(rng), rng)]++;
    }
    for (size_t i = 0; i < p.size(); i++) {
        double q = p[i].weight / 2;
        ASSERT_NEAR(counts[i] / double(n), q, 4 * std::sqrt(q * (1 - q) / n));
    }
}

TEST(joint_measurement, simulate_statistics_targets) {
    SimulationReport mixed = simulate_statistics(random_povm(6, 5), {0, 0, 0}, 1000000, 9);
    ASSERT_LE(mixed.max_abs_z(), 4);

    SimulationReport up = simulate_statistics(projective_povm({0, 0, 1}), {0, 0, 1}, 1000000, 10);
    ASSERT_DOUBLE_EQ(up.born[0], 0.75);
    ASSERT_LE(std::abs(up.z[0]), 4);

    SimulationReport sic = simulate_statistics(sic_povm(), {0, 0, 1}, 1000000, 11);
    ASSERT_DOUBLE_EQ(sic.born[0], 0.375);
    ASSERT_LE(sic.max_abs_z(), 4);
    ASSERT_GE(sic.p_value, 1e-3);
}

TEST(joint_measurement, simulate_statistics_is_seeded_and_worker_invariant) {
    QubitPovm p = random_povm(4, 3);
    SimulationReport a = simulate_statistics(p, {0.3, 0.1, -0.5}, 300000, 42, 1);
    SimulationReport b = simulate_statistics(p, {0.3, 0.1, -0.5}, 300000, 42, 4);
    SimulationReport c = simulate_statistics(p, {0.3, 0.1, -0.5}, 300000, 43, 1);
    ASSERT_EQ(a.counts, b.counts);
    ASSERT_NE(a.counts, c.counts);
}

TEST(joint_measurement, simulate_statistics_zero_samples) {
    SimulationReport r = simulate_statistics(sic_povm(), {0, 0, 1}, 0, 1);
    ASSERT_TRUE(r.empirical.empty());
    ASSERT_TRUE(r.z.empty());
    ASSERT_EQ(r.born.size(), 4u);
    ASSERT_EQ(r.max_abs_z(), 0);
    ASSERT_THROW(simulate_statistics(sic_povm(), {0, 0, 2}, 10, 1), InvalidState);
}
