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

// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "oracles.h"
#include "qubitjm/errors.h"
#include "qubitjm/frame_search.h"
#include "qubitjm/joint_measurement.h"
#include "qubitjm/lhs_werner.h"
#include "qubitjm/povm.h"
#include "qubitjm/statistics.h"

using namespace qubitjm;

namespace {

struct Outcome_ {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            detail = what;
        }
        pass = pass && ok;
    }
};

int failures = 0;

void criterion(int id, const char *name, double time_limit_s, const std::function<void(Outcome_ &)> &body) {
    Outcome_ out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception &e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0) {
        out.require(secs < time_limit_s, "over time budget");
    }
    if (!out.pass) {
        failures++;
    }
    std::printf("%s  %2d  %-44s %8.3f s%s%s\n", out.pass ? "PASS" : "FAIL", id, name, secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *f, double x) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

unsigned workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main() {
    criterion(1, "SIC golden tables (+-0.001)", 1, [](Outcome_ &o) {
        QubitPovm sic = sic_povm();
        FrameCertificate cert = make_certificate(sic, Rotation(), FrameMethod::MinimaxSearch);
        const double f[8] = {0.811, 0.977, 0.811, 0.977, 0.977, 0.811, 0.977, 0.811};
        double sum = 0;
        for (int s = 0; s < NUM_OCTANTS; s++) {
            o.require(std::abs(cert.vertex_values[s] - f[s]) <= 1e-3, "f at " + octant_label(s));
            sum += cert.vertex_values[s];
        }
        o.require(std::abs(sum - 7.152) <= 1e-3, "vertex sum " + fmt("%.6f", sum));
        CondProbTable t = build_table(sic, cert);
        const double alpha[4] = {0, 0.014, 0.046, 0.046};
        for (int i = 0; i < 4; i++) {
            o.require(std::abs(t.alphas[i] - alpha[i]) <= 1e-3, "alpha " + std::to_string(i + 1));
        }
        const double table[4][8] = {
            {0.5, 0, 0.5, 0, 0.5, 0, 0.5, 0},
            {0.330, 0.641, 0.330, 0.641, 0.003, 0.026, 0.003, 0.026},
            {0.088, 0.349, 0.082, 0.010, 0.487, 0.893, 0.010, 0.082},
            {0.082, 0.010, 0.088, 0.349, 0.010, 0.082, 0.487, 0.893},
        };
        for (int s = 0; s < NUM_OCTANTS; s++) {
            for (int i = 0; i < 4; i++) {
                o.require(std::abs(t.rows[s][i] - table[i][s]) <= 1e-3,
                          "p(" + std::to_string(i + 1) + "|" + octant_label(s) + ")");
            }
        }
    });

    criterion(2, "decomposition identity (<= 1e-10)", 30, [](Outcome_ &o) {
        double worst = 0;
        auto check = [&](const QubitPovm &p, const std::string &what) {
            DecompositionReport r = verify_decomposition(build_table(p));
            worst = std::max({worst, r.max_residual, r.signal_term_residual, r.noise_term_residual});
            o.require(r.pass(1e-10), what);
        };
        check(projective_povm({0, 0, 1}), "projective");
        check(trine_povm(), "trine");
        check(sic_povm(), "sic");
        for (uint64_t seed = 0; seed < 1000; seed++) {
            check(random_povm(2 + seed % 7, seed), "random seed " + std::to_string(seed));
        }
        if (o.pass) {
            o.detail = "max residual " + fmt("%.2e", worst);
        }
    });

    criterion(3, "octant integrals vs 400x400 quadrature", 5, [](Outcome_ &o) {
        auto g = octant_operators(Rotation());
        double worst = 0;
        PauliOperator total;
        for (int s = 0; s < NUM_OCTANTS; s++) {
            auto q = oracle::octant_quadrature(octant_signs(s), 400);
            worst = std::max({worst, std::abs(g[s].op.t - q[0]), std::abs(g[s].op.w.x - q[1]),
                              std::abs(g[s].op.w.y - q[2]), std::abs(g[s].op.w.z - q[3])});
            total += g[s].op;
        }
        o.require(worst <= 1e-6, "quadrature mismatch " + fmt("%.2e", worst));
        double closure = total.max_abs_diff(PauliOperator::identity());
        Rng rng(3);
        for (int k = 0; k < 1000; k++) {
            PauliOperator sum;
            for (const auto &op : octant_operators(Rotation::random(rng))) {
                sum += op.op;
            }
            closure = std::max(closure, sum.max_abs_diff(PauliOperator::identity()));
        }
        o.require(closure <= 1e-14, "sum_s G_s != 1: " + fmt("%.2e", closure));
        if (o.pass) {
            o.detail = "quadrature " + fmt("%.2e", worst) + ", closure " + fmt("%.2e", closure);
        }
    });

    criterion(4, "cube identities, f properties, vertex sums", 10, [](Outcome_ &o) {
        Rng rng(4);
        std::normal_distribution<double> gauss;
        for (int k = 0; k < 10000 && o.pass; k++) {
            Vec3 a{gauss(rng), gauss(rng), gauss(rng)};
            CubeIdentityReport r = cube_identity_checks(a, CubeVertices(Rotation::random(rng)), 1e-10);
            o.require(r.all(), "cube identity case " + std::to_string(k));
        }
        for (int k = 0; k < 10000 && o.pass; k++) {
            QubitPovm p = random_povm(2 + k % 7, rng);
            Vec3 x{gauss(rng), gauss(rng), gauss(rng)};
            double c = 3 * gauss(rng);
            double f = f_value(p, x);
            double brute = 0;
            for (const auto &out : p.outcomes) {
                brute += 0.5 * out.weight * std::abs(x.dot(out.direction));
            }
            o.require(std::abs(f - brute) <= 1e-12, "abs form");
            o.require(std::abs(f - f_value(p, -x)) <= 1e-12, "evenness");
            o.require(std::abs(f_value(p, x * c) - std::abs(c) * f) <= 1e-12, "homogeneity");
        }
        double worst = 0;
        for (int k = 0; k < 10000; k++) {
            QubitPovm p = random_povm(2 + k % 7, rng);
            worst = std::max(worst, vertex_sum(p, CubeVertices(Rotation::random(rng))));
        }
        o.require(worst <= 8 + 1e-10, "vertex sum " + fmt("%.12f", worst));
    });

    criterion(5, "frame search on 1000 random POVMs", 60, [](Outcome_ &o) {
        double worst = 0;
        for (uint64_t seed = 0; seed < 1000; seed++) {
            size_t n = 2 + seed % 7;
            QubitPovm p = random_povm(n, 100000 + seed);
            FrameCertificate c = find_frame(p);
            worst = std::max(worst, c.max_value);
            std::string tag = "seed " + std::to_string(seed);
            o.require(c.max_value <= 1 + 1e-9, tag + " max " + fmt("%.12f", c.max_value));
            o.require(make_certificate(p, c.rotation, c.method).max_value <= 1 + 1e-9, tag + " recheck");
            if (n == 2) {
                o.require(c.method == FrameMethod::TwoOutcomeExact, tag + " method");
            }
            if (n == 3) {
                o.require(c.method == FrameMethod::CoplanarBisection, tag + " method");
            }
        }
        if (o.pass) {
            o.detail = "worst max f " + fmt("%.12f", worst);
        }
    });

    criterion(6, "SIC bound over 1e6 random frames", 5, [](Outcome_ &o) {
        SicBoundReport r = sic_global_bound_check(sic_povm(), 1000000, 6);
        o.require(r.samples == 1000000, "sample count");
        o.require(r.violations == 0, std::to_string(r.violations) + " violations");
        o.require(r.max_value <= 1 + 1e-12, "max " + fmt("%.15f", r.max_value));
        if (o.pass) {
            o.detail = "max f " + fmt("%.12f", r.max_value);
        }
    });

    criterion(7, "Werner LHS exactness on 500 pairs", 60, [](Outcome_ &o) {
        double worst = 0;
        double worst_state = 0;
        for (uint64_t k = 0; k < 500; k++) {
            QubitPovm a = random_povm(2 + k % 7, 2 * k + 7000);
            QubitPovm b = random_povm(2 + (k / 7) % 7, 2 * k + 7001);
            CondProbTable t = lhs_alice_table(a);
            double d = lhs_joint_exact(t, b).max_abs_diff(werner_joint_quantum(a, b, Visibility(0.5)));
            worst = std::max(worst, d);
            o.require(d <= 1e-10, "pair " + std::to_string(k));
            for (size_t i = 0; i < a.size(); i++) {
                PauliOperator expected{a[i].weight / 4, a[i].direction * (-a[i].weight / 8)};
                worst_state = std::max(worst_state, bob_conditional_state(t, i).max_abs_diff(expected));
            }
        }
        o.require(worst_state <= 1e-12, "Bob state " + fmt("%.2e", worst_state));
        if (o.pass) {
            o.detail = "joint " + fmt("%.2e", worst) + ", Bob state " + fmt("%.2e", worst_state);
        }
    });

    criterion(8, "Monte Carlo chi-square, 20 scenarios at 1e6", 0, [](Outcome_ &o) {
        const uint64_t n = 1000000;
        int passed = 0;
        for (uint64_t k = 0; k < 10; k++) {
            QubitPovm p = k == 0 ? sic_povm() : k == 1 ? trine_povm() : random_povm(2 + k % 7, 800 + k);
            Rng rng(900 + k);
            Vec3 state = haar_direction(rng) * std::uniform_real_distribution<double>(0, 1)(rng);
            SimulationReport r = simulate_statistics(p, state, n, 1000 + k, workers());
            bool ok = r.chi2 <= chi_square_quantile(r.chi2_dof, 0.999);
            passed += ok;
            o.require(ok, "simulate scenario " + std::to_string(k) + " chi2 " + fmt("%.3f", r.chi2));
        }
        for (uint64_t k = 0; k < 10; k++) {
            QubitPovm a = k == 0 ? sic_povm() : random_povm(2 + k % 7, 850 + k);
            QubitPovm b = k == 0 ? projective_povm({1, 0, 0}) : random_povm(2 + (k + 3) % 7, 870 + k);
            LhsSampleReport r = lhs_sample_statistics(a, b, n, 2000 + k, workers());
            bool ok = r.chi2 <= chi_square_quantile(r.chi2_dof, 0.999);
            passed += ok;
            o.require(ok, "lhs scenario " + std::to_string(k) + " chi2 " + fmt("%.3f", r.chi2));
        }
        if (o.pass) {
            o.detail = std::to_string(passed) + "/20 below the 99.9% quantile";
        }
    });

    criterion(9, "CHSH thresholds and linearity", 0, [](Outcome_ &o) {
        ChshSettings s = optimal_chsh_settings();
        auto value = [&](double eta) { return chsh_value(s.a, s.a2, s.b, s.b2, Visibility(eta)); };
        o.require(std::abs(value(1) - 2 * std::sqrt(2.0)) <= 1e-10, "eta = 1");
        o.require(std::abs(value(1 / std::sqrt(2.0)) - 2) <= 1e-10, "eta = 1/sqrt2");
        o.require(std::abs(value(0.5) - std::sqrt(2.0)) <= 1e-10, "eta = 1/2");
        Rng rng(9);
        std::uniform_real_distribution<double> u(0, 1);
        for (int k = 0; k < 1000; k++) {
            Vec3 a = haar_direction(rng), a2 = haar_direction(rng), b = haar_direction(rng), b2 = haar_direction(rng);
            double eta = u(rng);
            double lin = std::abs(chsh_value(a, a2, b, b2, Visibility(eta)) - eta * chsh_value(a, a2, b, b2, Visibility(1)));
            o.require(lin <= 1e-12, "linearity");
        }
    });

    criterion(10, "sigma_x / sigma_z parent measurement", 0, [](Outcome_ &o) {
        const double r = 1 / std::sqrt(2.0);
        std::vector<PauliOperator> g;
        for (int i : {1, -1}) {
            for (int j : {1, -1}) {
                g.push_back({0.25, Vec3(i * r, 0, j * r) * 0.25});
            }
        }
        for (const auto &op : g) {
            o.require(op.is_psd(), "G not positive");
        }
        CanonicalPovm c = canonicalize(g);
        o.require(validate(c.povm).ok(), "not a POVM");
        Visibility eta(r);
        QubitPovm sx = projective_povm({1, 0, 0});
        QubitPovm sz = projective_povm({0, 0, 1});
        // g is ordered (+,+), (+,-), (-,+), (-,-).
        for (int k = 0; k < 2; k++) {
            PauliOperator mx = g[2 * k] + g[2 * k + 1];
            PauliOperator mz = g[k] + g[k + 2];
            o.require(mx.max_abs_diff(noisy_element(sx, k, eta)) <= 1e-15, "x marginal");
            o.require(mz.max_abs_diff(noisy_element(sz, k, eta)) <= 1e-15, "z marginal");
        }
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
