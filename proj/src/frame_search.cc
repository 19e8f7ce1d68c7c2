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

#include "qubitjm/frame_search.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>
#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "qubitjm/errors.h"

namespace qubitjm {

std::string octant_label(int k) {
    std::string s;
    for (int sign : octant_signs(k)) {
        s += sign > 0 ? '+' : '-';
    }
    return s;
}

int octant_of(const Vec3 &c) {
    return (c.x < 0 ? 4 : 0) | (c.y < 0 ? 2 : 0) | (c.z < 0 ? 1 : 0);
}

CubeVertices::CubeVertices(const Rotation &r) : rotation(r) {
    for (int k = 0; k < NUM_OCTANTS; k++) {
        auto s = octant_signs(k);
        v[k] = r.apply(Vec3(s[0], s[1], s[2]));
    }
}

double f_value(const QubitPovm &povm, const Vec3 &x) {
    double total = 0;
    for (const Outcome &o : povm.outcomes) {
        total += o.weight * theta(x.dot(o.direction));
    }
    return total;
}

double f_value_abs(const QubitPovm &povm, const Vec3 &x) {
    double total = 0;
    for (const Outcome &o : povm.outcomes) {
        total += o.weight * std::abs(x.dot(o.direction));
    }
    return total / 2;
}

double vertex_sum(const QubitPovm &povm, const CubeVertices &cube) {
    double total = 0;
    for (const Vec3 &v : cube.v) {
        total += f_value(povm, v);
    }
    return total;
}

CubeIdentityReport cube_identity_checks(const Vec3 &a, const CubeVertices &cube, double tol) {
    double abs_sum = 0;
    double pos_sum = 0;
    Vec3 linear;
    Vec3 positive;
    for (const Vec3 &v : cube.v) {
        double d = v.dot(a);
        abs_sum += std::abs(d);
        pos_sum += theta(d);
        linear += v * d;
        positive += v * theta(d);
    }
    double n = a.norm();
    CubeIdentityReport r;
    r.residual = {abs_sum - 8 * n, pos_sum - 4 * n, (linear - a * 8).norm(), (positive - a * 4).norm()};
    r.holds = {r.residual[0] <= tol, r.residual[1] <= tol, r.residual[2] <= tol, r.residual[3] <= tol};
    return r;
}

std::string to_string(FrameMethod m) {
    switch (m) {
        case FrameMethod::TwoOutcomeExact:
            return "TwoOutcomeExact";
        case FrameMethod::CoplanarBisection:
            return "CoplanarBisection";
        case FrameMethod::MinimaxSearch:
            return "MinimaxSearch";
    }
    return "?";
}

FrameCertificate make_certificate(const QubitPovm &povm, const Rotation &rotation, FrameMethod method) {
    FrameCertificate cert;
    cert.rotation = rotation;
    cert.method = method;
    CubeVertices cube(rotation);
    for (int k = 0; k < NUM_OCTANTS; k++) {
        cert.vertex_values[k] = f_value(povm, cube.v[k]);
    }
    cert.max_value = *std::max_element(cert.vertex_values.begin(), cert.vertex_values.end());
    return cert;
}

namespace {

Eigen::JacobiSVD<Eigen::Matrix3Xd> direction_svd(const QubitPovm &povm) {
    Eigen::Matrix3Xd a(3, povm.size());
    for (size_t i = 0; i < povm.size(); i++) {
        a.col(i) << povm[i].direction.x, povm[i].direction.y, povm[i].direction.z;
    }
    return Eigen::JacobiSVD<Eigen::Matrix3Xd>(a, Eigen::ComputeFullU);
}

}  // namespace

double direction_matrix_min_singular_value(const QubitPovm &povm) {
    auto svd = direction_svd(povm);
    return povm.size() < 3 ? 0 : svd.singularValues()(2);
}

namespace {

constexpr double COPLANAR_THRESHOLD = 1e-9;

bool certifies(const FrameCertificate &c) {
    return c.max_value <= 1 + EPS_FRAME;
}

// Right-handed orthonormal frame whose first axis is `x`.
Rotation frame_with_x_axis(const Vec3 &x_axis) {
    Vec3 x = x_axis.normalized();
    Vec3 helper{1, 0, 0};
    if (std::abs(x.y) <= std::abs(x.x) && std::abs(x.y) <= std::abs(x.z)) {
        helper = {0, 1, 0};
    } else if (std::abs(x.z) <= std::abs(x.x)) {
        helper = {0, 0, 1};
    }
    Vec3 y = x.cross(helper).normalized();
    Vec3 z = x.cross(y);
    return Rotation::from_columns(x, y, z);
}

FrameCertificate two_outcome_frame(const QubitPovm &povm) {
    return make_certificate(povm, frame_with_x_axis(povm[0].direction), FrameMethod::TwoOutcomeExact);
}

FrameCertificate coplanar_frame(const QubitPovm &povm) {
    Eigen::Vector3d n = direction_svd(povm).matrixU().col(2);
    Vec3 normal = Vec3(n(0), n(1), n(2)).normalized();
    Rotation base = frame_with_x_axis(normal);
    // Columns: u, w span the plane, normal is the new z-axis.
    Vec3 u = base.column(1);
    Vec3 w = base.column(2);

    auto frame_at = [&](double phi) {
        double c = std::cos(phi), s = std::sin(phi);
        Vec3 x = u * c + w * s;
        Vec3 y = w * c - u * s;
        return Rotation::from_columns(x, y, normal);
    };
    // C1 = f(v_{+++}), C2 = f(v_{+-+}); a quarter turn swaps them.
    auto gap = [&](double phi) {
        Rotation r = frame_at(phi);
        return f_value(povm, r.apply({1, 1, 1})) - f_value(povm, r.apply({1, -1, 1}));
    };

    FrameCertificate start = make_certificate(povm, frame_at(0), FrameMethod::CoplanarBisection);
    double g0 = gap(0);
    if (certifies(start) || g0 == 0) {
        return start;
    }
    double lo = 0;
    double hi = std::numbers::pi / 2;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; iter++) {
        double mid = (lo + hi) / 2;
        double gm = gap(mid);
        if (gm == 0) {
            lo = hi = mid;
            break;
        }
        if ((gm > 0) == (g0 > 0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return make_certificate(povm, frame_at((lo + hi) / 2), FrameMethod::CoplanarBisection);
}

struct MinimaxObjective {
    const QubitPovm *povm;

    double operator()(double alpha, double beta, double gamma) const {
        Rotation r = Rotation::from_euler_zyz(alpha, beta, gamma);
        // f is even, so the four representatives of antipodal pairs suffice.
        double worst = 0;
        for (int k = 0; k < 4; k++) {
            auto s = octant_signs(k);
            worst = std::max(worst, f_value(*povm, r.apply(Vec3(s[0], s[1], s[2]))));
        }
        return worst;
    }
};

double gsl_objective(const gsl_vector *x, void *params) {
    const auto &obj = *static_cast<const MinimaxObjective *>(params);
    return obj(gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2));
}

// Inverse of Rotation::from_euler_zyz (any branch at gimbal lock).
std::array<double, 3> euler_zyz_of(const Rotation &r) {
    double beta = std::acos(std::clamp(r(2, 2), -1.0, 1.0));
    if (std::abs(std::sin(beta)) < 1e-12) {
        double alpha = r(2, 2) > 0 ? std::atan2(r(1, 0), r(0, 0)) : std::atan2(-r(1, 0), -r(0, 0));
        return {alpha, beta, 0};
    }
    return {std::atan2(r(1, 2), r(0, 2)), beta, std::atan2(r(2, 1), -r(2, 0))};
}

struct Start {
    double value;
    std::array<double, 3> angles;
};

// Nelder-Mead from `start`; returns the best point found.
Start refine(const MinimaxObjective &objective, const Start &start, double step, const FrameSearchOptions &options) {
    gsl_multimin_function fn;
    fn.n = 3;
    fn.f = gsl_objective;
    fn.params = const_cast<MinimaxObjective *>(&objective);

    gsl_vector *x = gsl_vector_alloc(3);
    gsl_vector *steps = gsl_vector_alloc(3);
    for (int k = 0; k < 3; k++) {
        gsl_vector_set(x, k, start.angles[k]);
        gsl_vector_set(steps, k, step);
    }
    gsl_multimin_fminimizer *s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3);
    gsl_multimin_fminimizer_set(s, &fn, x, steps);

    for (int iter = 0; iter < options.max_refinement_steps; iter++) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), options.simplex_tolerance) == GSL_SUCCESS) {
            break;
        }
    }
    Start best{s->fval, {gsl_vector_get(s->x, 0), gsl_vector_get(s->x, 1), gsl_vector_get(s->x, 2)}};
    if (start.value < best.value) {
        best = start;
    }
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(steps);
    gsl_vector_free(x);
    return best;
}

FrameCertificate minimax_frame(const QubitPovm &povm, const FrameSearchOptions &options) {
    gsl_set_error_handler_off();
    MinimaxObjective objective{&povm};

    if (options.hint) {
        FrameCertificate c = make_certificate(povm, *options.hint, FrameMethod::MinimaxSearch);
        if (certifies(c)) {
            return c;
        }
    }

    // Right-multiplying by a quarter turn about z maps the cube onto itself,
    // so gamma only needs to cover [0, 90).
    const double step = options.grid_step_degrees * std::numbers::pi / 180;
    const int n_alpha = static_cast<int>(std::ceil(2 * std::numbers::pi / step));
    const int n_beta = static_cast<int>(std::ceil(std::numbers::pi / step)) + 1;
    const int n_gamma = static_cast<int>(std::ceil(std::numbers::pi / 2 / step));
    std::vector<Start> grid;
    grid.reserve(static_cast<size_t>(n_alpha) * n_beta * n_gamma);
    for (int i = 0; i < n_alpha; i++) {
        for (int j = 0; j < n_beta; j++) {
            for (int k = 0; k < n_gamma; k++) {
                std::array<double, 3> angles{i * step, std::min(j * step, std::numbers::pi), k * step};
                grid.push_back({objective(angles[0], angles[1], angles[2]), angles});
            }
        }
    }
    std::stable_sort(grid.begin(), grid.end(), [](const Start &a, const Start &b) { return a.value < b.value; });

    // Distinct starts: at least two grid steps apart in some angle.
    std::vector<Start> starts;
    if (options.hint) {
        std::array<double, 3> angles = euler_zyz_of(*options.hint);
        starts.push_back({objective(angles[0], angles[1], angles[2]), angles});
    }
    for (const Start &candidate : grid) {
        if (static_cast<int>(starts.size()) >= options.multistarts) {
            break;
        }
        bool distinct = std::all_of(starts.begin(), starts.end(), [&](const Start &s) {
            double d = 0;
            for (int k = 0; k < 3; k++) {
                d = std::max(d, std::abs(s.angles[k] - candidate.angles[k]));
            }
            return d > 2 * step;
        });
        if (distinct) {
            starts.push_back(candidate);
        }
    }

    Start best = starts.front();
    for (const Start &s : starts) {
        Start refined = refine(objective, s, step, options);
        if (refined.value < best.value) {
            best = refined;
        }
        FrameCertificate c = make_certificate(
            povm, Rotation::from_euler_zyz(refined.angles[0], refined.angles[1], refined.angles[2]),
            FrameMethod::MinimaxSearch);
        if (certifies(c)) {
            return c;
        }
    }
    throw FrameNotFound("minimax search ended with max f(v) = " + std::to_string(best.value) + " > 1");
}

}  // namespace

FrameCertificate find_frame(const QubitPovm &povm, const FrameSearchOptions &options) {
    if (povm.size() == 2) {
        FrameCertificate c = two_outcome_frame(povm);
        if (certifies(c)) {
            return c;
        }
    } else if (direction_matrix_min_singular_value(povm) < COPLANAR_THRESHOLD) {
        FrameCertificate c = coplanar_frame(povm);
        if (certifies(c)) {
            return c;
        }
    }
    return minimax_frame(povm, options);
}

SicBoundReport sic_global_bound_check(const QubitPovm &povm, uint64_t n_samples, uint64_t seed) {
    bool is_sic = povm.size() == 4;
    for (size_t i = 0; is_sic && i < 4; i++) {
        is_sic &= std::abs(povm[i].weight - 0.5) <= EPS_POVM;
        for (size_t j = i + 1; is_sic && j < 4; j++) {
            is_sic &= std::abs(povm[i].direction.dot(povm[j].direction) + 1.0 / 3) <= 1e-9;
        }
    }
    if (!is_sic) {
        throw std::invalid_argument("sic_global_bound_check requires a four-outcome SIC POVM");
    }
    Rng rng(seed);
    const double radius = std::sqrt(3.0);
    SicBoundReport r;
    r.samples = n_samples;
    for (uint64_t k = 0; k < n_samples; k++) {
        double v = f_value(povm, haar_direction(rng) * radius);
        r.max_value = std::max(r.max_value, v);
        if (v > 1 + 1e-12) {
            r.violations++;
        }
    }
    return r;
}

}  // namespace qubitjm
