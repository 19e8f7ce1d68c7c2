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

#include "qubitjm/bloch.h"

#include <algorithm>
#include <stdexcept>

#include "qubitjm/errors.h"

namespace qubitjm {

Vec3 Vec3::normalized() const {
    double n = norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return *this / n;
}

Rotation::Rotation() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {
}

Rotation Rotation::from_rows(const std::array<double, 9> &row_major) {
    Rotation r(row_major);
    for (double e : row_major) {
        if (!std::isfinite(e)) {
            throw std::invalid_argument("rotation has non-finite entries");
        }
    }
    if (r.orthogonality_residual() > EPS_ORTHO) {
        throw std::invalid_argument("matrix is not orthogonal");
    }
    if (std::abs(r.determinant() - 1) > EPS_ORTHO) {
        throw std::invalid_argument("matrix is not a proper rotation (det != +1)");
    }
    return r;
}

Rotation Rotation::from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2) {
    return from_rows({c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z});
}

Rotation Rotation::about_axis(const Vec3 &axis, double angle) {
    Vec3 u = axis.normalized();
    double c = std::cos(angle);
    double s = std::sin(angle);
    double k = 1 - c;
    return Rotation({
        c + u.x * u.x * k,
        u.x * u.y * k - u.z * s,
        u.x * u.z * k + u.y * s,
        u.y * u.x * k + u.z * s,
        c + u.y * u.y * k,
        u.y * u.z * k - u.x * s,
        u.z * u.x * k - u.y * s,
        u.z * u.y * k + u.x * s,
        c + u.z * u.z * k,
    });
}

Rotation Rotation::from_euler_zyz(double alpha, double beta, double gamma) {
    double ca = std::cos(alpha), sa = std::sin(alpha);
    double cb = std::cos(beta), sb = std::sin(beta);
    double cg = std::cos(gamma), sg = std::sin(gamma);
    return Rotation({
        ca * cb * cg - sa * sg,
        -ca * cb * sg - sa * cg,
        ca * sb,
        sa * cb * cg + ca * sg,
        -sa * cb * sg + ca * cg,
        sa * sb,
        -sb * cg,
        sb * sg,
        cb,
    });
}

Rotation Rotation::random(Rng &rng) {
    std::normal_distribution<double> gauss;
    double q[4];
    double n2;
    do {
        n2 = 0;
        for (double &c : q) {
            c = gauss(rng);
            n2 += c * c;
        }
    } while (n2 < 1e-24);
    double n = std::sqrt(n2);
    double w = q[0] / n, x = q[1] / n, y = q[2] / n, z = q[3] / n;
    return Rotation({
        1 - 2 * (y * y + z * z),
        2 * (x * y - z * w),
        2 * (x * z + y * w),
        2 * (x * y + z * w),
        1 - 2 * (x * x + z * z),
        2 * (y * z - x * w),
        2 * (x * z - y * w),
        2 * (y * z + x * w),
        1 - 2 * (x * x + y * y),
    });
}

Vec3 Rotation::apply(const Vec3 &v) const {
    return {
        m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
        m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
        m_[6] * v.x + m_[7] * v.y + m_[8] * v.z,
    };
}

Vec3 Rotation::apply_transpose(const Vec3 &v) const {
    return {
        m_[0] * v.x + m_[3] * v.y + m_[6] * v.z,
        m_[1] * v.x + m_[4] * v.y + m_[7] * v.z,
        m_[2] * v.x + m_[5] * v.y + m_[8] * v.z,
    };
}

Rotation Rotation::transpose() const {
    return Rotation({m_[0], m_[3], m_[6], m_[1], m_[4], m_[7], m_[2], m_[5], m_[8]});
}

Rotation Rotation::operator*(const Rotation &o) const {
    std::array<double, 9> r{};
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            double s = 0;
            for (int k = 0; k < 3; k++) {
                s += m_[3 * i + k] * o.m_[3 * k + j];
            }
            r[3 * i + j] = s;
        }
    }
    return Rotation(r);
}

double Rotation::determinant() const {
    return column(0).dot(column(1).cross(column(2)));
}

double Rotation::orthogonality_residual() const {
    double worst = 0;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            double d = column(i).dot(column(j)) - (i == j ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(d));
        }
    }
    return worst;
}

double PauliOperator::max_abs_diff(const PauliOperator &o) const {
    return std::max({std::abs(t - o.t), std::abs(w.x - o.w.x), std::abs(w.y - o.w.y), std::abs(w.z - o.w.z)});
}

Eigen::Matrix2cd to_dense(const PauliOperator &op) {
    using C = std::complex<double>;
    Eigen::Matrix2cd m;
    m(0, 0) = C(op.t + op.w.z, 0);
    m(0, 1) = C(op.w.x, -op.w.y);
    m(1, 0) = C(op.w.x, op.w.y);
    m(1, 1) = C(op.t - op.w.z, 0);
    return m;
}

std::array<Rank1Piece, 2> eigen_rank1_split(const PauliOperator &op) {
    double r = op.w.norm();
    if (op.t < r - EPS_PSD) {
        throw NotPositive("operator is not positive semidefinite: t=" + std::to_string(op.t) +
                          " < |w|=" + std::to_string(r));
    }
    if (r <= 1e-14) {
        return {Rank1Piece{op.t, Vec3{0, 0, 1}}, Rank1Piece{op.t, Vec3{0, 0, -1}}};
    }
    Vec3 u = op.w / r;
    // t - r may be a tiny negative inside the PSD slack.
    return {Rank1Piece{op.t + r, u}, Rank1Piece{std::max(0.0, op.t - r), -u}};
}

}  // namespace qubitjm
