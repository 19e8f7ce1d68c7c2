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

#ifndef QUBITJM_BLOCH_H
#define QUBITJM_BLOCH_H

#include <array>
#include <cmath>
#include <random>

#include <Eigen/Core>

namespace qubitjm {

/// Orthonormality / determinant tolerance for rotations.
inline constexpr double EPS_ORTHO = 1e-12;
/// Slack allowed on t >= |w| when testing positive-semidefiniteness.
inline constexpr double EPS_PSD = 1e-12;
/// Tolerance for exact algebraic identities in (t, w) arithmetic.
inline constexpr double EPS_EXACT = 1e-12;

using Rng = std::mt19937_64;

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;

    constexpr Vec3() = default;
    constexpr Vec3(double x, double y, double z) : x(x), y(y), z(z) {
    }

    constexpr double operator[](int k) const {
        return k == 0 ? x : (k == 1 ? y : z);
    }
    constexpr Vec3 operator+(const Vec3 &o) const {
        return {x + o.x, y + o.y, z + o.z};
    }
    constexpr Vec3 operator-(const Vec3 &o) const {
        return {x - o.x, y - o.y, z - o.z};
    }
    constexpr Vec3 operator-() const {
        return {-x, -y, -z};
    }
    constexpr Vec3 operator*(double s) const {
        return {x * s, y * s, z * s};
    }
    constexpr Vec3 operator/(double s) const {
        return {x / s, y / s, z / s};
    }
    Vec3 &operator+=(const Vec3 &o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    Vec3 &operator-=(const Vec3 &o) {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr bool operator==(const Vec3 &o) const = default;

    constexpr double dot(const Vec3 &o) const {
        return x * o.x + y * o.y + z * o.z;
    }
    constexpr Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const {
        return std::sqrt(dot(*this));
    }
    /// Throws std::domain_error for the zero vector.
    Vec3 normalized() const;
    bool is_finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }
};

inline constexpr Vec3 operator*(double s, const Vec3 &v) {
    return v * s;
}

/// Proper rotation of R^3, stored row-major.
class Rotation {
   public:
    /// The identity.
    Rotation();

    /// Validates R^T R = 1 and det R = +1 to EPS_ORTHO; throws std::invalid_argument otherwise.
    static Rotation from_rows(const std::array<double, 9> &row_major);
    static Rotation from_columns(const Vec3 &c0, const Vec3 &c1, const Vec3 &c2);
    /// Right-handed rotation by `angle` radians about `axis` (normalized internally).
    static Rotation about_axis(const Vec3 &axis, double angle);
    /// Rz(alpha) * Ry(beta) * Rz(gamma).
    static Rotation from_euler_zyz(double alpha, double beta, double gamma);
    /// Haar-random rotation (uniform unit quaternion).
    static Rotation random(Rng &rng);

    double operator()(int row, int col) const {
        return m_[3 * row + col];
    }
    Vec3 column(int col) const {
        return {m_[col], m_[3 + col], m_[6 + col]};
    }
    const std::array<double, 9> &row_major() const {
        return m_;
    }

    Vec3 apply(const Vec3 &v) const;
    Vec3 apply_transpose(const Vec3 &v) const;
    Rotation transpose() const;
    Rotation operator*(const Rotation &o) const;

    double determinant() const;
    /// max |(R^T R - 1)_{ij}|
    double orthogonality_residual() const;

   private:
    explicit Rotation(const std::array<double, 9> &m) : m_(m) {
    }
    std::array<double, 9> m_;
};

inline Vec3 rotate(const Rotation &r, const Vec3 &v) {
    return r.apply(v);
}

/// Hermitian qubit operator t*1 + w.sigma.
struct PauliOperator {
    double t = 0;
    Vec3 w;

    constexpr PauliOperator() = default;
    constexpr PauliOperator(double t, Vec3 w) : t(t), w(w) {
    }

    static constexpr PauliOperator identity(double scale = 1.0) {
        return {scale, Vec3{}};
    }
    /// weight * |a><a| = weight * (1 + a.sigma) / 2 for unit a.
    static constexpr PauliOperator projector(double weight, const Vec3 &a) {
        return {weight / 2, a * (weight / 2)};
    }

    constexpr PauliOperator operator+(const PauliOperator &o) const {
        return {t + o.t, w + o.w};
    }
    constexpr PauliOperator operator-(const PauliOperator &o) const {
        return {t - o.t, w - o.w};
    }
    constexpr PauliOperator operator*(double s) const {
        return {t * s, w * s};
    }
    PauliOperator &operator+=(const PauliOperator &o) {
        t += o.t;
        w += o.w;
        return *this;
    }

    double trace() const {
        return 2 * t;
    }
    bool is_psd(double eps = EPS_PSD) const {
        return t >= w.norm() - eps;
    }
    /// Largest absolute difference over the four real coordinates.
    double max_abs_diff(const PauliOperator &o) const;
};

inline constexpr PauliOperator operator*(double s, const PauliOperator &op) {
    return op * s;
}

/// tr[A B] = 2 (t_A t_B + w_A . w_B)
inline double trace_product(const PauliOperator &a, const PauliOperator &b) {
    return 2 * (a.t * b.t + a.w.dot(b.w));
}

Eigen::Matrix2cd to_dense(const PauliOperator &op);

/// One term `weight * |direction><direction|` of a rank-1 decomposition.
struct Rank1Piece {
    double weight = 0;
    Vec3 direction;

    PauliOperator op() const {
        return PauliOperator::projector(weight, direction);
    }
};

/// Spectral split O = (t+|w|)|w^><w^| + (t-|w|)|-w^><-w^|.
/// For |w| <= 1e-14 the split is taken along +z/-z. Throws NotPositive if t < |w| - EPS_PSD.
std::array<Rank1Piece, 2> eigen_rank1_split(const PauliOperator &op);

}  // namespace qubitjm

#endif
