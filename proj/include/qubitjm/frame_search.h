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

#ifndef QUBITJM_FRAME_SEARCH_H
#define QUBITJM_FRAME_SEARCH_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qubitjm/bloch.h"
#include "qubitjm/povm.h"

namespace qubitjm {

/// A frame is accepted when every cube-vertex value satisfies f(v) <= 1 + EPS_FRAME.
inline constexpr double EPS_FRAME = 1e-9;

/// Octants are indexed 0..7 in the order +++, ++-, +-+, +--, -++, -+-, --+, ---.
/// Bit 2 is the x sign, bit 1 the y sign, bit 0 the z sign (set = negative).
/// The antipodal octant of k is 7 - k.
inline constexpr int NUM_OCTANTS = 8;

/// (s_x, s_y, s_z) for octant k.
constexpr std::array<int, 3> octant_signs(int k) {
    return {(k & 4) ? -1 : 1, (k & 2) ? -1 : 1, (k & 1) ? -1 : 1};
}
/// Octant label such as "+-+".
std::string octant_label(int k);
/// Octant of a point, with sgn(0) = +1.
int octant_of(const Vec3 &frame_coords);

/// The eight vertices R (s_x, s_y, s_z) of the cube inscribed in the sphere of radius sqrt(3).
struct CubeVertices {
    Rotation rotation;
    std::array<Vec3, NUM_OCTANTS> v;

    explicit CubeVertices(const Rotation &r);
};

/// max(x, 0)
constexpr double theta(double x) {
    return x >= 0 ? x : 0;
}

/// f(x) = sum_i p_i Theta(x . a_i)
double f_value(const QubitPovm &povm, const Vec3 &x);
/// (1/2) sum_i p_i |x . a_i|; equal to f_value for a closed POVM.
double f_value_abs(const QubitPovm &povm, const Vec3 &x);

/// sum_s f(v_s); never exceeds 8 for a valid POVM.
double vertex_sum(const QubitPovm &povm, const CubeVertices &cube);

/// Cube-vertex identities for a single vector a:
///  (1) sum_s |v_s.a| <= 8|a|
///  (2) sum_s Theta(v_s.a) <= 4|a|
///  (3) sum_s (v_s.a) v_s = 8a
///  (4) sum_s Theta(v_s.a) v_s = 4a
struct CubeIdentityReport {
    std::array<bool, 4> holds{};
    /// (1),(2): lhs - bound (<= 0 when holding); (3),(4): |lhs - rhs|.
    std::array<double, 4> residual{};

    bool all() const {
        return holds[0] && holds[1] && holds[2] && holds[3];
    }
};
CubeIdentityReport cube_identity_checks(const Vec3 &a, const CubeVertices &cube, double tol = 1e-10);

enum class FrameMethod { TwoOutcomeExact, CoplanarBisection, MinimaxSearch };
std::string to_string(FrameMethod m);

struct FrameCertificate {
    Rotation rotation;
    std::array<double, NUM_OCTANTS> vertex_values{};
    double max_value = 0;
    FrameMethod method = FrameMethod::MinimaxSearch;

    CubeVertices vertices() const {
        return CubeVertices(rotation);
    }
};

/// Evaluates f at the eight vertices of `rotation` and packages a certificate (not checked).
FrameCertificate make_certificate(const QubitPovm &povm, const Rotation &rotation, FrameMethod method);

struct FrameSearchOptions {
    /// Tried first in the general case; accepted as-is when it already certifies.
    std::optional<Rotation> hint;
    int multistarts = 10;
    int max_refinement_steps = 2000;
    double grid_step_degrees = 5;
    double simplex_tolerance = 1e-10;
};

/// Returns a certificate with max_value <= 1 + EPS_FRAME:
///  two outcomes          -> x-axis along a_1 (all values exactly 1);
///  coplanar directions   -> z normal to the plane, bisection of the in-plane angle;
///  otherwise             -> grid + Nelder-Mead minimax over rotations.
/// Throws FrameNotFound if the minimax budget is exhausted.
FrameCertificate find_frame(const QubitPovm &povm, const FrameSearchOptions &options = {});

/// Smallest singular value of the 3 x n matrix of outcome directions.
double direction_matrix_min_singular_value(const QubitPovm &povm);

struct SicBoundReport {
    uint64_t samples = 0;
    uint64_t violations = 0;
    double max_value = 0;
};

/// Samples x uniformly on the sphere of radius sqrt(3) and counts f(x) > 1 + 1e-12.
/// Throws std::invalid_argument if povm is not a SIC (four weights 1/2, pairwise a_i.a_j = -1/3).
SicBoundReport sic_global_bound_check(const QubitPovm &povm, uint64_t n_samples, uint64_t seed);

}  // namespace qubitjm

#endif
