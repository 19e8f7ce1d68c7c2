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

#ifndef QUBITJM_POVM_H
#define QUBITJM_POVM_H

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "qubitjm/bloch.h"

namespace qubitjm {

/// Validation tolerance for POVM invariants (admits decimal JSON input).
inline constexpr double EPS_POVM = 1e-10;
/// Outcomes lighter than this never fire and are dropped.
inline constexpr double MIN_WEIGHT = 1e-12;

/// One rank-1 outcome weight * |direction><direction|.
struct Outcome {
    double weight = 0;
    Vec3 direction;
};

/// A qubit POVM in rank-1 form: A_i = p_i (1 + a_i.sigma) / 2.
/// Validity (sum p = 2, sum p a = 0, unit directions) is checked by validate(), not enforced on construction.
struct QubitPovm {
    std::vector<Outcome> outcomes;

    size_t size() const {
        return outcomes.size();
    }
    const Outcome &operator[](size_t i) const {
        return outcomes[i];
    }
    PauliOperator element(size_t i) const;
    /// Same weights, directions negated.
    QubitPovm flipped() const;
};

/// Depolarizing visibility eta in [0, 1].
class Visibility {
   public:
    /// Throws std::invalid_argument outside [0, 1].
    explicit Visibility(double eta);
    double value() const {
        return eta_;
    }

   private:
    double eta_;
};

struct PovmValidation {
    bool weights_nonnegative = false;
    bool directions_unit = false;
    bool weights_sum_to_two = false;
    bool closure = false;

    double min_weight = 0;
    /// max over outcomes with p > 0 of ||a_i| - 1|
    double direction_norm_residual = 0;
    /// |sum p - 2|
    double weight_sum_residual = 0;
    /// |sum p a|
    double closure_residual = 0;

    bool ok() const {
        return weights_nonnegative && directions_unit && weights_sum_to_two && closure;
    }
    std::string describe() const;
};

PovmValidation validate(const QubitPovm &povm);

/// p_i (1 + eta a_i.sigma) / 2. Throws std::out_of_range for a bad index.
PauliOperator noisy_element(const QubitPovm &povm, size_t i, Visibility eta);

/// tr[element * (1 + x.sigma)/2] = t + w.x. Throws InvalidState if |x| > 1 + 1e-10.
double born(const PauliOperator &element, const Vec3 &state_bloch);

struct CanonicalPovm {
    QubitPovm povm;
    /// origin[k] = index of the raw element that canonical outcome k coarse-grains into.
    std::vector<size_t> origin;
};

/// Rank-1 refinement of an arbitrary qubit POVM. Throws NotAPovm.
CanonicalPovm canonicalize(const std::vector<PauliOperator> &raw);

/// Valid random POVM with exactly n outcomes; deterministic in seed.
/// Throws std::invalid_argument for n < 2 and GenerationFailed after 1000 rejected attempts.
QubitPovm random_povm(size_t n_outcomes, uint64_t seed);
/// Same, drawing from an existing stream.
QubitPovm random_povm(size_t n_outcomes, Rng &rng);

/// Uniform point on the unit sphere.
Vec3 haar_direction(Rng &rng);

/// {(1, a), (1, -a)}
QubitPovm projective_povm(const Vec3 &axis);
/// Tetrahedral SIC with a_1 = +z, a_2 in the xz-plane, weights 1/2.
QubitPovm sic_povm();
/// Three coplanar directions at 120 degrees in the xy-plane, weights 2/3.
QubitPovm trine_povm();

}  // namespace qubitjm

#endif
