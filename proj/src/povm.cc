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

#include "qubitjm/povm.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qubitjm/errors.h"

namespace qubitjm {

PauliOperator QubitPovm::element(size_t i) const {
    const Outcome &o = outcomes.at(i);
    return PauliOperator::projector(o.weight, o.direction);
}

QubitPovm QubitPovm::flipped() const {
    QubitPovm r = *this;
    for (Outcome &o : r.outcomes) {
        o.direction = -o.direction;
    }
    return r;
}

Visibility::Visibility(double eta) : eta_(eta) {
    if (!(eta >= 0 && eta <= 1)) {
        throw std::invalid_argument("visibility must lie in [0, 1], got " + std::to_string(eta));
    }
}

std::string PovmValidation::describe() const {
    std::ostringstream out;
    out << "weights_nonnegative=" << weights_nonnegative << " (min " << min_weight << "), "
        << "directions_unit=" << directions_unit << " (residual " << direction_norm_residual << "), "
        << "weights_sum_to_two=" << weights_sum_to_two << " (residual " << weight_sum_residual << "), "
        << "closure=" << closure << " (residual " << closure_residual << ")";
    return out.str();
}

PovmValidation validate(const QubitPovm &povm) {
    PovmValidation r;
    double sum = 0;
    Vec3 moment;
    r.min_weight = povm.outcomes.empty() ? 0 : povm.outcomes.front().weight;
    bool finite = true;
    for (const Outcome &o : povm.outcomes) {
        finite &= std::isfinite(o.weight) && o.direction.is_finite();
        r.min_weight = std::min(r.min_weight, o.weight);
        if (o.weight > 0) {
            r.direction_norm_residual = std::max(r.direction_norm_residual, std::abs(o.direction.norm() - 1));
        }
        sum += o.weight;
        moment += o.direction * o.weight;
    }
    r.weight_sum_residual = std::abs(sum - 2);
    r.closure_residual = moment.norm();
    r.weights_nonnegative = finite && r.min_weight >= 0;
    r.directions_unit = finite && r.direction_norm_residual <= EPS_POVM;
    r.weights_sum_to_two = finite && r.weight_sum_residual <= EPS_POVM;
    r.closure = finite && r.closure_residual <= EPS_POVM;
    return r;
}

PauliOperator noisy_element(const QubitPovm &povm, size_t i, Visibility eta) {
    if (i >= povm.size()) {
        throw std::out_of_range("outcome index " + std::to_string(i) + " out of range for POVM with " +
                                std::to_string(povm.size()) + " outcomes");
    }
    const Outcome &o = povm.outcomes[i];
    return {o.weight / 2, o.direction * (eta.value() * o.weight / 2)};
}

double born(const PauliOperator &element, const Vec3 &state_bloch) {
    if (!state_bloch.is_finite() || state_bloch.norm() > 1 + EPS_POVM) {
        throw InvalidState("Bloch vector has norm " + std::to_string(state_bloch.norm()) + " > 1");
    }
    return element.t + element.w.dot(state_bloch);
}

CanonicalPovm canonicalize(const std::vector<PauliOperator> &raw) {
    PauliOperator total;
    for (size_t k = 0; k < raw.size(); k++) {
        if (!raw[k].is_psd()) {
            throw NotAPovm("element " + std::to_string(k) + " is not positive semidefinite");
        }
        total += raw[k];
    }
    if (total.max_abs_diff(PauliOperator::identity()) > EPS_POVM) {
        throw NotAPovm("elements do not sum to the identity");
    }

    CanonicalPovm result;
    for (size_t k = 0; k < raw.size(); k++) {
        for (const Rank1Piece &piece : eigen_rank1_split(raw[k])) {
            if (piece.weight < MIN_WEIGHT) {
                continue;
            }
            result.povm.outcomes.push_back({piece.weight, piece.direction});
            result.origin.push_back(k);
        }
    }
    return result;
}

Vec3 haar_direction(Rng &rng) {
    std::uniform_real_distribution<double> cos_theta(-1.0, 1.0);
    std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
    double z = cos_theta(rng);
    double phi = azimuth(rng);
    double s = std::sqrt(std::max(0.0, 1 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

QubitPovm random_povm(size_t n_outcomes, Rng &rng) {
    if (n_outcomes < 2) {
        throw std::invalid_argument("random_povm needs at least 2 outcomes");
    }
    std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
    for (int attempt = 0; attempt < 1000; attempt++) {
        // n - 1 free rank-1 elements; the deficit to a multiple of the identity
        // is itself rank-1 (c = |d|), giving exactly n outcomes.
        std::vector<PauliOperator> elements;
        PauliOperator sum;
        for (size_t k = 0; k + 1 < n_outcomes; k++) {
            PauliOperator e = PauliOperator::projector(weight_dist(rng), haar_direction(rng));
            elements.push_back(e);
            sum += e;
        }
        double d = sum.w.norm();
        double scale = sum.t + d;
        if (d / scale < 1e-6) {
            continue;
        }
        elements.push_back(PauliOperator{d, -sum.w});
        for (PauliOperator &e : elements) {
            e = e * (1 / scale);
        }

        CanonicalPovm canon;
        try {
            canon = canonicalize(elements);
        } catch (const NotAPovm &) {
            continue;
        }
        if (canon.povm.size() != n_outcomes) {
            continue;
        }
        double total = 0;
        for (const Outcome &o : canon.povm.outcomes) {
            total += o.weight;
        }
        for (Outcome &o : canon.povm.outcomes) {
            o.weight *= 2 / total;
        }
        if (validate(canon.povm).ok()) {
            return canon.povm;
        }
    }
    throw GenerationFailed("could not generate a POVM with " + std::to_string(n_outcomes) + " outcomes");
}

QubitPovm random_povm(size_t n_outcomes, uint64_t seed) {
    Rng rng(seed);
    return random_povm(n_outcomes, rng);
}

QubitPovm projective_povm(const Vec3 &axis) {
    Vec3 a = axis.normalized();
    return QubitPovm{{{1, a}, {1, -a}}};
}

QubitPovm sic_povm() {
    const double third = 1.0 / 3.0;
    return QubitPovm{{
        {0.5, {0, 0, 1}},
        {0.5, {std::sqrt(8.0) / 3, 0, -third}},
        {0.5, {-std::sqrt(2.0) / 3, std::sqrt(6.0) / 3, -third}},
        {0.5, {-std::sqrt(2.0) / 3, -std::sqrt(6.0) / 3, -third}},
    }};
}

QubitPovm trine_povm() {
    const double h = std::sqrt(3.0) / 2;
    return QubitPovm{{
        {2.0 / 3, {1, 0, 0}},
        {2.0 / 3, {-0.5, h, 0}},
        {2.0 / 3, {-0.5, -h, 0}},
    }};
}

}  // namespace qubitjm
