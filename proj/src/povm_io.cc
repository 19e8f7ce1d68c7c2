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

#include "qubitjm/povm_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "qubitjm/errors.h"

namespace qubitjm {

QubitPovm povm_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_array()) {
        throw PovmParseError("expected an object with an \"outcomes\" array");
    }
    QubitPovm povm;
    size_t k = 0;
    for (const auto &entry : j["outcomes"]) {
        std::string where = "outcome " + std::to_string(k++);
        if (!entry.is_object() || !entry.contains("p") || !entry.contains("a")) {
            throw PovmParseError(where + ": expected {\"p\": number, \"a\": [x, y, z]}");
        }
        const auto &p = entry["p"];
        const auto &a = entry["a"];
        if (!p.is_number() || !a.is_array() || a.size() != 3 ||
            !std::all_of(a.begin(), a.end(), [](const auto &c) { return c.is_number(); })) {
            throw PovmParseError(where + ": malformed weight or direction");
        }
        double weight = p.get<double>();
        Vec3 dir{a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
        if (weight < 0) {
            throw PovmParseError(where + ": negative weight");
        }
        if (weight < MIN_WEIGHT) {
            continue;
        }
        if (!(dir.norm() > 0) || !dir.is_finite()) {
            throw PovmParseError(where + ": direction must be a nonzero finite vector");
        }
        povm.outcomes.push_back({weight, dir.normalized()});
    }
    if (povm.size() == 0) {
        throw PovmParseError("POVM has no outcomes with positive weight");
    }
    PovmValidation check = validate(povm);
    if (!check.ok()) {
        throw PovmParseError("invalid POVM: " + check.describe());
    }
    return povm;
}

QubitPovm load_povm(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw PovmParseError("cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw PovmParseError(path + ": " + e.what());
    }
    return povm_from_json(j);
}

nlohmann::json povm_to_json(const QubitPovm &povm) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const Outcome &o : povm.outcomes) {
        outcomes.push_back({
            {"p", round_sig12(o.weight)},
            {"a", {round_sig12(o.direction.x), round_sig12(o.direction.y), round_sig12(o.direction.z)}},
        });
    }
    return {{"outcomes", outcomes}};
}

double round_sig12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace qubitjm
