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

#ifndef QUBITJM_POVM_IO_H
#define QUBITJM_POVM_IO_H

#include <string>

#include "json.hpp"
#include "qubitjm/povm.h"

namespace qubitjm {

/// Parses {"outcomes": [{"p": .., "a": [x, y, z]}, ...]}.
/// Directions are normalized, zero-weight outcomes dropped, and the result validated.
/// Throws PovmParseError on any schema or validation failure.
QubitPovm povm_from_json(const nlohmann::json &j);
QubitPovm load_povm(const std::string &path);
nlohmann::json povm_to_json(const QubitPovm &povm);

/// Rounds to 12 significant digits (the precision every report is written at).
double round_sig12(double x);

}  // namespace qubitjm

#endif
