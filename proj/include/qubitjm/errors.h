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

#ifndef QUBITJM_ERRORS_H
#define QUBITJM_ERRORS_H

#include <stdexcept>
#include <string>

namespace qubitjm {

/// Operator fails t >= |w| beyond tolerance.
struct NotPositive : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operator list is not a valid POVM (sum != 1, or an element is not PSD).
struct NotAPovm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Bloch vector outside the unit ball.
struct InvalidState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// POVM file could not be parsed or failed validation.
struct PovmParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimax search exhausted its budget without a certified frame.
struct FrameNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frame certificate does not satisfy max f(v) <= 1 for the POVM.
struct InvalidFrame : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed-form and dense-matrix evaluations disagree.
struct DisagreementError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace qubitjm

#endif
