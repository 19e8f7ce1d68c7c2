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

#ifndef QUBITJM_TOOLS_COMMANDS_H
#define QUBITJM_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>

#include "qubitjm/bloch.h"

namespace qubitjm::cli {

enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_CHECK_FAILED = 1,
    EXIT_BAD_INPUT = 2,
    EXIT_NO_FRAME = 3,
};

enum class Format { Json, Csv };

struct RunConfig {
    std::string povm_path;
    std::string alice_path;
    std::string bob_path;
    std::string settings_path;
    Vec3 state{0, 0, 1};
    double eta = 0.5;
    uint64_t samples = 0;
    uint64_t seed = 0;
    unsigned workers = 1;
    size_t outcomes = 4;
    std::string out_path;
    Format format = Format::Json;
};

int cmd_verify(const RunConfig &cfg);
int cmd_simulate(const RunConfig &cfg);
int cmd_werner(const RunConfig &cfg);
int cmd_chsh(const RunConfig &cfg);
int cmd_random(const RunConfig &cfg);

/// Parses "x,y,z".
Vec3 parse_vector(const std::string &text);

}  // namespace qubitjm::cli

#endif
