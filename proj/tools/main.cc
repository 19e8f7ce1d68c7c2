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

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"
#include "qubitjm/errors.h"

using namespace qubitjm;
using namespace qubitjm::cli;

namespace {

void add_output(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    cmd->add_option("--format", cfg.format, "Report format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}));
}

void add_sampling(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--samples,-n", cfg.samples, "Monte Carlo rounds (0 skips sampling)");
    cmd->add_option("--seed", cfg.seed, "Seed for every stochastic step");
    cmd->add_option("--workers", cfg.workers, "Worker threads (results do not depend on this)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Joint-measurability simulator for noisy qubit POVMs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string state_text = "0,0,1";

    auto verify = app.add_subcommand("verify", "Find a frame, build the post-processing table and check the mixture");
    verify->add_option("--povm,-p", cfg.povm_path, "POVM JSON file")->required();
    add_output(verify, cfg);

    auto simulate = app.add_subcommand("simulate", "Sample the parent measurement and compare with Born statistics");
    simulate->add_option("--povm,-p", cfg.povm_path, "POVM JSON file")->required();
    simulate->add_option("--state", state_text, "Bloch vector x,y,z of the measured state");
    add_sampling(simulate, cfg);
    add_output(simulate, cfg);

    auto werner = app.add_subcommand("werner", "Compare the hidden-state model with the eta = 1/2 Werner state");
    werner->add_option("--alice", cfg.alice_path, "Alice's POVM JSON file")->required();
    werner->add_option("--bob", cfg.bob_path, "Bob's POVM JSON file")->required();
    add_sampling(werner, cfg);
    add_output(werner, cfg);

    auto chsh = app.add_subcommand("chsh", "CHSH value of the Werner state");
    chsh->add_option("--eta", cfg.eta, "Werner visibility in [0, 1]")->required();
    chsh->add_option("--settings", cfg.settings_path, "JSON with unit vectors a, a2, b, b2");
    add_output(chsh, cfg);

    auto random = app.add_subcommand("random", "Write a random POVM in the JSON format");
    random->add_option("--outcomes", cfg.outcomes, "Number of outcomes (>= 2)");
    random->add_option("--seed", cfg.seed, "Seed");
    add_output(random, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_BAD_INPUT;
    }

    try {
        if (simulate->parsed()) {
            cfg.state = parse_vector(state_text);
            return cmd_simulate(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (werner->parsed()) {
            return cmd_werner(cfg);
        }
        if (chsh->parsed()) {
            return cmd_chsh(cfg);
        }
        return cmd_random(cfg);
    } catch (const FrameNotFound &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_NO_FRAME;
    } catch (const DisagreementError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_CHECK_FAILED;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    }
}
