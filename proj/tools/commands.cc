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

#include "commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "qubitjm/errors.h"
#include "qubitjm/joint_measurement.h"
#include "qubitjm/lhs_werner.h"
#include "qubitjm/povm_io.h"
#include "qubitjm/statistics.h"

namespace qubitjm::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr double DECOMPOSITION_TOL = 1e-10;
constexpr double MAX_Z = 5;
constexpr double MIN_P_VALUE = 1e-3;
constexpr double WERNER_TOL = 1e-10;

std::string rng_note() {
    return "std::mt19937_64 streams, one per chunk of " + std::to_string(MC_CHUNK_ROUNDS) +
           " rounds, chunk k seeded with seed_seq{seed lo, seed hi, k lo, k hi}; "
           "workers take whole chunks, so results depend only on (seed, samples)";
}

double num(double x) {
    return round_sig12(x);
}

json nums(const std::vector<double> &xs) {
    json out = json::array();
    for (double x : xs) {
        out.push_back(num(x));
    }
    return out;
}

json vec(const Vec3 &v) {
    return {num(v.x), num(v.y), num(v.z)};
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void emit(const RunConfig &cfg, const json &report, const std::string &csv) {
    std::string text = cfg.format == Format::Json ? report.dump(2) + "\n" : csv;
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot write " + cfg.out_path);
    }
    out << text;
}

json certificate_json(const FrameCertificate &c) {
    json rotation = json::array();
    for (double x : c.rotation.row_major()) {
        rotation.push_back(num(x));
    }
    json values = json::array();
    for (double v : c.vertex_values) {
        values.push_back(num(v));
    }
    return {
        {"rotation_row_major", rotation},
        {"vertex_values", values},
        {"max_value", num(c.max_value)},
        {"method", to_string(c.method)},
    };
}

json joint_json(const JointDistribution &d) {
    json rows = json::array();
    for (size_t i = 0; i < d.rows; i++) {
        json row = json::array();
        for (size_t j = 0; j < d.cols; j++) {
            row.push_back(num(d(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

// The file's own axes are tried first, so fixtures written in a natural frame get that frame.
CondProbTable table_in_file_frame(const QubitPovm &povm) {
    FrameSearchOptions options;
    options.hint = Rotation();
    return build_table(povm, find_frame(povm, options));
}

json header(const char *command, const RunConfig &cfg, bool stochastic) {
    json h = {{"command", command}};
    if (stochastic) {
        h["seed"] = cfg.seed;
        h["samples"] = cfg.samples;
        h["rng"] = rng_note();
    }
    return h;
}

}  // namespace

Vec3 parse_vector(const std::string &text) {
    std::stringstream in(text);
    std::string part;
    std::vector<double> xs;
    while (std::getline(in, part, ',')) {
        size_t used = 0;
        double x;
        try {
            x = std::stod(part, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("expected x,y,z but got '" + text + "'");
        }
        if (used != part.size()) {
            throw std::invalid_argument("expected x,y,z but got '" + text + "'");
        }
        xs.push_back(x);
    }
    if (xs.size() != 3) {
        throw std::invalid_argument("expected x,y,z but got '" + text + "'");
    }
    return {xs[0], xs[1], xs[2]};
}

int cmd_verify(const RunConfig &cfg) {
    QubitPovm povm = load_povm(cfg.povm_path);
    CondProbTable table = table_in_file_frame(povm);
    DecompositionReport rep = verify_decomposition(table);
    bool ok = rep.pass(DECOMPOSITION_TOL);

    json rows = json::array();
    std::string csv = "octant,label,f_value";
    for (size_t i = 0; i < povm.size(); i++) {
        csv += ",p" + std::to_string(i + 1);
    }
    csv += "\n";
    for (int s = 0; s < NUM_OCTANTS; s++) {
        rows.push_back({{"octant", octant_label(s)}, {"p", nums(table.rows[s])}});
        csv += std::to_string(s) + "," + octant_label(s) + "," + fmt(table.frame.vertex_values[s]);
        for (double x : table.rows[s]) {
            csv += "," + fmt(x);
        }
        csv += "\n";
    }

    json report = header("verify", cfg, false);
    report["povm"] = povm_to_json(povm);
    report["certificate"] = certificate_json(table.frame);
    report["alphas"] = nums(table.alphas);
    report["table"] = rows;
    report["renormalization_residual"] = num(table.renormalization_residual);
    report["residuals"] = {
        {"max", num(rep.max_residual)},
        {"signal_term", num(rep.signal_term_residual)},
        {"noise_term", num(rep.noise_term_residual)},
        {"per_outcome", nums(rep.per_outcome_residual)},
        {"tolerance", DECOMPOSITION_TOL},
    };
    report["pass"] = ok;
    emit(cfg, report, csv);
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_simulate(const RunConfig &cfg) {
    QubitPovm povm = load_povm(cfg.povm_path);
    if (!(cfg.state.norm() <= 1 + EPS_POVM)) {
        throw InvalidState("state Bloch vector has norm > 1");
    }
    CondProbTable table = table_in_file_frame(povm);
    SimulationReport sim = simulate_statistics(table, cfg.state, cfg.samples, cfg.seed, cfg.workers);
    bool ok = sim.max_abs_z() <= MAX_Z;

    json outcomes = json::array();
    std::string csv = "outcome,count,empirical,born,z\n";
    for (size_t i = 0; i < povm.size(); i++) {
        json o = {{"index", i}, {"count", sim.counts[i]}, {"born", num(sim.born[i])}};
        csv += std::to_string(i) + "," + std::to_string(sim.counts[i]) + ",";
        if (sim.samples > 0) {
            o["empirical"] = num(sim.empirical[i]);
            o["z"] = std::isfinite(sim.z[i]) ? json(num(sim.z[i])) : json(sim.z[i] > 0 ? "inf" : "-inf");
            csv += fmt(sim.empirical[i]) + "," + fmt(sim.born[i]) + "," + fmt(sim.z[i]);
        } else {
            csv += "," + fmt(sim.born[i]) + ",";
        }
        csv += "\n";
        outcomes.push_back(o);
    }

    json report = header("simulate", cfg, true);
    report["state"] = vec(cfg.state);
    report["visibility"] = PARENT_VISIBILITY;
    report["outcomes"] = outcomes;
    report["max_abs_z"] = num(sim.max_abs_z());
    report["chi2"] = num(sim.chi2);
    report["chi2_dof"] = sim.chi2_dof;
    report["p_value"] = num(sim.p_value);
    report["pass"] = ok;
    emit(cfg, report, csv);
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_werner(const RunConfig &cfg) {
    QubitPovm alice = load_povm(cfg.alice_path);
    QubitPovm bob = load_povm(cfg.bob_path);
    JointDistribution quantum = werner_joint_quantum(alice, bob, Visibility(PARENT_VISIBILITY));
    JointDistribution exact = lhs_joint_exact(alice, bob);
    double deviation = exact.max_abs_diff(quantum);
    bool ok = deviation <= WERNER_TOL;

    json report = header("werner", cfg, true);
    report["eta"] = PARENT_VISIBILITY;
    report["quantum"] = joint_json(quantum);
    report["lhs_exact"] = joint_json(exact);
    report["max_deviation"] = num(deviation);

    std::optional<LhsSampleReport> mc;
    if (cfg.samples > 0) {
        mc = lhs_sample_statistics(alice, bob, cfg.samples, cfg.seed, cfg.workers);
        ok = ok && mc->p_value >= MIN_P_VALUE;
        report["empirical"] = joint_json(mc->empirical);
        report["chi2"] = num(mc->chi2);
        report["chi2_dof"] = mc->chi2_dof;
        report["p_value"] = num(mc->p_value);
    }
    report["pass"] = ok;

    std::string csv = "i,j,quantum,lhs_exact,empirical\n";
    for (size_t i = 0; i < quantum.rows; i++) {
        for (size_t j = 0; j < quantum.cols; j++) {
            csv += std::to_string(i) + "," + std::to_string(j) + "," + fmt(quantum(i, j)) + "," + fmt(exact(i, j)) +
                   "," + (mc ? fmt(mc->empirical(i, j)) : "") + "\n";
        }
    }
    emit(cfg, report, csv);
    return ok ? EXIT_OK : EXIT_CHECK_FAILED;
}

int cmd_chsh(const RunConfig &cfg) {
    Visibility eta(cfg.eta);
    ChshSettings s = optimal_chsh_settings();
    if (!cfg.settings_path.empty()) {
        std::ifstream in(cfg.settings_path);
        if (!in) {
            throw PovmParseError("cannot open " + cfg.settings_path);
        }
        json j;
        try {
            in >> j;
            auto read = [&](const char *key) {
                auto a = j.at(key).get<std::vector<double>>();
                if (a.size() != 3) {
                    throw PovmParseError(std::string(key) + ": expected three components");
                }
                return Vec3(a[0], a[1], a[2]).normalized();
            };
            s = {read("a"), read("a2"), read("b"), read("b2")};
        } catch (const nlohmann::json::exception &e) {
            throw PovmParseError(cfg.settings_path + ": " + e.what());
        } catch (const std::domain_error &e) {
            throw PovmParseError(cfg.settings_path + ": " + e.what());
        }
    }
    double value = chsh_value(s.a, s.a2, s.b, s.b2, eta);
    bool violates = value > 2;

    json report = header("chsh", cfg, false);
    report["eta"] = num(eta.value());
    report["settings"] = {{"a", vec(s.a)}, {"a2", vec(s.a2)}, {"b", vec(s.b)}, {"b2", vec(s.b2)}};
    report["value"] = num(value);
    report["local_bound"] = 2;
    report["violates"] = violates;
    emit(cfg, report, "eta,value,violates\n" + fmt(eta.value()) + "," + fmt(value) + "," +
                          (violates ? "true" : "false") + "\n");
    return EXIT_OK;
}

int cmd_random(const RunConfig &cfg) {
    if (cfg.outcomes < 2) {
        throw GenerationFailed("need at least two outcomes");
    }
    QubitPovm povm = random_povm(cfg.outcomes, cfg.seed);
    json file = povm_to_json(povm);
    try {
        povm_from_json(file);
    } catch (const PovmParseError &e) {
        throw GenerationFailed(std::string("rounded POVM no longer validates: ") + e.what());
    }
    std::string csv = "outcome,p,ax,ay,az\n";
    for (size_t i = 0; i < povm.size(); i++) {
        const Outcome &o = povm[i];
        csv += std::to_string(i) + "," + fmt(o.weight) + "," + fmt(o.direction.x) + "," + fmt(o.direction.y) + "," +
               fmt(o.direction.z) + "\n";
    }
    emit(cfg, file, csv);
    return EXIT_OK;
}

}  // namespace qubitjm::cli
