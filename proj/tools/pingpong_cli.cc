// Copyright 2026 The pingpong-eve Authors
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

// Command-line front end: verify, simulate, analyze, solve-conventions.
//
// Exit codes: 0 success, 1 a check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "pingpong/attack_models.h"
#include "pingpong/convention_solver.h"
#include "pingpong/info_analysis.h"
#include "pingpong/protocol_sim.h"
#include "pingpong/report_io.h"
#include "pingpong/verify.h"

using namespace pingpong;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout for "" and "-".
void write_output(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << content;
}

uint64_t default_seed() {
    if (const char *env = std::getenv("PINGPONG_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw UsageError(fmt::format("PINGPONG_SEED is not an unsigned integer: '{}'", env));
        }
    }
    return 0;
}

int cmd_verify(const std::string &dump_dir) {
    auto checks = run_verification_checks();
    bool ok = true;
    for (const auto &c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
        ok &= c.pass;
    }
    std::cout << fmt::format("{} of {} checks passed\n", std::count_if(checks.begin(), checks.end(), [](auto &c) {
                                 return c.pass;
                             }),
                             checks.size());
    if (!dump_dir.empty()) {
        PureState ba = attack_ba(make_initial());
        PureState ba_z = apply_polarization_gate(ba, Mode::T, pauli_z_gate());
        std::string meta = csv_metadata_block(make_metadata("verify", {{"dump_states", dump_dir}}));
        auto dump = [&](const std::string &name, const PureState &state) {
            write_output(dump_dir + "/" + name, meta + state_to_csv(state));
        };
        dump("initial.csv", make_initial());
        dump("after_ba_attack.csv", ba);
        dump("after_ab_attack_j0.csv", attack_ab(ba, false));
        dump("after_ab_attack_j1.csv", attack_ab(ba_z, false));
        dump("after_ab_attack_s_j0.csv", attack_ab(ba, true));
        dump("after_ab_attack_s_j1.csv", attack_ab(ba_z, true));
    }
    return ok ? kExitOk : kExitCheckFailed;
}

struct SimulateFlags {
    std::string scheme = "none";
    double eta = 1.0;
    double c0 = 0.5;
    double control_prob = 0.5;
    uint64_t rounds = 1000;
    std::optional<uint64_t> seed;
    std::string attack_fraction = "auto";
    bool force_s = false;
    std::string out;
    std::string stats;
};

int cmd_simulate(const SimulateFlags &flags) {
    ProtocolConfig config;
    auto scheme = parse_scheme(flags.scheme);
    if (!scheme) {
        throw UsageError("unknown scheme '" + flags.scheme + "'");
    }
    config.scheme = *scheme;
    config.eta = flags.eta;
    config.c0 = flags.c0;
    config.control_prob = flags.control_prob;
    config.rounds = flags.rounds;
    config.seed = flags.seed ? *flags.seed : default_seed();
    config.force_s = flags.force_s;
    if (flags.attack_fraction != "auto") {
        try {
            size_t used = 0;
            config.attack_fraction = std::stod(flags.attack_fraction, &used);
            if (used != flags.attack_fraction.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw UsageError("--attack-fraction must be a number or 'auto'");
        }
    }
    try {
        config.validate();
        config.resolved_attack_fraction();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }

    nlohmann::json metadata = make_metadata("simulate", config_json(config));
    std::string rounds_csv;
    RoundSink sink;
    if (!flags.out.empty()) {
        rounds_csv = csv_metadata_block(metadata) + round_csv_header();
        sink = [&](const RoundRecord &rec) { rounds_csv += round_csv_row(rec); };
    }
    RunStats stats = run_simulation(config, sink);
    if (!flags.out.empty()) {
        write_output(flags.out, rounds_csv);
    }
    std::string stats_text = run_stats_json(stats, config).dump(2) + "\n";
    write_output(flags.stats, stats_text);
    return kExitOk;
}

AttackProfile select_profile(const std::string &scheme, const std::string &profile_path) {
    if (!profile_path.empty()) {
        std::ifstream f(profile_path);
        if (!f) {
            throw UsageError("cannot read profile " + profile_path);
        }
        try {
            return profile_from_json(nlohmann::json::parse(f));
        } catch (const std::exception &e) {
            throw UsageError(fmt::format("invalid profile {}: {}", profile_path, e.what()));
        }
    }
    if (scheme == "improved") {
        return improved_profile();
    }
    if (scheme == "wojcik" || scheme == "wojcik-reference") {
        return wojcik_profile();
    }
    throw UsageError("unknown scheme '" + scheme + "' (expected improved or wojcik)");
}

int cmd_analyze(const std::string &scheme, const std::string &profile_path, size_t grid_steps,
                const std::string &curve_path, const std::string &report_path) {
    AttackProfile profile = select_profile(scheme, profile_path);
    if (grid_steps == 0) {
        throw UsageError("--grid-steps must be positive");
    }
    SecurityReport report;
    try {
        report = security_report(profile, uniform_grid(0.0, 1.0, grid_steps));
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    nlohmann::json config = {{"scheme", profile.name}, {"grid_steps", grid_steps}, {"profile", profile_json(profile)}};
    nlohmann::json metadata = make_metadata("analyze", config);
    write_output(curve_path, csv_metadata_block(metadata) + curve_csv(report.curve));
    nlohmann::json j = security_report_json(report);
    j["metadata"] = metadata;
    write_output(report_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_solve(const std::string &out) {
    auto reports = solve();
    SolveSummary s = summarize(reports);
    nlohmann::json metadata = make_metadata("solve-conventions", {{"candidates", reports.size()}});
    metadata["summary"] = {{"match", s.matches}, {"mismatch", s.mismatches}, {"invalid", s.invalid}};
    write_output(out, csv_metadata_block(metadata) + solver_csv(reports));
    std::cerr << fmt::format("{} candidates: {} match, {} mismatch, {} invalid-double-occupancy\n", reports.size(),
                             s.matches, s.mismatches, s.invalid);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Ping-pong protocol eavesdropping simulator and analyzer"};
    app.require_subcommand(1);

    std::string dump_dir;
    auto *verify = app.add_subcommand("verify", "Run every exact check and print one PASS/FAIL line per check");
    verify->add_option("--dump-states", dump_dir, "Directory to write amplitude CSVs of the attack states");

    SimulateFlags sim;
    auto *simulate = app.add_subcommand("simulate", "Monte Carlo run of the protocol");
    simulate->add_option("--scheme", sim.scheme, "none | improved | improved-symmetrized | wojcik-reference")
        ->capture_default_str();
    simulate->add_option("--eta", sim.eta, "Channel transmission efficiency")->capture_default_str();
    simulate->add_option("--c0", sim.c0, "Prior probability of message bit 0")->capture_default_str();
    simulate->add_option("--control-prob", sim.control_prob, "Probability a round is a control round")
        ->capture_default_str();
    simulate->add_option("--rounds", sim.rounds, "Number of rounds")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Seed (default: $PINGPONG_SEED or 0)");
    simulate->add_option("--attack-fraction", sim.attack_fraction, "Fraction of attacked rounds, or 'auto'")
        ->capture_default_str();
    simulate->add_flag("--force-s", sim.force_s, "Apply S on every attacked message round (improved-symmetrized)");
    simulate->add_option("--out", sim.out, "CSV file of per-round records");
    simulate->add_option("--stats", sim.stats, "JSON file of aggregate statistics (default: stdout)");

    std::string analyze_scheme = "improved";
    std::string profile_path;
    size_t grid_steps = 100;
    std::string curve_path;
    std::string report_path;
    auto *analyze = app.add_subcommand("analyze", "Information-vs-efficiency curve and insecurity bound");
    analyze->add_option("--scheme", analyze_scheme, "improved | wojcik")->capture_default_str();
    analyze->add_option("--profile", profile_path, "JSON attack profile {name, loss, i_ae, i_ab, i_be}");
    analyze->add_option("--grid-steps", grid_steps, "Number of eta intervals on [0, 1]")->capture_default_str();
    analyze->add_option("--out", curve_path, "Curve CSV (default: stdout)");
    analyze->add_option("--report", report_path, "Security report JSON (default: stdout)");

    std::string solve_out;
    auto *solve_cmd = app.add_subcommand("solve-conventions", "Search gate conventions for the attack circuit");
    solve_cmd->add_option("--out", solve_out, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(dump_dir);
        }
        if (*simulate) {
            return cmd_simulate(sim);
        }
        if (*analyze) {
            return cmd_analyze(analyze_scheme, profile_path, grid_steps, curve_path, report_path);
        }
        if (*solve_cmd) {
            return cmd_solve(solve_out);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
