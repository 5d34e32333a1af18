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

#include "pingpong/report_io.h"

#include <stdexcept>

#include <fmt/format.h>

namespace pingpong {

namespace {

template <typename T>
std::string optional_field(const std::optional<T> &value) {
    return value ? fmt::format("{}", *value) : std::string();
}

}  // namespace

nlohmann::json make_metadata(const std::string &command, const nlohmann::json &config) {
    nlohmann::json meta = {
        {"tool", "pingpong"},
        {"version", kVersion},
        {"command", command},
        {"config", config},
    };
    meta["seed"] = config.contains("seed") ? config["seed"] : nlohmann::json(nullptr);
    return meta;
}

std::string csv_metadata_block(const nlohmann::json &metadata) {
    std::string out;
    for (const auto &[key, value] : metadata.items()) {
        out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

nlohmann::json config_json(const ProtocolConfig &config) {
    nlohmann::json j = {
        {"scheme", to_string(config.scheme)},
        {"eta", config.eta},
        {"c0", config.c0},
        {"control_prob", config.control_prob},
        {"rounds", config.rounds},
        {"seed", config.seed},
        {"force_s", config.force_s},
        {"attack_fraction_resolved", config.resolved_attack_fraction()},
    };
    if (config.attack_fraction) {
        j["attack_fraction"] = *config.attack_fraction;
    } else {
        j["attack_fraction"] = "auto";
    }
    return j;
}

std::string round_csv_header() {
    return "round_index,mode,attacked,s_applied,j,k,m,alice_t_outcome,bob_h_outcome,photon_lost,detection_event\n";
}

std::string round_csv_row(const RoundRecord &rec) {
    return fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
                       rec.round_index,
                       rec.mode == RoundMode::Control ? "control" : "message",
                       int(rec.attacked),
                       int(rec.s_applied),
                       optional_field(rec.j),
                       optional_field(rec.k),
                       rec.m ? to_string(*rec.m) : "",
                       rec.alice_t_outcome ? to_string(*rec.alice_t_outcome) : "",
                       optional_field(rec.bob_h_outcome),
                       int(rec.photon_lost),
                       int(rec.detection_event));
}

nlohmann::json run_stats_json(const RunStats &stats, const ProtocolConfig &config) {
    nlohmann::json table = nlohmann::json::array();
    auto counts = stats.counts();
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            for (int m = 0; m < 4; m++) {
                table.push_back({
                    {"j", j},
                    {"k", k},
                    {"m", to_string(static_cast<BellOutcome>(m))},
                    {"count", counts[j][k][m]},
                    {"p", stats.conditional(j, k, m)},
                    {"stderr", stats.conditional_stderr(j, k, m)},
                });
            }
        }
    }
    return {
        {"metadata", make_metadata("simulate", config_json(config))},
        {"rounds", stats.rounds},
        {"control_rounds", stats.control_rounds},
        {"message_rounds", stats.message_rounds},
        {"attacked_rounds", stats.attacked_rounds},
        {"attack_fraction", stats.attack_fraction},
        {"control_no_photon", stats.control_no_photon},
        {"loss_rate", stats.loss_rate()},
        {"loss_rate_stderr", stats.loss_rate_stderr()},
        {"detection_events", stats.detection_events},
        {"detection_rate", stats.detection_rate()},
        {"detection_rate_stderr", stats.detection_rate_stderr()},
        {"message_lost", stats.message_lost},
        {"attacked_message_rounds", stats.attacked_message_rounds},
        {"bit_errors", stats.bit_errors},
        {"qber", stats.qber()},
        {"qber_stderr", stats.qber_stderr()},
        {"outcome_table", table},
    };
}

std::string curve_csv(const std::vector<CurvePoint> &curve) {
    std::string out = "eta,mu,i_ae,i_ab,i_be\n";
    for (const auto &p : curve) {
        out += fmt::format("{:.9f},{:.9f},{:.9f},{:.9f},{:.9f}\n", p.eta, p.mu, p.i_ae, p.i_ab, p.i_be);
    }
    return out;
}

nlohmann::json security_report_json(const SecurityReport &report) {
    return {
        {"scheme", report.scheme},
        {"full_attack_edge", report.full_attack_edge},
        {"eta_star", report.eta_star},
        {"mu_star", report.mu_star},
    };
}

std::string solver_csv(const std::vector<CandidateReport> &reports) {
    std::string out = "candidate_id,sigma0,sigma1,flip0,flip1,control_position,active_on,status,deviation\n";
    for (const auto &r : reports) {
        const auto &c = r.convention;
        out += fmt::format("{},{},{},{},{},{},{},{},{}\n",
                           r.id,
                           permutation_label(c.cpbs.sigma0),
                           permutation_label(c.cpbs.sigma1),
                           int(c.cpbs.flip0),
                           int(c.cpbs.flip1),
                           c.cnot.control == ControlPosition::FirstIndex ? "first-index" : "second-index",
                           c.cnot.active_on == Occupation::Pol1 ? "pol1" : "pol0",
                           to_string(r.status),
                           r.deviation ? fmt::format("{:.12e}", *r.deviation) : std::string());
    }
    return out;
}

nlohmann::json profile_json(const AttackProfile &p) {
    return {{"name", p.name}, {"loss", p.loss}, {"i_ae", p.i_ae}, {"i_ab", p.i_ab}, {"i_be", p.i_be}};
}

AttackProfile profile_from_json(const nlohmann::json &j) {
    AttackProfile p{
        j.at("name").get<std::string>(),
        j.at("loss").get<double>(),
        j.at("i_ae").get<double>(),
        j.at("i_ab").get<double>(),
        j.at("i_be").get<double>(),
    };
    for (double v : {p.loss, p.i_ae, p.i_ab, p.i_be}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("profile values must lie in [0, 1]");
        }
    }
    return p;
}

}  // namespace pingpong
