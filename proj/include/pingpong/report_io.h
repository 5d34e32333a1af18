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

#ifndef PINGPONG_REPORT_IO_H
#define PINGPONG_REPORT_IO_H

#include <string>
#include <vector>

#include "json.hpp"
#include "pingpong/attack_models.h"
#include "pingpong/convention_solver.h"
#include "pingpong/info_analysis.h"
#include "pingpong/protocol_sim.h"

namespace pingpong {

inline constexpr const char *kVersion = "0.1.0";

/// {"tool", "version", "command", "config", "seed"}; seed is null for unseeded commands.
nlohmann::json make_metadata(const std::string &command, const nlohmann::json &config);

/// Metadata as leading "# key: value" comment lines for CSV outputs.
std::string csv_metadata_block(const nlohmann::json &metadata);

nlohmann::json config_json(const ProtocolConfig &config);

std::string round_csv_header();
std::string round_csv_row(const RoundRecord &rec);

nlohmann::json run_stats_json(const RunStats &stats, const ProtocolConfig &config);

/// Header eta,mu,i_ae,i_ab,i_be; values with 9 decimal places.
std::string curve_csv(const std::vector<CurvePoint> &curve);

nlohmann::json security_report_json(const SecurityReport &report);

/// Header candidate_id,sigma0,sigma1,flip0,flip1,control_position,active_on,status,deviation.
std::string solver_csv(const std::vector<CandidateReport> &reports);

nlohmann::json profile_json(const AttackProfile &profile);
/// Throws nlohmann::json::exception on missing fields, std::invalid_argument on out-of-range values.
AttackProfile profile_from_json(const nlohmann::json &j);

}  // namespace pingpong

#endif
