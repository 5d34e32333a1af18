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

#ifndef PINGPONG_PROTOCOL_SIM_H
#define PINGPONG_PROTOCOL_SIM_H

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "pingpong/attack_models.h"
#include "pingpong/info_analysis.h"
#include "pingpong/rng.h"
#include "pingpong/state_engine.h"

namespace pingpong {

enum class Scheme : uint8_t { None, Improved, ImprovedSymmetrized, WojcikReference };
std::string to_string(Scheme scheme);
/// Parses "none", "improved", "improved-symmetrized", "wojcik-reference".
std::optional<Scheme> parse_scheme(const std::string &text);
/// Per-attacked-bit loss of the scheme's attack; 0 for Scheme::None.
double scheme_loss(Scheme scheme);

/// Largest fraction of rounds Eve can attack while her losses stay hidden in
/// the channel's: min(1, (1 - eta)/loss). Eve replaces the lossy channel by a
/// perfect one, so the observed loss is mu * loss.
double max_attack_fraction(double eta, double loss);

struct ProtocolConfig {
    double c0 = 0.5;
    double control_prob = 0.5;
    double eta = 1.0;
    Scheme scheme = Scheme::None;
    /// nullopt means auto: max_attack_fraction(eta, loss).
    std::optional<double> attack_fraction;
    uint64_t rounds = 1000;
    uint64_t seed = 0;
    /// Improved-symmetrized only: apply S on every attacked message round
    /// instead of on a fair coin.
    bool force_s = false;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
    /// Attack fraction actually used; 0 when scheme is None.
    double resolved_attack_fraction() const;
};

enum class RoundMode : uint8_t { Control, Message };

struct RoundRecord {
    uint64_t round_index = 0;
    RoundMode mode = RoundMode::Control;
    bool attacked = false;
    /// Eve applied S this round (her recorded coin).
    bool s_applied = false;
    std::optional<int> j;
    std::optional<int> k;
    std::optional<BellOutcome> m;
    std::optional<Occupation> alice_t_outcome;
    std::optional<int> bob_h_outcome;
    bool photon_lost = false;
    /// Control round where Alice and Bob both hold a photon and their results agree.
    bool detection_event = false;
};

/// Runs one round with its own random stream.
RoundRecord run_round(const ProtocolConfig &config, uint64_t round_index, Rng &rng);

/// Counts over attacked, photon-present message rounds, indexed [s_applied][j][k][m].
using OutcomeCounts = std::array<std::array<std::array<std::array<uint64_t, 4>, 2>, 2>, 2>;

struct RunStats {
    uint64_t rounds = 0;
    uint64_t control_rounds = 0;
    uint64_t message_rounds = 0;
    uint64_t attacked_rounds = 0;
    double attack_fraction = 0.0;
    /// Control rounds in which Alice found no photon.
    uint64_t control_no_photon = 0;
    uint64_t detection_events = 0;
    /// Message rounds discarded because the photon never reached Bob.
    uint64_t message_lost = 0;
    uint64_t attacked_message_rounds = 0;
    /// Attacked message rounds decoded with m != j.
    uint64_t bit_errors = 0;
    OutcomeCounts outcome_counts{};

    double loss_rate() const;
    double loss_rate_stderr() const;
    double detection_rate() const;
    double detection_rate_stderr() const;
    double qber() const;
    double qber_stderr() const;

    /// Counts [j][k][m] summed over the S coin, or restricted to one coin value.
    std::array<std::array<std::array<uint64_t, 4>, 2>, 2> counts(std::optional<bool> s_applied = std::nullopt) const;
    /// Empirical P(k, m | j) over attacked message rounds; m indexes BellOutcome.
    double conditional(int j, int k, int m, std::optional<bool> s_applied = std::nullopt) const;
    double conditional_stderr(int j, int k, int m, std::optional<bool> s_applied = std::nullopt) const;
};

using RoundSink = std::function<void(const RoundRecord &)>;

/// Round i draws from Rng(config.seed).substream(i), so results do not depend
/// on execution order.
RunStats run_simulation(const ProtocolConfig &config, const RoundSink &sink = {});

struct ChiSquaredResult {
    double statistic;
    int degrees_of_freedom;
    /// 99.9% quantile of the chi-squared distribution with those degrees of freedom.
    double critical_value;
    /// Observed counts in cells the exact distribution forbids.
    uint64_t forbidden_hits;
    bool pass;
};

/// Goodness of fit of the per-j empirical (k, m) counts against the exact
/// conditionals. Cells with zero expected probability must stay empty.
ChiSquaredResult chi_squared_test(const std::array<std::array<std::array<uint64_t, 4>, 2>, 2> &counts,
                                  const JointDistribution &expected);

/// Exact P(k, m | j) of an attacked message round computed from the quantum
/// state: Eve's probe measurement k followed by Bob's Bell measurement m
/// (indexed by BellOutcome, NoPhoton excluded).
std::array<std::array<double, 4>, 2> exact_outcome_table(int j, bool apply_s,
                                                          const AttackUnitary &unitary = AttackUnitary::reference());

/// Exact (P(Alice finds no photon), P(Alice and Bob agree)) for an attacked control round.
std::pair<double, double> exact_control_statistics(const AttackUnitary &unitary = AttackUnitary::reference());

/// Bell outcome decoded as a message bit: Psi+ -> 0, Psi- -> 1, otherwise nullopt.
std::optional<int> decoded_bit(BellOutcome m);

}  // namespace pingpong

#endif
