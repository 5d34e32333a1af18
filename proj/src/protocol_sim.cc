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

#include "pingpong/protocol_sim.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "pingpong/attack_models.h"

namespace pingpong {

namespace {

bool in_unit_interval(double p) {
    return p >= 0.0 && p <= 1.0;
}

int bit_of(Occupation occ) {
    return occ == Occupation::Pol1 ? 1 : 0;
}

// Probability that an unattacked photon is dropped. Eve sits on a perfect
// channel and discards unattacked photons only as far as needed to reproduce
// the expected channel loss 1 - eta; without Eve this is the channel itself.
double unattacked_drop_probability(const ProtocolConfig &config, double mu) {
    if (mu >= 1.0) {
        return 0.0;
    }
    double excess = (1.0 - config.eta) - mu * scheme_loss(config.scheme);
    return std::clamp(excess / (1.0 - mu), 0.0, 1.0);
}

void run_control(RoundRecord &rec, PureState state, Rng &rng) {
    auto alice = measure_mode_polarization(state, Mode::T, rng);
    rec.alice_t_outcome = alice.outcome;
    if (alice.outcome == Occupation::Vac) {
        rec.photon_lost = true;
        return;
    }
    auto bob = measure_mode_polarization(alice.state, Mode::H, rng);
    rec.bob_h_outcome = bit_of(bob.outcome);
    rec.detection_event = bit_of(alice.outcome) == *rec.bob_h_outcome;
}

// Reference attack: only its accounting-level behaviour is modeled. Control
// rounds lose the photon with probability 1/2 and otherwise stay
// anticorrelated; message rounds follow the plain outcome table.
void run_wojcik_attacked(RoundRecord &rec, const ProtocolConfig &config, Rng &rng) {
    if (rec.mode == RoundMode::Control) {
        if (rng.bernoulli(scheme_loss(Scheme::WojcikReference))) {
            rec.alice_t_outcome = Occupation::Vac;
            rec.photon_lost = true;
            return;
        }
        int alice = rng.bernoulli(0.5) ? 1 : 0;
        rec.alice_t_outcome = polarization(alice);
        rec.bob_h_outcome = 1 - alice;
        return;
    }
    int j = *rec.j;
    JointDistribution table = exact_joint(DistributionVariant::Plain, config.c0);
    double r = rng.uniform();
    double acc = 0.0;
    int cell = 0;
    for (int c = 0; c < 4; c++) {
        double p = table.conditional(j, c / 2, c % 2);
        if (p <= 0.0) {
            continue;
        }
        cell = c;
        acc += p;
        if (r < acc) {
            break;
        }
    }
    int k = cell / 2;
    int m = cell % 2;
    rec.k = k;
    rec.m = m ? BellOutcome::PsiMinus : BellOutcome::PsiPlus;
}

}  // namespace

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::None:
            return "none";
        case Scheme::Improved:
            return "improved";
        case Scheme::ImprovedSymmetrized:
            return "improved-symmetrized";
        case Scheme::WojcikReference:
            return "wojcik-reference";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(const std::string &text) {
    for (Scheme s : {Scheme::None, Scheme::Improved, Scheme::ImprovedSymmetrized, Scheme::WojcikReference}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

double scheme_loss(Scheme scheme) {
    switch (scheme) {
        case Scheme::None:
            return 0.0;
        case Scheme::Improved:
        case Scheme::ImprovedSymmetrized:
            return improved_profile().loss;
        case Scheme::WojcikReference:
            return wojcik_profile().loss;
    }
    return 0.0;
}

double max_attack_fraction(double eta, double loss) {
    if (!in_unit_interval(eta)) {
        throw std::invalid_argument("transmission efficiency must lie in [0, 1]");
    }
    if (!(loss > 0.0 && loss <= 1.0)) {
        throw std::invalid_argument("attack loss must lie in (0, 1]");
    }
    return std::min(1.0, (1.0 - eta) / loss);
}

void ProtocolConfig::validate() const {
    if (!in_unit_interval(c0)) {
        throw std::invalid_argument("c0 must lie in [0, 1]");
    }
    if (!in_unit_interval(control_prob)) {
        throw std::invalid_argument("control probability must lie in [0, 1]");
    }
    if (!in_unit_interval(eta)) {
        throw std::invalid_argument("eta must lie in [0, 1]");
    }
    if (attack_fraction && !in_unit_interval(*attack_fraction)) {
        throw std::invalid_argument("attack fraction must lie in [0, 1]");
    }
    if (rounds < 1) {
        throw std::invalid_argument("rounds must be at least 1");
    }
}

double ProtocolConfig::resolved_attack_fraction() const {
    if (scheme == Scheme::None) {
        return 0.0;
    }
    return attack_fraction ? *attack_fraction : max_attack_fraction(eta, scheme_loss(scheme));
}

std::array<std::array<double, 4>, 2> exact_outcome_table(int j, bool apply_s, const AttackUnitary &unitary) {
    PureState state = attack_ba(make_initial(), unitary);
    if (j) {
        state = apply_polarization_gate(state, Mode::T, pauli_z_gate());
    }
    state = attack_ab(state, apply_s, unitary);
    std::array<std::array<double, 4>, 2> table{};
    for (int k = 0; k < 2; k++) {
        // Unnormalized projection onto y = k; its Bell weights are joint probabilities.
        PureState::Amplitudes projected{};
        for (size_t i = 0; i < BasisKet::kCount; i++) {
            if (BasisKet::from_index(i).y == polarization(k)) {
                projected[i] = state[i];
            }
        }
        auto bell = bell_probabilities(PureState(projected));
        for (size_t m = 0; m < 4; m++) {
            table[k][m] = bell[m];
        }
    }
    return table;
}

std::pair<double, double> exact_control_statistics(const AttackUnitary &unitary) {
    auto joint = joint_mode_probabilities(attack_ba(make_initial(), unitary), Mode::T, Mode::H);
    double no_photon = joint[0][1] + joint[0][2];
    double agree = joint[1][1] + joint[2][2];
    return {no_photon, agree};
}

std::optional<int> decoded_bit(BellOutcome m) {
    switch (m) {
        case BellOutcome::PsiPlus:
            return 0;
        case BellOutcome::PsiMinus:
            return 1;
        default:
            return std::nullopt;
    }
}

RoundRecord run_round(const ProtocolConfig &config, uint64_t round_index, Rng &rng) {
    RoundRecord rec;
    rec.round_index = round_index;
    double mu = config.resolved_attack_fraction();
    rec.attacked = rng.bernoulli(mu);
    rec.mode = rng.bernoulli(config.control_prob) ? RoundMode::Control : RoundMode::Message;
    if (rec.mode == RoundMode::Message) {
        rec.j = rng.bernoulli(1.0 - config.c0) ? 1 : 0;
    }

    if (!rec.attacked) {
        if (rng.bernoulli(unattacked_drop_probability(config, mu))) {
            rec.photon_lost = true;
            if (rec.mode == RoundMode::Control) {
                rec.alice_t_outcome = Occupation::Vac;
            } else {
                rec.m = BellOutcome::NoPhoton;
            }
            return rec;
        }
        PureState pair = make_bell_pair();
        if (rec.mode == RoundMode::Control) {
            run_control(rec, pair, rng);
            return rec;
        }
        if (*rec.j) {
            pair = apply_polarization_gate(pair, Mode::T, pauli_z_gate());
        }
        rec.m = bell_measure(pair, rng).outcome;
        return rec;
    }

    if (config.scheme == Scheme::WojcikReference) {
        run_wojcik_attacked(rec, config, rng);
        return rec;
    }

    PureState state = attack_ba(make_initial());
    if (rec.mode == RoundMode::Control) {
        run_control(rec, state, rng);
        return rec;
    }
    if (*rec.j) {
        state = apply_polarization_gate(state, Mode::T, pauli_z_gate());
    }
    if (config.scheme == Scheme::ImprovedSymmetrized) {
        rec.s_applied = config.force_s || rng.bernoulli(0.5);
    }
    state = attack_ab(state, rec.s_applied);
    auto eve = measure_mode_polarization(state, Mode::Y, rng);
    rec.k = bit_of(eve.outcome);
    rec.m = bell_measure(eve.state, rng).outcome;
    return rec;
}

RunStats run_simulation(const ProtocolConfig &config, const RoundSink &sink) {
    config.validate();
    RunStats stats;
    stats.attack_fraction = config.resolved_attack_fraction();
    Rng root(config.seed);
    for (uint64_t i = 0; i < config.rounds; i++) {
        Rng rng = root.substream(i);
        RoundRecord rec = run_round(config, i, rng);
        stats.rounds++;
        stats.attacked_rounds += rec.attacked;
        if (rec.mode == RoundMode::Control) {
            stats.control_rounds++;
            stats.control_no_photon += rec.alice_t_outcome == Occupation::Vac;
            stats.detection_events += rec.detection_event;
        } else {
            stats.message_rounds++;
            if (rec.photon_lost) {
                stats.message_lost++;
            } else if (rec.attacked) {
                stats.attacked_message_rounds++;
                stats.bit_errors += decoded_bit(*rec.m) != rec.j;
                stats.outcome_counts[rec.s_applied][*rec.j][*rec.k][static_cast<size_t>(*rec.m)]++;
            }
        }
        if (sink) {
            sink(rec);
        }
    }
    return stats;
}

namespace {

double rate(uint64_t num, uint64_t den) {
    return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

double rate_stderr(uint64_t num, uint64_t den) {
    if (den == 0) {
        return 0.0;
    }
    double p = rate(num, den);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(den));
}

}  // namespace

double RunStats::loss_rate() const {
    return rate(control_no_photon, control_rounds);
}
double RunStats::loss_rate_stderr() const {
    return rate_stderr(control_no_photon, control_rounds);
}
double RunStats::detection_rate() const {
    return rate(detection_events, control_rounds);
}
double RunStats::detection_rate_stderr() const {
    return rate_stderr(detection_events, control_rounds);
}
double RunStats::qber() const {
    return rate(bit_errors, attacked_message_rounds);
}
double RunStats::qber_stderr() const {
    return rate_stderr(bit_errors, attacked_message_rounds);
}

std::array<std::array<std::array<uint64_t, 4>, 2>, 2> RunStats::counts(std::optional<bool> s_applied) const {
    std::array<std::array<std::array<uint64_t, 4>, 2>, 2> out{};
    for (int s = 0; s < 2; s++) {
        if (s_applied && *s_applied != static_cast<bool>(s)) {
            continue;
        }
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int m = 0; m < 4; m++) {
                    out[j][k][m] += outcome_counts[s][j][k][m];
                }
            }
        }
    }
    return out;
}

namespace {

uint64_t total_for_j(const std::array<std::array<std::array<uint64_t, 4>, 2>, 2> &c, int j) {
    uint64_t n = 0;
    for (int k = 0; k < 2; k++) {
        for (int m = 0; m < 4; m++) {
            n += c[j][k][m];
        }
    }
    return n;
}

}  // namespace

double RunStats::conditional(int j, int k, int m, std::optional<bool> s_applied) const {
    auto c = counts(s_applied);
    return rate(c[j][k][m], total_for_j(c, j));
}

double RunStats::conditional_stderr(int j, int k, int m, std::optional<bool> s_applied) const {
    auto c = counts(s_applied);
    return rate_stderr(c[j][k][m], total_for_j(c, j));
}

ChiSquaredResult chi_squared_test(const std::array<std::array<std::array<uint64_t, 4>, 2>, 2> &counts,
                                  const JointDistribution &expected) {
    ChiSquaredResult out{0.0, 0, 0.0, 0, false};
    for (int j = 0; j < 2; j++) {
        uint64_t n = total_for_j(counts, j);
        if (n == 0) {
            continue;
        }
        int cells = 0;
        for (int k = 0; k < 2; k++) {
            for (int m = 0; m < 4; m++) {
                double p = m < 2 ? expected.conditional(j, k, m) : 0.0;
                double observed = static_cast<double>(counts[j][k][m]);
                if (p <= 0.0) {
                    out.forbidden_hits += counts[j][k][m];
                    continue;
                }
                double e = p * static_cast<double>(n);
                out.statistic += (observed - e) * (observed - e) / e;
                cells++;
            }
        }
        out.degrees_of_freedom += cells - 1;
    }
    if (out.degrees_of_freedom > 0) {
        boost::math::chi_squared_distribution<double> dist(out.degrees_of_freedom);
        out.critical_value = boost::math::quantile(dist, 0.999);
    }
    out.pass = out.forbidden_hits == 0 && out.statistic <= out.critical_value;
    return out;
}

}  // namespace pingpong
