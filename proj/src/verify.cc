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

#include "pingpong/verify.h"

#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "pingpong/attack_models.h"
#include "pingpong/convention_solver.h"
#include "pingpong/info_analysis.h"
#include "pingpong/protocol_sim.h"

namespace pingpong {

namespace {

using O = Occupation;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState z_travel(const PureState &s) {
    return apply_polarization_gate(s, Mode::T, pauli_z_gate());
}

PureState return_leg(int j) {
    return PureState::from_terms({
        {BasisKet{0, O::Pol1, O::Vac, polarization(j)}, kInvSqrt2},
        {BasisKet{1, O::Pol0, O::Vac, O::Pol0}, kInvSqrt2},
    });
}

PureState symmetrized_return_leg(int j) {
    return PureState::from_terms({
        {BasisKet{0, O::Pol1, O::Vac, polarization(j)}, kInvSqrt2},
        {BasisKet{1, O::Pol0, O::Vac, O::Pol1}, -kInvSqrt2},
    });
}

CheckResult state_check(const std::string &name, const PureState &got, const PureState &expected) {
    double dev = max_amplitude_difference(got, expected);
    return {name, dev <= 1e-12, fmt::format("max amplitude deviation {:.3e}", dev)};
}

CheckResult value_check(const std::string &name, double got, double expected, double tol) {
    return {name, std::abs(got - expected) <= tol, fmt::format("{:.9f} (expected {:.9f} +- {:g})", got, expected, tol)};
}

}  // namespace

std::vector<CheckResult> run_verification_checks() {
    std::vector<CheckResult> out;

    PureState initial = make_initial();
    out.push_back(state_check("initial state |Psi+>_ht|vac>_x|0>_y",
                              initial,
                              PureState::from_terms({
                                  {BasisKet{0, O::Pol1, O::Vac, O::Pol0}, kInvSqrt2},
                                  {BasisKet{1, O::Pol0, O::Vac, O::Pol0}, kInvSqrt2},
                              })));

    PureState after_ba = attack_ba(initial);
    out.push_back(state_check("Bob-to-Alice attack state = (B1+B2+B3+B4)/2", after_ba, ba_attack_state()));

    for (int j = 0; j < 2; j++) {
        PureState returned = j ? z_travel(after_ba) : after_ba;
        out.push_back(state_check(fmt::format("Alice-to-Bob attack state, j={}", j), attack_ab(returned, false),
                                  return_leg(j)));
        out.push_back(state_check(fmt::format("Alice-to-Bob attack state with S, j={}", j), attack_ab(returned, true),
                                  symmetrized_return_leg(j)));
    }

    auto [no_photon, agree] = exact_control_statistics();
    out.push_back(value_check("control mode: P(Alice sees no photon)", no_photon, 0.25, 1e-12));
    out.push_back(value_check("control mode: P(identical Alice/Bob results)", agree, 0.0, 1e-12));

    for (bool s : {false, true}) {
        auto variant = s ? DistributionVariant::Symmetrized : DistributionVariant::Plain;
        JointDistribution exact = exact_joint(variant, 0.5);
        double worst = 0.0;
        for (int j = 0; j < 2; j++) {
            auto table = exact_outcome_table(j, s);
            for (int k = 0; k < 2; k++) {
                for (int m = 0; m < 4; m++) {
                    double expected = m < 2 ? exact.conditional(j, k, m) : 0.0;
                    worst = std::max(worst, std::abs(table[k][m] - expected));
                }
            }
        }
        out.push_back({fmt::format("outcome table P(k,m|j) from the state engine, {}", to_string(variant)),
                       worst <= 1e-12, fmt::format("max deviation {:.3e}", worst)});
    }

    JointDistribution plain = exact_joint(DistributionVariant::Plain, 0.5);
    out.push_back(value_check("I_AE at c0=1/2", mutual_information(plain, InfoPair::AliceEve), 0.311278, 1e-6));
    out.push_back(value_check("I_AB at c0=1/2", mutual_information(plain, InfoPair::AliceBob), 0.311278, 1e-6));
    out.push_back(value_check("I_BE at c0=1/2", mutual_information(plain, InfoPair::BobEve), 0.073761, 1e-6));
    InformationGains mix = information_gains(DistributionVariant::FairMixture, 0.5);
    out.push_back(value_check("I_AB of the symmetrized mixture at c0=1/2", mix.i_ab, 0.188722, 1e-6));
    out.push_back(value_check("I_AE of the symmetrized mixture (Eve knows S)", mix.i_ae, 0.311278, 1e-6));
    out.push_back(value_check("QBER of the plain attack at c0=1/2", bit_error_rate(plain), 0.25, 1e-15));
    out.push_back(value_check("QBER of the symmetrized mixture at c0=1/2",
                              bit_error_rate(exact_joint(DistributionVariant::FairMixture, 0.5)), 0.25, 1e-15));

    for (auto formula : {PrintedFormula::PlainShared, PrintedFormula::SymmetrizedShared}) {
        double worst = 0.0;
        for (int i = 1; i <= 9; i++) {
            auto check = closed_form(formula, i / 10.0);
            worst = std::max(worst, std::abs(check.printed - check.brute_force));
        }
        out.push_back({fmt::format("closed form {} matches brute force on c0 in 0.1..0.9", to_string(formula)),
                       worst <= 1e-9, fmt::format("max deviation {:.3e}", worst)});
    }
    for (auto formula : {PrintedFormula::PlainBobEve, PrintedFormula::SymmetrizedBobEve}) {
        auto check = closed_form(formula, 0.5);
        bool pass = check.discrepant && std::abs(check.printed - (-0.176239)) <= 1e-6 &&
                    std::abs(check.brute_force - 0.073761) <= 1e-6;
        out.push_back({fmt::format("printed closed form {} flagged discrepant at c0=1/2", to_string(formula)), pass,
                       fmt::format("printed {:.6f} vs brute force {:.6f}", check.printed, check.brute_force)});
    }

    for (const auto &[profile, edge, eta_star] :
         {std::tuple{improved_profile(), 0.75, 0.777297}, std::tuple{wojcik_profile(), 0.5, 0.554594}}) {
        double mu_at_edge = max_attack_fraction(edge, profile.loss);
        double mu_above = max_attack_fraction(edge + 1e-6, profile.loss);
        out.push_back({fmt::format("{} full-attack domain is [0, {:.2f}]", profile.name, edge),
                       mu_at_edge == 1.0 && mu_above < 1.0,
                       fmt::format("mu({:.2f}) = {:.6f}, mu just above = {:.6f}", edge, mu_at_edge, mu_above)});
        InsecurityBound bound = insecurity_bound(profile);
        out.push_back(value_check(fmt::format("{} insecurity bound eta*", profile.name), bound.eta_star, eta_star, 1e-4));
        out.push_back(value_check(fmt::format("{} bisection mu* equals 1/(1+a-b)", profile.name), bound.mu_star,
                                  bound.closed_form_mu_star, 1e-9));
    }

    auto reports = solve();
    SolveSummary summary = summarize(reports);
    out.push_back({"convention solver covers 576 candidates", reports.size() == 576,
                   fmt::format("{} candidates: {} match, {} mismatch, {} invalid", reports.size(), summary.matches,
                               summary.mismatches, summary.invalid)});
    out.push_back({"convention solver: all-identity candidate is a mismatch",
                   !reports.empty() && reports[0].status == CandidateStatus::Mismatch,
                   reports.empty() ? "" : to_string(reports[0].status)});
    return out;
}

}  // namespace pingpong
