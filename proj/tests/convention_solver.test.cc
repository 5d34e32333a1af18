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

#include "pingpong/convention_solver.h"

#include <cmath>
#include <set>
#include <tuple>

#include "gtest/gtest.h"
#include "pingpong/protocol_sim.h"
#include "pingpong/report_io.h"

using namespace pingpong;
using O = Occupation;

namespace {

auto key(const Convention &c) {
    return std::tuple{c.cpbs.sigma0, c.cpbs.sigma1, c.cpbs.flip0, c.cpbs.flip1, c.cnot.control, c.cnot.active_on};
}

void expect_same_downstream(const AttackUnitary &candidate) {
    for (int j = 0; j < 2; j++) {
        for (bool s : {false, true}) {
            auto a = exact_outcome_table(j, s, candidate);
            auto b = exact_outcome_table(j, s);
            for (int k = 0; k < 2; k++) {
                for (int m = 0; m < 4; m++) {
                    ASSERT_NEAR(a[k][m], b[k][m], 1e-10);
                }
            }
        }
    }
    auto [lost, agree] = exact_control_statistics(candidate);
    ASSERT_NEAR(lost, 0.25, 1e-10);
    ASSERT_NEAR(agree, 0.0, 1e-10);
}

}  // namespace

TEST(ConventionSolver, enumeration) {
    auto all = enumerate_conventions();
    ASSERT_EQ(all.size(), 576u);
    Convention first = all.front();
    ASSERT_EQ(first.cpbs.sigma0, (Permutation3{0, 1, 2}));
    ASSERT_EQ(first.cpbs.sigma1, (Permutation3{0, 1, 2}));
    ASSERT_FALSE(first.cpbs.flip0);
    ASSERT_FALSE(first.cpbs.flip1);
    ASSERT_EQ(first.cnot.control, ControlPosition::FirstIndex);
    ASSERT_EQ(first.cnot.active_on, O::Pol1);
    std::set<decltype(key(first))> distinct;
    for (const auto &c : all) {
        distinct.insert(key(c));
    }
    ASSERT_EQ(distinct.size(), 576u);
}

TEST(ConventionSolver, permutation_labels) {
    ASSERT_EQ(permutation_label({0, 1, 2}), "abc");
    ASSERT_EQ(permutation_label({2, 1, 0}), "cba");
}

TEST(ConventionSolver, circuit_order) {
    std::vector<std::string> labels;
    for (const auto &s : attack_circuit()) {
        labels.push_back(s.label());
    }
    ASSERT_EQ(labels, (std::vector<std::string>{"H_y", "C_txy", "N_ty", "C_ytx", "N_xy"}));
}

TEST(ConventionSolver, first_stage_is_hadamard_on_probe) {
    BasisKet f1 = attack_domain_kets()[0];
    for (const auto &conv : enumerate_conventions()) {
        StageResult r = apply_stage(PureState::basis(f1), attack_circuit()[0], conv);
        ASSERT_FALSE(r.collision);
        ASSERT_NEAR(r.state[f1].real(), 1 / std::sqrt(2.0), 1e-15);
        ASSERT_NEAR(r.state[f1.with(Mode::Y, O::Pol1)].real(), 1 / std::sqrt(2.0), 1e-15);
    }
}

TEST(ConventionSolver, identity_routing_leaves_travel_photon) {
    Convention identity = enumerate_conventions().front();
    CandidateTrace trace = compose_candidate(identity);
    ASSERT_TRUE(trace.valid);
    // Hand trace on f1: H_y gives y in (0 + 1); C stages do nothing; N_ty
    // flips y; N_xy is idle with x empty. The t photon never leaves.
    for (const auto &k : trace.images[0].support()) {
        ASSERT_EQ(k.t, O::Pol1);
        ASSERT_EQ(k.x, O::Vac);
    }
    ASSERT_EQ(solve()[0].status, CandidateStatus::Mismatch);
}

TEST(ConventionSolver, swap_ac_on_pol1_collides) {
    Convention c;
    c.cpbs.sigma1 = {2, 1, 0};
    CandidateTrace trace = compose_candidate(c);
    ASSERT_FALSE(trace.valid);
    ASSERT_EQ(trace.invalid_input, 0u);
    ASSERT_EQ(trace.invalid_stage, 1u);
    ASSERT_EQ(trace.invalid_ket, (BasisKet{0, O::Pol1, O::Vac, O::Pol0}));
    ASSERT_FALSE(route_cpbs(trace.invalid_ket, {Mode::T, Mode::X, Mode::Y}, c.cpbs));
}

TEST(ConventionSolver, route_cpbs_moves_and_flips) {
    CpbsConvention c;
    c.sigma0 = {1, 0, 2};
    c.flip0 = true;
    auto out = route_cpbs(BasisKet{1, O::Pol0, O::Vac, O::Pol1}, {Mode::T, Mode::X, Mode::Y}, c);
    ASSERT_TRUE(out);
    ASSERT_EQ(*out, (BasisKet{1, O::Vac, O::Pol1, O::Pol1}));
}

TEST(ConventionSolver, invalid_reports_replay_to_a_collision) {
    auto conventions = enumerate_conventions();
    for (const auto &r : solve()) {
        if (r.status != CandidateStatus::InvalidDoubleOccupancy) {
            ASSERT_TRUE(r.deviation);
            ASSERT_GE(*r.deviation, 0.0);
            ASSERT_EQ(r.status == CandidateStatus::Match, *r.deviation <= kMatchTolerance);
            continue;
        }
        ASSERT_FALSE(r.deviation);
        CandidateTrace trace = compose_candidate(conventions[r.id]);
        ASSERT_FALSE(trace.valid);
        PureState s = PureState::basis(attack_domain_kets()[trace.invalid_input]);
        for (size_t k = 0; k < trace.invalid_stage; k++) {
            s = apply_stage(s, attack_circuit()[k], conventions[r.id]).state;
        }
        ASSERT_GT(std::abs(s[trace.invalid_ket]), 1e-14);
        const auto &stage = attack_circuit()[trace.invalid_stage];
        ASSERT_EQ(stage.kind, CircuitStage::Kind::Cpbs);
        ASSERT_FALSE(route_cpbs(trace.invalid_ket, stage.modes, conventions[r.id].cpbs));
    }
}

TEST(ConventionSolver, deterministic_reports) {
    ASSERT_EQ(solver_csv(solve()), solver_csv(solve()));
    SolveSummary s = summarize(solve());
    ASSERT_EQ(s.matches + s.mismatches + s.invalid, 576u);
}

TEST(ConventionSolver, matches_substitute_cleanly) {
    auto conventions = enumerate_conventions();
    for (const auto &r : solve()) {
        if (r.status != CandidateStatus::Match) {
            continue;
        }
        expect_same_downstream(AttackUnitary::from_images(compose_candidate(conventions[r.id]).images));
    }
}

TEST(ConventionSolver, phase_rotated_reference_matches_and_substitutes) {
    auto images = AttackUnitary::reference().images();
    Amplitude phase = std::polar(1.0, 0.7);
    for (auto &im : images) {
        im = im * phase;
    }
    ASSERT_LT(phase_aligned_deviation(images, AttackUnitary::reference().images()), 1e-15);
    expect_same_downstream(AttackUnitary::from_images(images));
}

TEST(ConventionSolver, finds_a_planted_candidate) {
    // Use one valid candidate's own images as the reference; the solver must
    // then report that candidate (and anything equivalent) as a match.
    auto conventions = enumerate_conventions();
    for (size_t id = 0; id < conventions.size(); id++) {
        CandidateTrace trace = compose_candidate(conventions[id]);
        if (!trace.valid) {
            continue;
        }
        auto reports = solve(AttackUnitary::from_images(trace.images));
        ASSERT_EQ(reports[id].status, CandidateStatus::Match);
        ASSERT_GE(summarize(reports).matches, 1u);
        return;
    }
    FAIL() << "no valid candidate";
}
