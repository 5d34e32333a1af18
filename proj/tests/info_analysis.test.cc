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

#include "pingpong/info_analysis.h"

#include <cmath>

#include "gtest/gtest.h"
#include "pingpong/protocol_sim.h"

using namespace pingpong;
using V = DistributionVariant;

namespace {

const double kA = 0.75 * std::log2(4.0 / 3.0);
const double kB = 0.75 * std::log2(3.0) - 1.0;

std::vector<double> prior_grid() {
    std::vector<double> out;
    for (int i = 1; i <= 9; i++) {
        out.push_back(i / 10.0);
    }
    return out;
}

// Independent oracle: I(X;Y) = H(X) + H(Y) - H(X,Y) from a 2x2 table.
double entropy_mi(const std::array<std::array<double, 2>, 2> &t) {
    auto h = [](std::initializer_list<double> ps) {
        double out = 0;
        for (double p : ps) {
            if (p > 0) {
                out -= p * std::log2(p);
            }
        }
        return out;
    };
    return h({t[0][0] + t[0][1], t[1][0] + t[1][1]}) + h({t[0][0] + t[1][0], t[0][1] + t[1][1]}) -
           h({t[0][0], t[0][1], t[1][0], t[1][1]});
}

}  // namespace

TEST(ExactJoint, plain) {
    JointDistribution d = exact_joint(V::Plain, 0.5);
    ASSERT_EQ(d.p[0][0][0], 0.5);
    ASSERT_EQ(d.p[0][0][1] + d.p[0][1][0] + d.p[0][1][1], 0.0);
    for (int k = 0; k < 2; k++) {
        for (int m = 0; m < 2; m++) {
            ASSERT_EQ(d.p[1][k][m], 0.125);
        }
    }
}

TEST(ExactJoint, symmetrized) {
    JointDistribution d = exact_joint(V::Symmetrized, 0.5);
    ASSERT_EQ(d.conditional(1, 1, 1), 1.0);
    for (int k = 0; k < 2; k++) {
        for (int m = 0; m < 2; m++) {
            ASSERT_EQ(d.conditional(0, k, m), 0.25);
        }
    }
}

TEST(ExactJoint, fair_mixture) {
    JointDistribution d = exact_joint(V::FairMixture, 0.5);
    ASSERT_DOUBLE_EQ(d.conditional(0, 0, 0), 5.0 / 8);
    ASSERT_DOUBLE_EQ(d.conditional(0, 0, 1), 1.0 / 8);
    ASSERT_DOUBLE_EQ(d.conditional(0, 1, 0), 1.0 / 8);
    ASSERT_DOUBLE_EQ(d.conditional(0, 1, 1), 1.0 / 8);
}

TEST(ExactJoint, symmetrized_is_mirrored_plain) {
    for (double c0 : prior_grid()) {
        JointDistribution a = exact_joint(V::Symmetrized, c0);
        JointDistribution b = mirrored(exact_joint(V::Plain, 1 - c0));
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int m = 0; m < 2; m++) {
                    ASSERT_NEAR(a.p[j][k][m], b.p[j][k][m], 1e-15);
                }
            }
        }
    }
}

TEST(ExactJoint, sums_to_one) {
    for (V v : {V::Plain, V::Symmetrized, V::FairMixture}) {
        for (double c0 : prior_grid()) {
            JointDistribution d = exact_joint(v, c0);
            double total = 0;
            for (const auto &a : d.p) {
                for (const auto &b : a) {
                    for (double p : b) {
                        ASSERT_GE(p, 0.0);
                        total += p;
                    }
                }
            }
            ASSERT_NEAR(total, 1.0, 1e-12);
        }
    }
}

TEST(ExactJoint, rejects_degenerate_prior) {
    ASSERT_THROW(exact_joint(V::Plain, 0.0), std::invalid_argument);
    ASSERT_THROW(exact_joint(V::Plain, 1.0), std::invalid_argument);
}

TEST(MutualInformation, reported_values) {
    JointDistribution plain = exact_joint(V::Plain, 0.5);
    ASSERT_NEAR(mutual_information(plain, InfoPair::AliceEve), 0.311278, 1e-6);
    ASSERT_NEAR(mutual_information(plain, InfoPair::AliceEve), kA, 1e-15);
    ASSERT_NEAR(mutual_information(plain, InfoPair::AliceBob), kA, 1e-15);
    ASSERT_NEAR(mutual_information(plain, InfoPair::BobEve), 0.073761, 1e-6);
    JointDistribution mix = exact_joint(V::FairMixture, 0.5);
    ASSERT_NEAR(mutual_information(mix, InfoPair::AliceBob), 0.188722, 1e-6);
    ASSERT_NEAR(mutual_information(mix, InfoPair::AliceBob), kB, 1e-15);
}

TEST(MutualInformation, matches_entropy_oracle) {
    std::array<std::array<double, 2>, 2> t{{{0.3, 0.1}, {0.05, 0.55}}};
    ASSERT_NEAR(mutual_information(t), entropy_mi(t), 1e-14);
    std::array<std::array<double, 2>, 2> independent{{{0.12, 0.28}, {0.18, 0.42}}};
    ASSERT_NEAR(mutual_information(independent), 0.0, 1e-15);
}

TEST(InformationGains, mixture_keeps_eve_information) {
    InformationGains g = information_gains(V::FairMixture, 0.5);
    ASSERT_NEAR(g.i_ae, kA, 1e-15);
    ASSERT_NEAR(g.i_ab, kB, 1e-15);
    ASSERT_NEAR(g.i_be, 0.0737613082228672, 1e-12);
}

TEST(BitErrorRate, quarter) {
    ASSERT_DOUBLE_EQ(bit_error_rate(exact_joint(V::Plain, 0.5)), 0.25);
    for (double c0 : prior_grid()) {
        ASSERT_NEAR(bit_error_rate(exact_joint(V::FairMixture, c0)), 0.25, 1e-15);
    }
}

TEST(ClosedForm, shared_forms_match_brute_force) {
    auto e6 = closed_form(PrintedFormula::PlainShared, 0.5);
    ASSERT_NEAR(e6.printed, 0.311278, 1e-6);
    ASSERT_FALSE(e6.discrepant);
    auto e11 = closed_form(PrintedFormula::SymmetrizedShared, 0.5);
    ASSERT_NEAR(e11.printed, 0.311278, 1e-6);
    ASSERT_FALSE(e11.discrepant);
    for (double c0 : prior_grid()) {
        for (auto f : {PrintedFormula::PlainShared, PrintedFormula::SymmetrizedShared}) {
            auto c = closed_form(f, c0);
            ASSERT_NEAR(c.printed, c.brute_force, 1e-9) << c0;
            ASSERT_FALSE(c.discrepant);
        }
    }
}

TEST(ClosedForm, printed_bob_eve_forms_are_flagged) {
    // Verbatim evaluation at c0 = 1/2:
    // -(3/2)log2(3/2) + (1/8)log2(1/2) + (5/8)log2(5/2) = -0.176239...
    const double printed = -1.5 * std::log2(1.5) + 0.125 * std::log2(0.5) + 0.625 * std::log2(2.5);
    for (auto f : {PrintedFormula::PlainBobEve, PrintedFormula::SymmetrizedBobEve}) {
        auto c = closed_form(f, 0.5);
        ASSERT_NEAR(c.printed, printed, 1e-12);
        ASSERT_NEAR(c.printed, -0.176239, 1e-6);
        ASSERT_NEAR(c.brute_force, 0.073761, 1e-6);
        ASSERT_TRUE(c.discrepant);
    }
}

TEST(InformationProperties, nonnegative) {
    for (V v : {V::Plain, V::Symmetrized, V::FairMixture}) {
        for (double c0 : prior_grid()) {
            JointDistribution d = exact_joint(v, c0);
            for (auto pair : {InfoPair::AliceEve, InfoPair::AliceBob, InfoPair::BobEve}) {
                ASSERT_GE(mutual_information(d, pair), 0.0);
            }
        }
    }
}

TEST(InformationProperties, bob_eve_bounded_by_alice_links) {
    for (double c0 : prior_grid()) {
        for (V v : {V::Plain, V::Symmetrized}) {
            JointDistribution d = exact_joint(v, c0);
            double ae = mutual_information(d, InfoPair::AliceEve);
            double ab = mutual_information(d, InfoPair::AliceBob);
            ASSERT_LE(mutual_information(d, InfoPair::BobEve), std::min(ae, ab) + 1e-12);
        }
        InformationGains g = information_gains(V::FairMixture, c0);
        ASSERT_LE(g.i_be, std::min(g.i_ae, g.i_ab) + 1e-12);
    }
}

TEST(InformationProperties, coin_blind_mixture_correlates_bob_and_eve) {
    // Marginalizing Eve's S coin correlates k and m beyond what flows through
    // j, so the coin-blind mixture is not a Markov chain j -> (k, m).
    JointDistribution d = exact_joint(V::FairMixture, 0.1);
    ASSERT_NEAR(mutual_information(d, InfoPair::AliceEve), 0.0700127747715597, 1e-12);
    ASSERT_NEAR(mutual_information(d, InfoPair::BobEve), 0.11347096338872664, 1e-12);
}

TEST(InformationProperties, mirror_symmetry) {
    for (double c0 : prior_grid()) {
        for (auto pair : {InfoPair::AliceEve, InfoPair::AliceBob, InfoPair::BobEve}) {
            ASSERT_NEAR(mutual_information(exact_joint(V::Plain, c0), pair),
                        mutual_information(exact_joint(V::Symmetrized, 1 - c0), pair), 1e-12);
        }
    }
}

TEST(InformationProperties, asymmetry_away_from_half) {
    double plain = mutual_information(exact_joint(V::Plain, 0.3), InfoPair::AliceEve);
    double sym = mutual_information(exact_joint(V::Symmetrized, 0.3), InfoPair::AliceEve);
    ASSERT_GT(std::abs(plain - sym), 1e-6);
}

TEST(Curve, improved_full_attack_plateau) {
    AttackProfile p = improved_profile();
    for (double eta : uniform_grid(0.0, 0.75, 75)) {
        CurvePoint c = info_at_eta(p, eta);
        ASSERT_EQ(c.mu, 1.0);
        ASSERT_NEAR(c.i_ae, 0.311278, 1e-6);
    }
    CurvePoint end = info_at_eta(p, 1.0);
    ASSERT_EQ(end.i_ae, 0.0);
    ASSERT_EQ(end.i_ab, 1.0);
}

TEST(Curve, wojcik_at_three_quarters) {
    CurvePoint c = info_at_eta(wojcik_profile(), 0.75);
    ASSERT_DOUBLE_EQ(c.mu, 0.5);
    ASSERT_NEAR(c.i_ae, 0.155639, 1e-6);
    ASSERT_NEAR(c.i_ab, 0.594361, 1e-6);
}

TEST(Curve, monotone_above_full_attack_edge) {
    for (const AttackProfile &p : {improved_profile(), wojcik_profile()}) {
        auto curve = info_vs_eta(p, uniform_grid(1 - p.loss, 1.0, 200));
        for (size_t i = 1; i < curve.size(); i++) {
            ASSERT_LT(curve[i].i_ae, curve[i - 1].i_ae);
            ASSERT_GT(curve[i].i_ab, curve[i - 1].i_ab);
        }
    }
}

TEST(Curve, rejects_out_of_range_eta) {
    std::vector<double> grid{0.5, 1.5};
    ASSERT_THROW(info_vs_eta(improved_profile(), grid), std::invalid_argument);
}

TEST(InsecurityBound, improved_and_wojcik) {
    // Frozen from mu* = 1/(1 + a - b) and a brute-force sign scan of
    // I_AE - I_AB over a 2e6-point grid on [1 - l, 1].
    InsecurityBound imp = insecurity_bound(improved_profile());
    ASSERT_NEAR(imp.closed_form_mu_star, 0.8908239573416785, 1e-12);
    ASSERT_NEAR(imp.eta_star, 0.7772940106645804, 1e-9);
    ASSERT_NEAR(imp.eta_star, 0.777297, 1e-4);
    ASSERT_NEAR(imp.mu_star, imp.closed_form_mu_star, 1e-9);

    InsecurityBound woj = insecurity_bound(wojcik_profile());
    ASSERT_NEAR(woj.eta_star, 0.5545880213291607, 1e-9);
    ASSERT_NEAR(woj.eta_star, 0.554594, 1e-4);
    ASSERT_NEAR(woj.mu_star, woj.closed_form_mu_star, 1e-9);
}

TEST(InsecurityBound, synthetic_profile) {
    AttackProfile p{"synthetic", 0.25, 1.0, 0.0, 0.0};
    InsecurityBound b = insecurity_bound(p);
    ASSERT_NEAR(b.mu_star, 0.5, 1e-9);
    ASSERT_NEAR(b.eta_star, 7.0 / 8, 1e-9);
}

TEST(InsecurityBound, requires_information_advantage) {
    AttackProfile p{"weak", 0.25, 0.1, 0.2, 0.0};
    ASSERT_THROW(insecurity_bound(p), std::invalid_argument);
}

TEST(SecurityReport, fields) {
    auto r = security_report(improved_profile(), uniform_grid(0, 1, 100));
    ASSERT_EQ(r.scheme, "improved");
    ASSERT_EQ(r.full_attack_edge, 0.75);
    ASSERT_GE(r.eta_star, r.full_attack_edge);
    ASSERT_EQ(r.curve.size(), 101u);
}
