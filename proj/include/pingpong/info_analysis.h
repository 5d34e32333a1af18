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

#ifndef PINGPONG_INFO_ANALYSIS_H
#define PINGPONG_INFO_ANALYSIS_H

#include <array>
#include <span>
#include <string>
#include <vector>

#include "pingpong/attack_models.h"

namespace pingpong {

/// Which attacked-message statistics to use: without S, with S always
/// applied, or the fair coin mixture of the two.
enum class DistributionVariant : uint8_t { Plain, Symmetrized, FairMixture };
std::string to_string(DistributionVariant variant);

/// Exact joint distribution over Alice's bit j, Eve's probe bit k and Bob's
/// decoded bit m (0 for Psi+, 1 for Psi-), with prior P(j=0) = c0.
struct JointDistribution {
    double c0 = 0.5;
    /// p[j][k][m], summing to 1.
    std::array<std::array<std::array<double, 2>, 2>, 2> p{};

    double conditional(int j, int k, int m) const;
    double prior(int j) const {
        return j ? 1.0 - c0 : c0;
    }
};

/// Throws std::invalid_argument unless 0 < c0 < 1.
JointDistribution exact_joint(DistributionVariant variant, double c0);

/// Mirrors a distribution: relabels 0 <-> 1 in j, k and m.
JointDistribution mirrored(const JointDistribution &dist);

enum class InfoPair : uint8_t { AliceEve, AliceBob, BobEve };

/// I(X;Y) in bits from a 2x2 joint table; zero cells contribute nothing.
double mutual_information(const std::array<std::array<double, 2>, 2> &joint);
double mutual_information(const JointDistribution &dist, InfoPair pair);

/// P(m != j).
double bit_error_rate(const JointDistribution &dist);

struct InformationGains {
    double i_ae;
    double i_ab;
    double i_be;
};

/// Per-attacked-bit information. For the fair mixture, Eve knows which rounds
/// received S, so her quantities (AE, BE) average the per-branch values; Bob
/// does not, so AB is taken from the unconditioned mixture.
InformationGains information_gains(DistributionVariant variant, double c0);

/// Closed forms exactly as they were published for the attacked-bit statistics.
enum class PrintedFormula : uint8_t {
    PlainShared,          // I_AE = I_AB without S
    PlainBobEve,          // I_BE without S
    SymmetrizedShared,    // I_AE = I_AB with S
    SymmetrizedBobEve,    // I_BE with S
};
std::string to_string(PrintedFormula formula);

struct ClosedFormCheck {
    double printed;
    double brute_force;
    /// |printed - brute_force| > 1e-9.
    bool discrepant;
};

/// Evaluates the published formula verbatim and compares it with the
/// brute-force mutual information of the matching variant and pair.
ClosedFormCheck closed_form(PrintedFormula formula, double c0);

struct CurvePoint {
    double eta;
    double mu;
    double i_ae;
    double i_ab;
    double i_be;
};

/// Information per transmitted bit as a function of channel efficiency.
/// Eve attacks the largest undetectable fraction; unattacked bits carry one
/// full bit to Bob and nothing to Eve (a linear model that overstates I_AB's
/// growth, which is accepted).
CurvePoint info_at_eta(const AttackProfile &profile, double eta);
std::vector<CurvePoint> info_vs_eta(const AttackProfile &profile, std::span<const double> etas);

/// `steps` + 1 evenly spaced points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, size_t steps);

struct InsecurityBound {
    /// Efficiency below which I_AE >= I_AB, found by bisection.
    double eta_star;
    double mu_star;
    /// mu* = 1/(1 + a - b), eta* = 1 - mu* l.
    double closed_form_mu_star;
    double closed_form_eta_star;
};

/// Throws std::invalid_argument when the profile's i_ae <= i_ab.
InsecurityBound insecurity_bound(const AttackProfile &profile);

struct SecurityReport {
    std::string scheme;
    /// Largest efficiency at which every bit can be attacked: 1 - l.
    double full_attack_edge;
    double eta_star;
    double mu_star;
    std::vector<CurvePoint> curve;
};

SecurityReport security_report(const AttackProfile &profile, std::span<const double> etas);

}  // namespace pingpong

#endif
