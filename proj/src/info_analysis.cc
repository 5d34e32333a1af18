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
#include <stdexcept>

#include "pingpong/protocol_sim.h"

namespace pingpong {

namespace {

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

void require_valid_prior(double c0) {
    if (!(c0 > 0.0 && c0 < 1.0)) {
        throw std::invalid_argument("prior c0 must lie strictly between 0 and 1");
    }
}

// P(k,m|j) of the plain attack: j=0 always gives (0,0); j=1 is uniform.
double plain_conditional(int j, int k, int m) {
    if (j == 0) {
        return k == 0 && m == 0 ? 1.0 : 0.0;
    }
    return 0.25;
}

}  // namespace

std::string to_string(DistributionVariant variant) {
    switch (variant) {
        case DistributionVariant::Plain:
            return "plain";
        case DistributionVariant::Symmetrized:
            return "symmetrized";
        case DistributionVariant::FairMixture:
            return "fair-mixture";
    }
    return "?";
}

double JointDistribution::conditional(int j, int k, int m) const {
    return p[j][k][m] / prior(j);
}

JointDistribution exact_joint(DistributionVariant variant, double c0) {
    require_valid_prior(c0);
    JointDistribution d;
    d.c0 = c0;
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            for (int m = 0; m < 2; m++) {
                double plain = plain_conditional(j, k, m);
                double sym = plain_conditional(1 - j, 1 - k, 1 - m);
                double cond = 0.0;
                switch (variant) {
                    case DistributionVariant::Plain:
                        cond = plain;
                        break;
                    case DistributionVariant::Symmetrized:
                        cond = sym;
                        break;
                    case DistributionVariant::FairMixture:
                        cond = 0.5 * (plain + sym);
                        break;
                }
                d.p[j][k][m] = d.prior(j) * cond;
            }
        }
    }
    return d;
}

JointDistribution mirrored(const JointDistribution &dist) {
    JointDistribution out;
    out.c0 = 1.0 - dist.c0;
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            for (int m = 0; m < 2; m++) {
                out.p[j][k][m] = dist.p[1 - j][1 - k][1 - m];
            }
        }
    }
    return out;
}

double mutual_information(const std::array<std::array<double, 2>, 2> &joint) {
    std::array<double, 2> px{joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
    std::array<double, 2> py{joint[0][0] + joint[1][0], joint[0][1] + joint[1][1]};
    double total = 0.0;
    for (size_t x = 0; x < 2; x++) {
        for (size_t y = 0; y < 2; y++) {
            double pxy = joint[x][y];
            if (pxy > 0.0) {
                total += pxy * std::log2(pxy / (px[x] * py[y]));
            }
        }
    }
    return total;
}

double mutual_information(const JointDistribution &dist, InfoPair pair) {
    std::array<std::array<double, 2>, 2> joint{};
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            for (int m = 0; m < 2; m++) {
                double p = dist.p[j][k][m];
                switch (pair) {
                    case InfoPair::AliceEve:
                        joint[j][k] += p;
                        break;
                    case InfoPair::AliceBob:
                        joint[j][m] += p;
                        break;
                    case InfoPair::BobEve:
                        joint[m][k] += p;
                        break;
                }
            }
        }
    }
    return mutual_information(joint);
}

double bit_error_rate(const JointDistribution &dist) {
    double err = 0.0;
    for (int j = 0; j < 2; j++) {
        for (int k = 0; k < 2; k++) {
            err += dist.p[j][k][1 - j];
        }
    }
    return err;
}

InformationGains information_gains(DistributionVariant variant, double c0) {
    auto gains_of = [](const JointDistribution &d) {
        return InformationGains{
            mutual_information(d, InfoPair::AliceEve),
            mutual_information(d, InfoPair::AliceBob),
            mutual_information(d, InfoPair::BobEve),
        };
    };
    if (variant != DistributionVariant::FairMixture) {
        return gains_of(exact_joint(variant, c0));
    }
    InformationGains plain = gains_of(exact_joint(DistributionVariant::Plain, c0));
    InformationGains sym = gains_of(exact_joint(DistributionVariant::Symmetrized, c0));
    return InformationGains{
        0.5 * (plain.i_ae + sym.i_ae),
        mutual_information(exact_joint(DistributionVariant::FairMixture, c0), InfoPair::AliceBob),
        0.5 * (plain.i_be + sym.i_be),
    };
}

std::string to_string(PrintedFormula formula) {
    switch (formula) {
        case PrintedFormula::PlainShared:
            return "plain-shared";
        case PrintedFormula::PlainBobEve:
            return "plain-bob-eve";
        case PrintedFormula::SymmetrizedShared:
            return "symmetrized-shared";
        case PrintedFormula::SymmetrizedBobEve:
            return "symmetrized-bob-eve";
    }
    return "?";
}

ClosedFormCheck closed_form(PrintedFormula formula, double c0) {
    require_valid_prior(c0);
    double printed = 0.0;
    double brute = 0.0;
    switch (formula) {
        case PrintedFormula::PlainShared:
            printed = c0 - 0.5 * (xlog2x(1 - c0) + xlog2x(1 + c0));
            brute = mutual_information(exact_joint(DistributionVariant::Plain, c0), InfoPair::AliceEve);
            break;
        case PrintedFormula::PlainBobEve:
            printed = -xlog2x(1 + c0) + 0.25 * xlog2x(1 - c0) + 0.25 * xlog2x(1 + 3 * c0);
            brute = mutual_information(exact_joint(DistributionVariant::Plain, c0), InfoPair::BobEve);
            break;
        case PrintedFormula::SymmetrizedShared:
            printed = 1 - c0 - 0.5 * (xlog2x(c0) + xlog2x(2 - c0));
            brute = mutual_information(exact_joint(DistributionVariant::Symmetrized, c0), InfoPair::AliceEve);
            break;
        case PrintedFormula::SymmetrizedBobEve:
            printed = -xlog2x(2 - c0) + 0.25 * xlog2x(c0) + 0.25 * xlog2x(4 - 3 * c0);
            brute = mutual_information(exact_joint(DistributionVariant::Symmetrized, c0), InfoPair::BobEve);
            break;
    }
    return {printed, brute, std::abs(printed - brute) > 1e-9};
}

CurvePoint info_at_eta(const AttackProfile &profile, double eta) {
    double mu = max_attack_fraction(eta, profile.loss);
    return CurvePoint{
        eta,
        mu,
        mu * profile.i_ae,
        (1.0 - mu) + mu * profile.i_ab,
        mu * profile.i_be,
    };
}

std::vector<CurvePoint> info_vs_eta(const AttackProfile &profile, std::span<const double> etas) {
    std::vector<CurvePoint> out;
    out.reserve(etas.size());
    for (double eta : etas) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("transmission efficiency must lie in [0, 1]");
        }
        out.push_back(info_at_eta(profile, eta));
    }
    return out;
}

std::vector<double> uniform_grid(double lo, double hi, size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("grid needs at least one step");
    }
    std::vector<double> out(steps + 1);
    for (size_t i = 0; i <= steps; i++) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps);
    }
    out[steps] = hi;
    return out;
}

InsecurityBound insecurity_bound(const AttackProfile &profile) {
    if (!(profile.i_ae > profile.i_ab)) {
        throw std::invalid_argument("no insecurity crossing: attack must gain more than it leaves (i_ae > i_ab)");
    }
    auto gap = [&](double eta) {
        CurvePoint p = info_at_eta(profile, eta);
        return p.i_ae - p.i_ab;
    };
    // gap > 0 at the full-attack edge and gap = -1 at eta = 1.
    double lo = 1.0 - profile.loss;
    double hi = 1.0;
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (gap(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    InsecurityBound out;
    out.eta_star = 0.5 * (lo + hi);
    out.mu_star = max_attack_fraction(out.eta_star, profile.loss);
    out.closed_form_mu_star = 1.0 / (1.0 + profile.i_ae - profile.i_ab);
    out.closed_form_eta_star = 1.0 - out.closed_form_mu_star * profile.loss;
    return out;
}

SecurityReport security_report(const AttackProfile &profile, std::span<const double> etas) {
    InsecurityBound bound = insecurity_bound(profile);
    return SecurityReport{
        profile.name, 1.0 - profile.loss, bound.eta_star, bound.mu_star, info_vs_eta(profile, etas),
    };
}

}  // namespace pingpong
