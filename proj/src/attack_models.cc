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

#include "pingpong/attack_models.h"

#include <cmath>
#include <stdexcept>

namespace pingpong {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kDomainTolerance = 1e-12;

std::string describe_leak(const PureState &residual) {
    std::string out;
    for (const auto &ket : residual.support(kDomainTolerance)) {
        if (!out.empty()) {
            out += ", ";
        }
        out += "|" + ket.label() + ">";
    }
    return out;
}

// Residual of `state` after projecting onto the span of orthonormal `basis`;
// returns the coefficients through `coeffs`.
PureState project_out(const PureState &state, const std::array<PureState, 4> &basis, std::array<Amplitude, 4> &coeffs) {
    PureState residual = state;
    for (size_t i = 0; i < 4; i++) {
        coeffs[i] = inner_product(basis[i], state);
        residual = residual - basis[i] * coeffs[i];
    }
    return residual;
}

}  // namespace

const std::array<BasisKet, 4> &attack_domain_kets() {
    using O = Occupation;
    static const std::array<BasisKet, 4> kets{{
        {0, O::Pol1, O::Vac, O::Pol0},
        {1, O::Pol0, O::Vac, O::Pol0},
        {0, O::Pol1, O::Vac, O::Pol1},
        {1, O::Pol0, O::Vac, O::Pol1},
    }};
    return kets;
}

const std::array<BasisKet, 4> &attack_image_kets() {
    using O = Occupation;
    static const std::array<BasisKet, 4> kets{{
        {0, O::Vac, O::Pol1, O::Pol0},
        {0, O::Pol1, O::Pol1, O::Vac},
        {1, O::Pol0, O::Vac, O::Pol1},
        {1, O::Pol0, O::Pol0, O::Vac},
    }};
    return kets;
}

AttackUnitary AttackUnitary::reference() {
    const auto &b = attack_image_kets();
    auto pair = [&](size_t i, size_t j, double sign) {
        return PureState::from_terms({{b[i], kInvSqrt2}, {b[j], sign * kInvSqrt2}});
    };
    return AttackUnitary({pair(0, 1, +1), pair(2, 3, +1), pair(0, 1, -1), pair(2, 3, -1)});
}

AttackUnitary AttackUnitary::from_images(const std::array<PureState, 4> &images) {
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            Amplitude expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner_product(images[i], images[j]) - expected) > 1e-10) {
                throw std::invalid_argument("attack images are not orthonormal");
            }
        }
    }
    return AttackUnitary(images);
}

PureState AttackUnitary::forward(const PureState &state) const {
    std::array<PureState, 4> domain;
    for (size_t i = 0; i < 4; i++) {
        domain[i] = PureState::basis(attack_domain_kets()[i]);
    }
    std::array<Amplitude, 4> coeffs;
    PureState residual = project_out(state, domain, coeffs);
    if (std::sqrt(residual.norm_squared()) > kDomainTolerance) {
        throw std::invalid_argument("attack_ba input has support outside span{f1..f4}: " + describe_leak(residual));
    }
    PureState out;
    for (size_t i = 0; i < 4; i++) {
        out = out + images_[i] * coeffs[i];
    }
    return out;
}

PureState AttackUnitary::inverse(const PureState &state) const {
    std::array<Amplitude, 4> coeffs;
    PureState residual = project_out(state, images_, coeffs);
    if (std::sqrt(residual.norm_squared()) > kDomainTolerance) {
        throw std::invalid_argument("attack_ab input has support outside the attack image span: " +
                                    describe_leak(residual));
    }
    PureState out;
    for (size_t i = 0; i < 4; i++) {
        out = out + PureState::basis(attack_domain_kets()[i]) * coeffs[i];
    }
    return out;
}

PureState ba_attack_state() {
    const auto &b = attack_image_kets();
    return PureState::from_terms({{b[0], 0.5}, {b[1], 0.5}, {b[2], 0.5}, {b[3], 0.5}});
}

PureState apply_symmetrization(const PureState &state) {
    PureState s = apply_polarization_gate(state, Mode::T, pauli_x_gate());
    s = apply_cnot(s, Mode::T, Mode::Y);
    s = apply_polarization_gate(s, Mode::T, pauli_z_gate());
    return apply_polarization_gate(s, Mode::T, pauli_x_gate());
}

PureState attack_ba(const PureState &state, const AttackUnitary &unitary) {
    return unitary.forward(state);
}

PureState attack_ab(const PureState &state, bool apply_s, const AttackUnitary &unitary) {
    PureState out = unitary.inverse(state);
    return apply_s ? apply_symmetrization(out) : out;
}

AttackProfile improved_profile() {
    const double log3 = std::log2(3.0);
    return AttackProfile{
        "improved",
        0.25,
        0.75 * std::log2(4.0 / 3.0),
        0.75 * log3 - 1.0,
        1.0 - 1.5 * log3 + 0.625 * std::log2(5.0),
    };
}

AttackProfile wojcik_profile() {
    AttackProfile p = improved_profile();
    p.name = "wojcik";
    p.loss = 0.5;
    return p;
}

}  // namespace pingpong
