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

#include "pingpong/state_engine.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace pingpong {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

size_t sample_index(const double *probabilities, size_t count, Rng &rng) {
    double r = rng.uniform();
    double acc = 0.0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < count; i++) {
        if (probabilities[i] <= 0.0) {
            continue;
        }
        last_nonzero = i;
        acc += probabilities[i];
        if (r < acc) {
            return i;
        }
    }
    // Rounding left r above the accumulated total.
    return last_nonzero;
}

void require_normalized(const PureState &state) {
    if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
        throw std::invalid_argument("measurement requires a normalized state");
    }
}

}  // namespace

std::string to_string(Occupation occ) {
    switch (occ) {
        case Occupation::Vac:
            return "vac";
        case Occupation::Pol0:
            return "0";
        case Occupation::Pol1:
            return "1";
    }
    return "?";
}

std::string to_string(Mode mode) {
    static constexpr const char *names[] = {"h", "t", "x", "y"};
    return names[static_cast<size_t>(mode)];
}

std::string to_string(BellOutcome outcome) {
    static constexpr const char *names[] = {"PsiPlus", "PsiMinus", "PhiPlus", "PhiMinus", "NoPhoton"};
    return names[static_cast<size_t>(outcome)];
}

BasisKet BasisKet::from_index(size_t index) {
    if (index >= kCount) {
        throw std::out_of_range("basis index out of range");
    }
    BasisKet ket;
    ket.y = static_cast<Occupation>(index % 3);
    index /= 3;
    ket.x = static_cast<Occupation>(index % 3);
    index /= 3;
    ket.t = static_cast<Occupation>(index % 3);
    ket.h = static_cast<uint8_t>(index / 3);
    return ket;
}

Occupation BasisKet::occupation(Mode mode) const {
    switch (mode) {
        case Mode::H:
            return polarization(h);
        case Mode::T:
            return t;
        case Mode::X:
            return x;
        case Mode::Y:
            return y;
    }
    return Occupation::Vac;
}

BasisKet BasisKet::with(Mode mode, Occupation occ) const {
    BasisKet out = *this;
    switch (mode) {
        case Mode::H:
            if (occ == Occupation::Vac) {
                throw std::invalid_argument("home photon cannot be vacuum");
            }
            out.h = occ == Occupation::Pol1 ? 1 : 0;
            break;
        case Mode::T:
            out.t = occ;
            break;
        case Mode::X:
            out.x = occ;
            break;
        case Mode::Y:
            out.y = occ;
            break;
    }
    return out;
}

int BasisKet::photon_number() const {
    return (t != Occupation::Vac) + (x != Occupation::Vac) + (y != Occupation::Vac);
}

std::string BasisKet::label() const {
    return fmt::format("h={} t={} x={} y={}", h, to_string(t), to_string(x), to_string(y));
}

PureState PureState::basis(const BasisKet &ket) {
    Amplitudes amps{};
    amps[ket.index()] = 1.0;
    return PureState(amps);
}

PureState PureState::from_terms(std::initializer_list<std::pair<BasisKet, Amplitude>> terms) {
    Amplitudes amps{};
    for (const auto &[ket, amp] : terms) {
        amps[ket.index()] += amp;
    }
    return PureState(amps);
}

double PureState::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

std::vector<BasisKet> PureState::support(double tolerance) const {
    std::vector<BasisKet> out;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        if (std::abs(amplitudes_[i]) > tolerance) {
            out.push_back(BasisKet::from_index(i));
        }
    }
    return out;
}

int PureState::photon_sector(double tolerance) const {
    int sector = -1;
    for (const auto &ket : support(tolerance)) {
        int n = ket.photon_number();
        if (sector == -1) {
            sector = n;
        } else if (sector != n) {
            return -1;
        }
    }
    return sector;
}

PureState PureState::operator+(const PureState &other) const {
    Amplitudes out;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        out[i] = amplitudes_[i] + other.amplitudes_[i];
    }
    return PureState(out);
}

PureState PureState::operator-(const PureState &other) const {
    Amplitudes out;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        out[i] = amplitudes_[i] - other.amplitudes_[i];
    }
    return PureState(out);
}

PureState PureState::operator*(Amplitude scale) const {
    Amplitudes out;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        out[i] = amplitudes_[i] * scale;
    }
    return PureState(out);
}

PureState PureState::normalized() const {
    double n = std::sqrt(norm_squared());
    if (n == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return *this * (1.0 / n);
}

Amplitude inner_product(const PureState &bra, const PureState &ket) {
    Amplitude total = 0.0;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        total += std::conj(bra[i]) * ket[i];
    }
    return total;
}

double overlap_magnitude(const PureState &a, const PureState &b) {
    return std::abs(inner_product(a, b));
}

double max_amplitude_difference(const PureState &a, const PureState &b) {
    double worst = 0.0;
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

PureState make_initial() {
    using O = Occupation;
    return PureState::from_terms({
        {BasisKet{0, O::Pol1, O::Vac, O::Pol0}, kInvSqrt2},
        {BasisKet{1, O::Pol0, O::Vac, O::Pol0}, kInvSqrt2},
    });
}

PureState make_bell_pair() {
    using O = Occupation;
    return PureState::from_terms({
        {BasisKet{0, O::Pol1, O::Vac, O::Vac}, kInvSqrt2},
        {BasisKet{1, O::Pol0, O::Vac, O::Vac}, kInvSqrt2},
    });
}

Gate2 hadamard_gate() {
    return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}};
}

Gate2 pauli_x_gate() {
    return {{{0.0, 1.0}, {1.0, 0.0}}};
}

Gate2 pauli_z_gate() {
    return {{{1.0, 0.0}, {0.0, -1.0}}};
}

bool is_unitary(const Gate2 &g, double tolerance) {
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            Amplitude dot = std::conj(g[0][r]) * g[0][c] + std::conj(g[1][r]) * g[1][c];
            Amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(dot - expected) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

PureState apply_polarization_gate(const PureState &state, Mode mode, const Gate2 &gate) {
    if (!is_unitary(gate)) {
        throw std::invalid_argument("polarization gate is not unitary");
    }
    PureState::Amplitudes out{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        Amplitude a = state[i];
        if (a == Amplitude{}) {
            continue;
        }
        BasisKet ket = BasisKet::from_index(i);
        Occupation occ = ket.occupation(mode);
        if (occ == Occupation::Vac) {
            out[i] += a;
            continue;
        }
        size_t col = occ == Occupation::Pol1 ? 1 : 0;
        for (size_t row = 0; row < 2; row++) {
            out[ket.with(mode, polarization(static_cast<int>(row))).index()] += gate[row][col] * a;
        }
    }
    return PureState(out);
}

PureState apply_cnot(const PureState &state, Mode control, Mode target, Occupation active_on) {
    if (control == target) {
        throw std::invalid_argument("cnot control and target must differ");
    }
    if (control == Mode::H || target == Mode::H) {
        throw std::invalid_argument("cnot does not act on the home photon");
    }
    if (active_on == Occupation::Vac) {
        throw std::invalid_argument("cnot must activate on a polarization");
    }
    PureState::Amplitudes out{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        BasisKet ket = BasisKet::from_index(i);
        if (ket.occupation(control) == active_on) {
            ket = ket.with(target, flipped(ket.occupation(target)));
        }
        out[ket.index()] += state[i];
    }
    return PureState(out);
}

std::array<double, 3> mode_probabilities(const PureState &state, Mode mode) {
    std::array<double, 3> p{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        p[static_cast<size_t>(BasisKet::from_index(i).occupation(mode))] += std::norm(state[i]);
    }
    return p;
}

std::array<std::array<double, 3>, 3> joint_mode_probabilities(const PureState &state, Mode first, Mode second) {
    std::array<std::array<double, 3>, 3> p{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        BasisKet ket = BasisKet::from_index(i);
        p[static_cast<size_t>(ket.occupation(first))][static_cast<size_t>(ket.occupation(second))] +=
            std::norm(state[i]);
    }
    return p;
}

MeasurementResult measure_mode_polarization(const PureState &state, Mode mode, Rng &rng) {
    require_normalized(state);
    auto p = mode_probabilities(state, mode);
    auto outcome = static_cast<Occupation>(sample_index(p.data(), p.size(), rng));
    PureState::Amplitudes out{};
    double scale = 1.0 / std::sqrt(p[static_cast<size_t>(outcome)]);
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        if (BasisKet::from_index(i).occupation(mode) == outcome) {
            out[i] = state[i] * scale;
        }
    }
    return {outcome, PureState(out)};
}

std::array<std::array<double, 2>, 2> bell_vector(BellOutcome outcome) {
    switch (outcome) {
        case BellOutcome::PsiPlus:
            return {{{0.0, kInvSqrt2}, {kInvSqrt2, 0.0}}};
        case BellOutcome::PsiMinus:
            return {{{0.0, kInvSqrt2}, {-kInvSqrt2, 0.0}}};
        case BellOutcome::PhiPlus:
            return {{{kInvSqrt2, 0.0}, {0.0, kInvSqrt2}}};
        case BellOutcome::PhiMinus:
            return {{{kInvSqrt2, 0.0}, {0.0, -kInvSqrt2}}};
        case BellOutcome::NoPhoton:
            break;
    }
    throw std::invalid_argument("NoPhoton has no Bell vector");
}

namespace {

// Index of the (x, y) configuration, 0..8.
size_t rest_index(const BasisKet &ket) {
    return static_cast<size_t>(ket.x) * 3 + static_cast<size_t>(ket.y);
}

// Bell-basis coefficients of the state for each (x, y) configuration.
std::array<Amplitude, 9> bell_components(const PureState &state, BellOutcome outcome) {
    auto v = bell_vector(outcome);
    std::array<Amplitude, 9> c{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        BasisKet ket = BasisKet::from_index(i);
        if (ket.t == Occupation::Vac) {
            continue;
        }
        size_t tp = ket.t == Occupation::Pol1 ? 1 : 0;
        c[rest_index(ket)] += v[ket.h][tp] * state[i];
    }
    return c;
}

}  // namespace

std::array<double, 5> bell_probabilities(const PureState &state) {
    std::array<double, 5> p{};
    for (size_t b = 0; b < 4; b++) {
        for (const auto &c : bell_components(state, static_cast<BellOutcome>(b))) {
            p[b] += std::norm(c);
        }
    }
    p[4] = mode_probabilities(state, Mode::T)[static_cast<size_t>(Occupation::Vac)];
    return p;
}

BellResult bell_measure(const PureState &state, Rng &rng) {
    require_normalized(state);
    auto p = bell_probabilities(state);
    auto outcome = static_cast<BellOutcome>(sample_index(p.data(), p.size(), rng));
    double scale = 1.0 / std::sqrt(p[static_cast<size_t>(outcome)]);
    PureState::Amplitudes out{};
    if (outcome == BellOutcome::NoPhoton) {
        for (size_t i = 0; i < BasisKet::kCount; i++) {
            if (BasisKet::from_index(i).t == Occupation::Vac) {
                out[i] = state[i] * scale;
            }
        }
        return {outcome, PureState(out)};
    }
    auto v = bell_vector(outcome);
    auto c = bell_components(state, outcome);
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        BasisKet ket = BasisKet::from_index(i);
        if (ket.t == Occupation::Vac) {
            continue;
        }
        size_t tp = ket.t == Occupation::Pol1 ? 1 : 0;
        out[i] = v[ket.h][tp] * c[rest_index(ket)] * scale;
    }
    return {outcome, PureState(out)};
}

std::string state_to_csv(const PureState &state) {
    std::string out = "ket,real,imag\n";
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        if (std::abs(state[i]) <= 1e-12) {
            continue;
        }
        out += fmt::format("{},{:.17g},{:.17g}\n", BasisKet::from_index(i).label(), state[i].real(), state[i].imag());
    }
    return out;
}

}  // namespace pingpong
