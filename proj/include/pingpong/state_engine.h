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

#ifndef PINGPONG_STATE_ENGINE_H
#define PINGPONG_STATE_ENGINE_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "pingpong/rng.h"

namespace pingpong {

using Amplitude = std::complex<double>;

/// Content of one spatial photon mode: empty, or a single photon with
/// polarization 0 or 1.
enum class Occupation : uint8_t { Vac = 0, Pol0 = 1, Pol1 = 2 };

/// The home photon h (always present) and the three vacuum-capable modes:
/// travel t and Eve's auxiliary modes x, y.
enum class Mode : uint8_t { H = 0, T = 1, X = 2, Y = 3 };

enum class BellOutcome : uint8_t { PsiPlus = 0, PsiMinus = 1, PhiPlus = 2, PhiMinus = 3, NoPhoton = 4 };

std::string to_string(Occupation occ);
std::string to_string(Mode mode);
std::string to_string(BellOutcome outcome);

inline Occupation polarization(int bit) {
    return bit ? Occupation::Pol1 : Occupation::Pol0;
}
inline Occupation flipped(Occupation occ) {
    switch (occ) {
        case Occupation::Pol0:
            return Occupation::Pol1;
        case Occupation::Pol1:
            return Occupation::Pol0;
        default:
            return Occupation::Vac;
    }
}

struct BasisKet {
    uint8_t h = 0;
    Occupation t = Occupation::Vac;
    Occupation x = Occupation::Vac;
    Occupation y = Occupation::Vac;

    static constexpr size_t kCount = 54;

    /// ((h*3 + t)*3 + x)*3 + y with vac=0, pol0=1, pol1=2.
    constexpr size_t index() const {
        return ((static_cast<size_t>(h) * 3 + static_cast<size_t>(t)) * 3 + static_cast<size_t>(x)) * 3 +
               static_cast<size_t>(y);
    }
    static BasisKet from_index(size_t index);

    Occupation occupation(Mode mode) const;
    BasisKet with(Mode mode, Occupation occ) const;
    /// Number of occupied modes among t, x, y.
    int photon_number() const;
    /// e.g. "h=0 t=1 x=vac y=0".
    std::string label() const;

    bool operator==(const BasisKet &other) const = default;
};

/// Exact pure state over the 54 basis kets, indexed by BasisKet::index().
class PureState {
   public:
    using Amplitudes = std::array<Amplitude, BasisKet::kCount>;

    PureState() = default;
    explicit PureState(const Amplitudes &amplitudes) : amplitudes_(amplitudes) {
    }
    static PureState basis(const BasisKet &ket);
    static PureState from_terms(std::initializer_list<std::pair<BasisKet, Amplitude>> terms);

    const Amplitudes &amplitudes() const {
        return amplitudes_;
    }
    Amplitude operator[](const BasisKet &ket) const {
        return amplitudes_[ket.index()];
    }
    Amplitude operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;
    /// Kets with |amplitude| above tolerance, in index order.
    std::vector<BasisKet> support(double tolerance = 1e-12) const;
    /// The common photon number of the support, or -1 when the support mixes sectors.
    int photon_sector(double tolerance = 1e-12) const;

    PureState operator+(const PureState &other) const;
    PureState operator-(const PureState &other) const;
    PureState operator*(Amplitude scale) const;
    PureState normalized() const;

   private:
    Amplitudes amplitudes_{};
};

Amplitude inner_product(const PureState &bra, const PureState &ket);
/// |<a|b>|, equal to 1 when the states agree up to global phase.
double overlap_magnitude(const PureState &a, const PureState &b);
double max_amplitude_difference(const PureState &a, const PureState &b);

/// |Psi+>_ht |vac>_x |0>_y: the Bell pair with Eve's probe photon attached.
PureState make_initial();
/// |Psi+>_ht |vac>_x |vac>_y: the Bell pair alone.
PureState make_bell_pair();

using Gate2 = std::array<std::array<Amplitude, 2>, 2>;

Gate2 hadamard_gate();
Gate2 pauli_x_gate();
Gate2 pauli_z_gate();
bool is_unitary(const Gate2 &gate, double tolerance = 1e-12);

/// Applies `gate` to the polarization of `mode`; kets where the mode is vacuum
/// are left untouched. Throws std::invalid_argument for a non-unitary gate.
PureState apply_polarization_gate(const PureState &state, Mode mode, const Gate2 &gate);

/// Flips the target's polarization on kets where the control holds a photon of
/// polarization `active_on`. Vacuum targets are unchanged. The home photon is
/// not a valid control or target.
PureState apply_cnot(const PureState &state, Mode control, Mode target, Occupation active_on = Occupation::Pol1);

/// Exact outcome distribution of a computational-basis measurement on `mode`,
/// indexed by Occupation.
std::array<double, 3> mode_probabilities(const PureState &state, Mode mode);
/// Joint distribution of measuring `first` then `second`, indexed [first][second].
std::array<std::array<double, 3>, 3> joint_mode_probabilities(const PureState &state, Mode first, Mode second);

struct MeasurementResult {
    Occupation outcome;
    PureState state;
};
MeasurementResult measure_mode_polarization(const PureState &state, Mode mode, Rng &rng);

/// The (h, t) Bell state with index `outcome`, as amplitudes over (h, t-polarization).
std::array<std::array<double, 2>, 2> bell_vector(BellOutcome outcome);

/// Exact Bell-measurement distribution, indexed by BellOutcome.
std::array<double, 5> bell_probabilities(const PureState &state);

struct BellResult {
    BellOutcome outcome;
    PureState state;
};
BellResult bell_measure(const PureState &state, Rng &rng);

/// CSV rows "label,real,imag" for amplitudes above 1e-12, preceded by a header.
std::string state_to_csv(const PureState &state);

}  // namespace pingpong

#endif
