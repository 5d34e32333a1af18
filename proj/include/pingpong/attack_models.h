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

#ifndef PINGPONG_ATTACK_MODELS_H
#define PINGPONG_ATTACK_MODELS_H

#include <array>
#include <string>

#include "pingpong/state_engine.h"

namespace pingpong {

/// Pre-attack kets f1..f4 (index 0..3). f1 and f2 carry |Psi+>_ht with Eve's
/// probe in |vac>_x|0>_y; f3 and f4 have the probe in |1>_y.
const std::array<BasisKet, 4> &attack_domain_kets();

/// Post-attack kets B1..B4, the support of the state after the Bob-to-Alice attack.
const std::array<BasisKet, 4> &attack_image_kets();

/// Unitary acting on span{f1..f4}, stored as the images of the four f-kets.
///
/// The reference map is
///   f1 -> (B1 + B2)/sqrt2    f2 -> (B3 + B4)/sqrt2
///   f3 -> (B1 - B2)/sqrt2    f4 -> (B3 - B4)/sqrt2
/// which is the unitary completion (with the phase of the f4 image fixed to +1)
/// of the three pinned states: the Bell pair with probe, the post-attack state
/// (1/2)(B1 + B2 + B3 + B4), and the return-leg states after Z_t^j.
///
/// The post-attack state's third term is printed garbled in the source
/// material; it is read as |1>_h|0>_t|vac>_x|1>_y (= B3), the only reading that
/// keeps two photons in play and inverts to the j=1 return-leg state.
class AttackUnitary {
   public:
    static AttackUnitary reference();
    /// Wraps four candidate images. Throws std::invalid_argument unless they are orthonormal.
    static AttackUnitary from_images(const std::array<PureState, 4> &images);

    const std::array<PureState, 4> &images() const {
        return images_;
    }

    /// Bob-to-Alice leg: U on span{f1..f4}.
    PureState forward(const PureState &state) const;
    /// Alice-to-Bob leg: U^dagger on span{U f1..U f4}.
    PureState inverse(const PureState &state) const;

   private:
    explicit AttackUnitary(const std::array<PureState, 4> &images) : images_(images) {
    }
    std::array<PureState, 4> images_;
};

/// The reference post-attack state (1/2)(B1 + B2 + B3 + B4).
PureState ba_attack_state();

/// S = X_t Z_t N_ty X_t (rightmost applied first).
PureState apply_symmetrization(const PureState &state);

/// Applies the Bob-to-Alice attack. Throws std::invalid_argument naming the
/// offending kets when the input has support outside span{f1..f4}.
PureState attack_ba(const PureState &state, const AttackUnitary &unitary = AttackUnitary::reference());

/// Applies the Alice-to-Bob attack, followed by S when `apply_s`. Throws
/// std::invalid_argument when the input leaves the attack's image span.
PureState attack_ab(const PureState &state, bool apply_s, const AttackUnitary &unitary = AttackUnitary::reference());

struct AttackProfile {
    std::string name;
    /// Probability that an attacked control round shows no photon at Alice.
    double loss;
    /// Per attacked bit, in bits.
    double i_ae;
    double i_ab;
    double i_be;
};

AttackProfile improved_profile();
/// Reference attack, modeled only by its published accounting values.
AttackProfile wojcik_profile();

}  // namespace pingpong

#endif
