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

#ifndef PINGPONG_CONVENTION_SOLVER_H
#define PINGPONG_CONVENTION_SOLVER_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pingpong/attack_models.h"
#include "pingpong/state_engine.h"

namespace pingpong {

/// Permutation of the three gate positions (a, b, c); position i goes to perm[i].
using Permutation3 = std::array<uint8_t, 3>;

/// The six permutations in lexicographic order, identity first.
const std::array<Permutation3, 6> &all_permutations();
/// Image string of a permutation, e.g. "abc" for identity or "cba" for swap(a,c).
std::string permutation_label(const Permutation3 &perm);

/// Candidate semantics for the three-mode controlled polarizing beam splitter
/// C_abc: each photon is routed by its polarization through sigma0 or sigma1,
/// optionally flipping its polarization.
struct CpbsConvention {
    Permutation3 sigma0{0, 1, 2};
    Permutation3 sigma1{0, 1, 2};
    bool flip0 = false;
    bool flip1 = false;
    bool operator==(const CpbsConvention &) const = default;
};

enum class ControlPosition : uint8_t { FirstIndex = 0, SecondIndex = 1 };

/// How N_ab is read: which index is the control, and which polarization activates it.
struct CnotConvention {
    ControlPosition control = ControlPosition::FirstIndex;
    Occupation active_on = Occupation::Pol1;
    bool operator==(const CnotConvention &) const = default;
};

struct Convention {
    CpbsConvention cpbs;
    CnotConvention cnot;
    bool operator==(const Convention &) const = default;
};

/// All 576 candidates. Nesting from outermost: sigma0, sigma1, flip0, flip1,
/// control position (first, second), activation (pol1, pol0).
std::vector<Convention> enumerate_conventions();

/// Routes the photons of `ket` through C_{modes[0] modes[1] modes[2]}.
/// Returns nullopt when two photons land in the same mode.
std::optional<BasisKet> route_cpbs(const BasisKet &ket, const std::array<Mode, 3> &modes, const CpbsConvention &conv);

struct CircuitStage {
    enum class Kind : uint8_t { Hadamard, Cnot, Cpbs };
    Kind kind;
    std::array<Mode, 3> modes;  // Hadamard uses modes[0]; Cnot uses modes[0..1].
    std::string label() const;
};

/// H_y, C_txy, N_ty, C_ytx, N_xy: the five-gate attack circuit in application order.
const std::vector<CircuitStage> &attack_circuit();

struct StageResult {
    PureState state;
    /// First input ket (in index order) whose photons collide, if any.
    std::optional<BasisKet> collision;
};
StageResult apply_stage(const PureState &state, const CircuitStage &stage, const Convention &conv);

struct CandidateTrace {
    bool valid = true;
    /// Images of f1..f4 when valid.
    std::array<PureState, 4> images;
    /// For invalid candidates: which f-ket, which stage index, and the colliding input ket.
    size_t invalid_input = 0;
    size_t invalid_stage = 0;
    BasisKet invalid_ket;
};

CandidateTrace compose_candidate(const Convention &conv);

enum class CandidateStatus : uint8_t { Match, Mismatch, InvalidDoubleOccupancy };
std::string to_string(CandidateStatus status);

struct CandidateReport {
    size_t id;
    Convention convention;
    CandidateStatus status;
    /// Max amplitude deviation after removing the best common global phase; empty when invalid.
    std::optional<double> deviation;
};

/// Max amplitude deviation between `images` and `reference` images after
/// removing the best common global phase.
double phase_aligned_deviation(const std::array<PureState, 4> &images, const std::array<PureState, 4> &reference);

constexpr double kMatchTolerance = 1e-10;

std::vector<CandidateReport> solve(const AttackUnitary &reference = AttackUnitary::reference());

struct SolveSummary {
    size_t matches = 0;
    size_t mismatches = 0;
    size_t invalid = 0;
};
SolveSummary summarize(const std::vector<CandidateReport> &reports);

}  // namespace pingpong

#endif
