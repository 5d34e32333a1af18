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

namespace pingpong {

namespace {

// Amplitudes below this are treated as cancelled when tracing kets through the circuit.
constexpr double kPresent = 1e-14;

}  // namespace

const std::array<Permutation3, 6> &all_permutations() {
    static const std::array<Permutation3, 6> perms{{
        {0, 1, 2},
        {0, 2, 1},
        {1, 0, 2},
        {1, 2, 0},
        {2, 0, 1},
        {2, 1, 0},
    }};
    return perms;
}

std::string permutation_label(const Permutation3 &perm) {
    std::string out;
    for (auto p : perm) {
        out += static_cast<char>('a' + p);
    }
    return out;
}

std::vector<Convention> enumerate_conventions() {
    std::vector<Convention> out;
    out.reserve(576);
    for (const auto &s0 : all_permutations()) {
        for (const auto &s1 : all_permutations()) {
            for (bool f0 : {false, true}) {
                for (bool f1 : {false, true}) {
                    for (auto control : {ControlPosition::FirstIndex, ControlPosition::SecondIndex}) {
                        for (auto active : {Occupation::Pol1, Occupation::Pol0}) {
                            out.push_back(Convention{{s0, s1, f0, f1}, {control, active}});
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::optional<BasisKet> route_cpbs(const BasisKet &ket, const std::array<Mode, 3> &modes, const CpbsConvention &conv) {
    BasisKet out = ket;
    for (Mode m : modes) {
        out = out.with(m, Occupation::Vac);
    }
    for (size_t i = 0; i < 3; i++) {
        Occupation occ = ket.occupation(modes[i]);
        if (occ == Occupation::Vac) {
            continue;
        }
        bool pol1 = occ == Occupation::Pol1;
        const Permutation3 &sigma = pol1 ? conv.sigma1 : conv.sigma0;
        bool flip = pol1 ? conv.flip1 : conv.flip0;
        Mode dest = modes[sigma[i]];
        if (out.occupation(dest) != Occupation::Vac) {
            return std::nullopt;
        }
        out = out.with(dest, flip ? flipped(occ) : occ);
    }
    return out;
}

std::string CircuitStage::label() const {
    switch (kind) {
        case Kind::Hadamard:
            return "H_" + to_string(modes[0]);
        case Kind::Cnot:
            return "N_" + to_string(modes[0]) + to_string(modes[1]);
        case Kind::Cpbs:
            return "C_" + to_string(modes[0]) + to_string(modes[1]) + to_string(modes[2]);
    }
    return "?";
}

const std::vector<CircuitStage> &attack_circuit() {
    using K = CircuitStage::Kind;
    static const std::vector<CircuitStage> stages{
        {K::Hadamard, {Mode::Y, Mode::Y, Mode::Y}},
        {K::Cpbs, {Mode::T, Mode::X, Mode::Y}},
        {K::Cnot, {Mode::T, Mode::Y, Mode::Y}},
        {K::Cpbs, {Mode::Y, Mode::T, Mode::X}},
        {K::Cnot, {Mode::X, Mode::Y, Mode::Y}},
    };
    return stages;
}

StageResult apply_stage(const PureState &state, const CircuitStage &stage, const Convention &conv) {
    switch (stage.kind) {
        case CircuitStage::Kind::Hadamard:
            return {apply_polarization_gate(state, stage.modes[0], hadamard_gate()), std::nullopt};
        case CircuitStage::Kind::Cnot: {
            bool first = conv.cnot.control == ControlPosition::FirstIndex;
            Mode control = first ? stage.modes[0] : stage.modes[1];
            Mode target = first ? stage.modes[1] : stage.modes[0];
            return {apply_cnot(state, control, target, conv.cnot.active_on), std::nullopt};
        }
        case CircuitStage::Kind::Cpbs:
            break;
    }
    PureState::Amplitudes out{};
    for (size_t i = 0; i < BasisKet::kCount; i++) {
        if (std::abs(state[i]) <= kPresent) {
            continue;
        }
        BasisKet ket = BasisKet::from_index(i);
        auto routed = route_cpbs(ket, stage.modes, conv.cpbs);
        if (!routed) {
            return {state, ket};
        }
        out[routed->index()] += state[i];
    }
    return {PureState(out), std::nullopt};
}

CandidateTrace compose_candidate(const Convention &conv) {
    CandidateTrace trace;
    const auto &stages = attack_circuit();
    for (size_t input = 0; input < 4; input++) {
        PureState s = PureState::basis(attack_domain_kets()[input]);
        for (size_t k = 0; k < stages.size(); k++) {
            StageResult r = apply_stage(s, stages[k], conv);
            if (r.collision) {
                trace.valid = false;
                trace.invalid_input = input;
                trace.invalid_stage = k;
                trace.invalid_ket = *r.collision;
                return trace;
            }
            s = r.state;
        }
        trace.images[input] = s;
    }
    return trace;
}

std::string to_string(CandidateStatus status) {
    switch (status) {
        case CandidateStatus::Match:
            return "match";
        case CandidateStatus::Mismatch:
            return "mismatch";
        case CandidateStatus::InvalidDoubleOccupancy:
            return "invalid-double-occupancy";
    }
    return "?";
}

double phase_aligned_deviation(const std::array<PureState, 4> &images, const std::array<PureState, 4> &reference) {
    Amplitude overlap = 0.0;
    for (size_t i = 0; i < 4; i++) {
        overlap += inner_product(reference[i], images[i]);
    }
    Amplitude phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Amplitude(1.0);
    double worst = 0.0;
    for (size_t i = 0; i < 4; i++) {
        worst = std::max(worst, max_amplitude_difference(images[i] * std::conj(phase), reference[i]));
    }
    return worst;
}

std::vector<CandidateReport> solve(const AttackUnitary &reference) {
    auto conventions = enumerate_conventions();
    std::vector<CandidateReport> reports;
    reports.reserve(conventions.size());
    for (size_t id = 0; id < conventions.size(); id++) {
        CandidateTrace trace = compose_candidate(conventions[id]);
        if (!trace.valid) {
            reports.push_back({id, conventions[id], CandidateStatus::InvalidDoubleOccupancy, std::nullopt});
            continue;
        }
        double dev = phase_aligned_deviation(trace.images, reference.images());
        auto status = dev <= kMatchTolerance ? CandidateStatus::Match : CandidateStatus::Mismatch;
        reports.push_back({id, conventions[id], status, dev});
    }
    return reports;
}

SolveSummary summarize(const std::vector<CandidateReport> &reports) {
    SolveSummary s;
    for (const auto &r : reports) {
        switch (r.status) {
            case CandidateStatus::Match:
                s.matches++;
                break;
            case CandidateStatus::Mismatch:
                s.mismatches++;
                break;
            case CandidateStatus::InvalidDoubleOccupancy:
                s.invalid++;
                break;
        }
    }
    return s;
}

}  // namespace pingpong
