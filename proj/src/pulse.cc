// Copyright 2026 The IonSim Authors
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

#include "ionsim/pulse.h"

#include <cmath>
#include <sstream>

namespace ionsim {

const char *pulse_kind_name(PulseKind kind) {
    switch (kind) {
        case PulseKind::V:
            return "V";
        case PulseKind::U:
            return "U";
        case PulseKind::UHat:
            return "UHAT";
        case PulseKind::UTilde:
            return "UTILDE";
    }
    return "?";
}

std::string PulseSpec::str() const {
    std::ostringstream out;
    out << pulse_kind_name(kind) << "_" << qubit << "(" << theta << "," << phi << ")";
    return out.str();
}

Mat2 rotation_matrix(double theta, double phi) {
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    Amp mi{0, -1};
    return {
        Amp{c, 0},
        mi * std::polar(s, -phi),
        mi * std::polar(s, phi),
        Amp{c, 0},
    };
}

std::array<uint8_t, 2> coupled_levels(PulseKind kind) {
    switch (kind) {
        case PulseKind::V:
        case PulseKind::U:
            return {kG, kE0};
        case PulseKind::UHat:
            return {kG, kE1};
        case PulseKind::UTilde:
            return {kE0, kE1};
    }
    return {kG, kE0};
}

PulseMatrix pulse_matrix(PulseKind kind, double theta, double phi) {
    Mat2 r = rotation_matrix(theta, phi);
    PulseMatrix out;
    if (kind == PulseKind::V) {
        out.dim = 2;
        std::copy(r.begin(), r.end(), out.m.begin());
        return out;
    }
    out.dim = 4;
    out.m[0 * 4 + 0] = 1;
    out.m[3 * 4 + 3] = 1;
    out.m[1 * 4 + 1] = r[0];
    out.m[1 * 4 + 2] = r[1];
    out.m[2 * 4 + 1] = r[2];
    out.m[2 * 4 + 2] = r[3];
    return out;
}

namespace {

/// Visits every pair (i_a, i_b) of a tuning inside one plane. Blocks of
/// 'period' positions repeat; within a block the level-l slice starts at l·s.
template <typename F>
void for_each_pair(size_t plane, size_t s, size_t period, PulseKind kind, F &&f) {
    auto lv = coupled_levels(kind);
    size_t oa = lv[0] * s;
    size_t ob = lv[1] * s;
    if (kind == PulseKind::V) {
        for (size_t base = 0; base < plane; base += period) {
            for (size_t j = 0; j < s; j++) {
                f(base + oa + j, base + ob + j);
            }
        }
    } else {
        for (size_t base = 0; base < plane; base += period) {
            for (size_t j = 1; j < s; j += 2) {
                f(base + oa + j, base + ob + j - 1);
            }
        }
    }
}

}  // namespace

void apply_pulse(QuantumState &state, const PulseSpec &p) {
    state.check_qubit(p.qubit);
    Mat2 m = rotation_matrix(p.effective_theta(), p.effective_phi());
    Amp *a = state.amps().data();
    size_t s = state.stride(p.qubit);
    auto rot = [&](size_t i, size_t j) { rotate_pair(m, a[i], a[j]); };
    if (state.model() == ModelKind::ThreeState) {
        for_each_pair(state.size(), s, 3 * s, p.kind, rot);
        return;
    }
    if (p.kind != PulseKind::V && p.kind != PulseKind::U) {
        throw ContractViolation("third-level pulses need apply_paired_rotation in the 2state model");
    }
    for_each_pair(state.plane_size(), s, 2 * s, p.kind, rot);
}

void apply_paired_rotation(QuantumState &state, const PairedRotation &r) {
    if (state.model() != ModelKind::TwoState) {
        throw ContractViolation("apply_paired_rotation needs a 2state model state");
    }
    if (r.kind != PulseKind::UHat && r.kind != PulseKind::UTilde) {
        throw ContractViolation("paired rotations merge third-level pulses only");
    }
    state.check_qubit(r.qubit);
    Mat2 m = r.matrix();
    size_t plane = state.plane_size();
    size_t s = state.stride(r.qubit);
    size_t off = r.trigger_level() * s;
    Amp *main = state.amps().data();
    Amp *aux = main + plane;
    for (size_t base = 0; base < plane; base += 2 * s) {
        for (size_t j = 1; j < s; j += 2) {
            size_t i = base + off + j;
            rotate_pair(m, main[i], aux[i]);
        }
    }
}

}  // namespace ionsim
