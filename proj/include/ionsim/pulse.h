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

#ifndef IONSIM_PULSE_H
#define IONSIM_PULSE_H

#include <array>
#include <cstdint>
#include <string>

#include "ionsim/state.h"

namespace ionsim {

/// Laser tunings. Each one couples two (level, phonon) configurations of one ion.
enum class PulseKind : uint8_t {
    V,       ///< g <-> e0, phonon untouched.
    U,       ///< g·1 <-> e0·0.
    UHat,    ///< g·1 <-> e1·0.
    UTilde,  ///< e0·1 <-> e1·0.
};

const char *pulse_kind_name(PulseKind kind);

struct PulseSpec {
    PulseKind kind = PulseKind::V;
    int qubit = 0;
    double theta = 0;
    double phi = 0;
    double dtheta = 0;
    double dphi = 0;

    double effective_theta() const {
        return theta + dtheta;
    }
    double effective_phi() const {
        return phi + dphi;
    }
    std::string str() const;
};

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Amp, 4>;

/// Row-major matrix, 2x2 for V and 4x4 for the phonon-coupled kinds.
struct PulseMatrix {
    int dim = 2;
    std::array<Amp, 16> m{};

    Amp operator()(int r, int c) const {
        return m[r * dim + c];
    }
};

/// [[cos(t/2), -i e^{-ip} sin(t/2)], [-i e^{ip} sin(t/2), cos(t/2)]].
Mat2 rotation_matrix(double theta, double phi);

/// Full pulse matrix. For U kinds the basis is (a·0, a·1, b·0, b·1) where a is
/// the lower level of the tuning (g for U and UHat, e0 for UTilde) and the
/// rotation acts on (a·1, b·0).
PulseMatrix pulse_matrix(PulseKind kind, double theta, double phi);

/// Lower and upper ion levels coupled by a phonon-coupled tuning.
std::array<uint8_t, 2> coupled_levels(PulseKind kind);

/// Applies one pulse with its effective angles.
///
/// ThreeState accepts every kind. TwoState accepts V and U, which act on the
/// main plane only; third-level tunings go through apply_paired_rotation.
void apply_pulse(QuantumState &state, const PulseSpec &p);

/// In-place (a, b) <- m·(a, b). Spelled out in real arithmetic: std::complex
/// products go through the slow inf/nan-aware library path.
inline void rotate_pair(const Mat2 &m, Amp &a, Amp &b) {
    double ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
    double m0r = m[0].real(), m0i = m[0].imag(), m1r = m[1].real(), m1i = m[1].imag();
    double m2r = m[2].real(), m2i = m[2].imag(), m3r = m[3].real(), m3i = m[3].imag();
    a = Amp{m0r * ar - m0i * ai + m1r * br - m1i * bi, m0r * ai + m0i * ar + m1r * bi + m1i * br};
    b = Amp{m2r * ar - m2i * ai + m3r * br - m3i * bi, m2r * ai + m2i * ar + m3r * bi + m3i * br};
}

/// One merged pass of two third-level pulses in the TwoState model.
struct PairedRotation {
    PulseKind kind = PulseKind::UHat;  ///< UHat or UTilde.
    int qubit = 0;
    double total_theta = 0;     ///< Sum of the ideal angles of the merged pulses.
    double combined_delta = 0;  ///< Combined theta error of the merged pulses.
    double phi = 0;
    double combined_dphi = 0;

    /// Level of qubit that makes a phonon-1 main element eligible.
    uint8_t trigger_level() const {
        return kind == PulseKind::UTilde ? kE0 : kG;
    }
    Mat2 matrix() const {
        return rotation_matrix(total_theta + combined_delta, phi + combined_dphi);
    }
};

/// TwoState only. Rotates (main_i, aux_i) for each phonon-1 main element whose
/// qubit digit equals the trigger level.
void apply_paired_rotation(QuantumState &state, const PairedRotation &r);

}  // namespace ionsim

#endif
