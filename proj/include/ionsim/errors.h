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

#ifndef IONSIM_ERRORS_H
#define IONSIM_ERRORS_H

#include <cstdint>
#include <string>

#include "ionsim/rng.h"
#include "ionsim/state.h"

namespace ionsim {

enum class ErrorMode : uint8_t { None, Bias, Noise, Both };

struct ErrorConfig {
    ErrorMode mode = ErrorMode::None;
    double mu = 0;
    double sigma = 0;

    bool active() const {
        return mode != ErrorMode::None;
    }
};

struct ErrorAngles {
    double dtheta = 0;
    double dphi = 0;
};

/// Fresh (dtheta, dphi) for one pulse. Bias is deterministic and consumes no
/// draws; Noise and Both consume two gaussian variates.
ErrorAngles draw_error_angles(const ErrorConfig &cfg, RngStream &rng);

enum class DecoherenceMethod : uint8_t { None, Decay, SponEmit };

struct DecoherenceConfig {
    DecoherenceMethod method = DecoherenceMethod::None;
    double dec = 0;

    bool active() const {
        return method != DecoherenceMethod::None;
    }
};

const char *error_mode_name(ErrorMode mode);
const char *decoherence_method_name(DecoherenceMethod method);
ErrorMode parse_error_mode(const std::string &text);
DecoherenceMethod parse_decoherence_method(const std::string &text);

/// Per-position mask over the main plane. A set entry marks a phonon-1 element
/// whose amplitude is physically parked on the third level (phonon 0) while a
/// merged 2state pass is in progress.
using InFlightMask = const uint8_t *;

/// Multiplies every amplitude that physically carries a phonon by e^{-dec/2}.
///
/// In the 2state model the auxiliary plane holds third-level amplitude, which
/// the tunings only ever reach with the phonon emptied, so it is not decayed.
void apply_decay(QuantumState &state, double dec, InFlightMask in_flight = nullptr);

/// Probability mass that currently carries a phonon.
double phonon_probability(const QuantumState &state, InFlightMask in_flight = nullptr);

/// One emission check. Always consumes one uniform draw. On emission the
/// phonon-1 amplitudes move to phonon 0, everything without a phonon is
/// annihilated, and the state is renormalized.
bool emission_step(QuantumState &state, double dec, RngStream &rng, InFlightMask in_flight = nullptr);

/// Decoherence after one pulse: None is a no-op, Decay only decays, SponEmit
/// decays, renormalizes and then checks for an emission. Returns whether an
/// emission occurred.
bool decoherence_after_pulse(
    QuantumState &state, const DecoherenceConfig &cfg, RngStream &rng, InFlightMask in_flight = nullptr);

}  // namespace ionsim

#endif
