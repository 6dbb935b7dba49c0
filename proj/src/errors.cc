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

#include "ionsim/errors.h"

#include <cmath>

namespace ionsim {

ErrorAngles draw_error_angles(const ErrorConfig &cfg, RngStream &rng) {
    switch (cfg.mode) {
        case ErrorMode::None:
            return {};
        case ErrorMode::Bias:
            return {cfg.mu, cfg.mu};
        case ErrorMode::Noise: {
            double a = rng.gaussian(0, cfg.sigma);
            double b = rng.gaussian(0, cfg.sigma);
            return {a, b};
        }
        case ErrorMode::Both: {
            double a = rng.gaussian(cfg.mu, cfg.sigma);
            double b = rng.gaussian(cfg.mu, cfg.sigma);
            return {a, b};
        }
    }
    return {};
}

const char *error_mode_name(ErrorMode mode) {
    switch (mode) {
        case ErrorMode::None:
            return "none";
        case ErrorMode::Bias:
            return "bias";
        case ErrorMode::Noise:
            return "noise";
        case ErrorMode::Both:
            return "both";
    }
    return "?";
}

const char *decoherence_method_name(DecoherenceMethod method) {
    switch (method) {
        case DecoherenceMethod::None:
            return "none";
        case DecoherenceMethod::Decay:
            return "decay";
        case DecoherenceMethod::SponEmit:
            return "spon_emit";
    }
    return "?";
}

ErrorMode parse_error_mode(const std::string &text) {
    for (ErrorMode m : {ErrorMode::None, ErrorMode::Bias, ErrorMode::Noise, ErrorMode::Both}) {
        if (text == error_mode_name(m)) {
            return m;
        }
    }
    throw ContractViolation("unknown error mode '" + text + "'");
}

DecoherenceMethod parse_decoherence_method(const std::string &text) {
    for (auto m : {DecoherenceMethod::None, DecoherenceMethod::Decay, DecoherenceMethod::SponEmit}) {
        if (text == decoherence_method_name(m)) {
            return m;
        }
    }
    throw ContractViolation("unknown decoherence method '" + text + "'");
}

namespace {

/// Number of entries that can carry a phonon: the whole 3state vector, or the
/// main plane of a 2state vector.
size_t phonon_span(const QuantumState &state) {
    return state.plane_size();
}

}  // namespace

void apply_decay(QuantumState &state, double dec, InFlightMask in_flight) {
    if (dec == 0) {
        return;
    }
    double f = std::exp(-dec / 2);
    Amp *a = state.amps().data();
    size_t n = phonon_span(state);
    for (size_t i = 1; i < n; i += 2) {
        if (in_flight == nullptr || !in_flight[i]) {
            a[i] *= f;
        }
    }
}

double phonon_probability(const QuantumState &state, InFlightMask in_flight) {
    const Amp *a = state.amps().data();
    size_t n = phonon_span(state);
    double p = 0;
    for (size_t i = 1; i < n; i += 2) {
        if (in_flight == nullptr || !in_flight[i]) {
            p += std::norm(a[i]);
        }
    }
    return p;
}

bool emission_step(QuantumState &state, double dec, RngStream &rng, InFlightMask in_flight) {
    double p_emit = dec * phonon_probability(state, in_flight);
    double u = rng.uniform();
    if (!(u < p_emit)) {
        return false;
    }
    Amp *a = state.amps().data();
    size_t n = phonon_span(state);
    for (size_t i = 0; i < n; i += 2) {
        bool parked = in_flight != nullptr && in_flight[i + 1];
        a[i] = parked ? Amp{0, 0} : a[i + 1];
        a[i + 1] = 0;
    }
    for (size_t i = n; i < state.size(); i++) {
        a[i] = 0;
    }
    renormalize(state);
    return true;
}

bool decoherence_after_pulse(
    QuantumState &state, const DecoherenceConfig &cfg, RngStream &rng, InFlightMask in_flight) {
    switch (cfg.method) {
        case DecoherenceMethod::None:
            return false;
        case DecoherenceMethod::Decay:
            apply_decay(state, cfg.dec, in_flight);
            return false;
        case DecoherenceMethod::SponEmit:
            apply_decay(state, cfg.dec, in_flight);
            renormalize(state);
            return emission_step(state, cfg.dec, rng, in_flight);
    }
    return false;
}

}  // namespace ionsim
