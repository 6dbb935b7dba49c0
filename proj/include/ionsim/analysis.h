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

#ifndef IONSIM_ANALYSIS_H
#define IONSIM_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ionsim/circuits.h"
#include "ionsim/errors.h"
#include "ionsim/gates.h"
#include "ionsim/state.h"

namespace ionsim {

struct RunSettings {
    ModelKind model = ModelKind::ThreeState;
    ErrorConfig err;
    DecoherenceConfig dec;
    CombineMethod combine = CombineMethod::Simple;
    int trials = 4;
    uint64_t seed = 1;
    /// Worker threads for independent trials. Results never depend on it.
    int jobs = 1;
};

/// |<ref|psi>|^2 without renormalizing psi.
double fidelity(const QuantumState &psi, const QuantumState &phi_ref);

/// Zero-error run of a program plus the supports its ReuseRenorm gates saw.
struct Reference {
    QuantumState state;
    std::vector<std::vector<uint8_t>> supports;
};

Reference run_reference(const CircuitProgram &program, ModelKind model, uint64_t seed = 1);

struct TrialResult {
    double fidelity = 0;
    double survival_norm = 0;
    /// Probability of the program's target value, if it declares one.
    double success_probability = 0;
    uint64_t emissions = 0;
};

/// One error-injected trial. Its random streams depend only on (seed, trial).
TrialResult run_trial(
    const CircuitProgram &program, const Reference &ref, const RunSettings &settings, uint64_t trial,
    QuantumState *final_state = nullptr);

struct FidelityReport {
    RunSettings settings;
    std::vector<TrialResult> trials;
    double mean_fidelity = 0;
    double stderr_fidelity = 0;
    double mean_survival = 0;
    std::optional<double> mean_success;
    size_t pulses = 0;
    int num_qubits = 0;
};

FidelityReport run_benchmark(const CircuitProgram &program, const RunSettings &settings);
FidelityReport run_benchmark(const CircuitProgram &program, const Reference &ref, const RunSettings &settings);

struct OmegaEstimate {
    double f_dec = 0;
    double f_op = 0;
    double f_both = 0;
    double omega = 0;
    FidelityReport dec_only;
    FidelityReport op_only;
    FidelityReport both;
};

/// Runs (errors only), (decoherence only) and (both) with the same per-trial
/// streams, so the joint run shares its draws with the single-error runs.
OmegaEstimate estimate_omega(const CircuitProgram &program, const RunSettings &settings);

enum class SweepAxis : uint8_t { None, Sigma, Mu, Dec };

const char *sweep_axis_name(SweepAxis axis);
SweepAxis parse_sweep_axis(const std::string &text);
std::vector<double> default_sweep_values(SweepAxis axis);

/// Settings with the axis parameter set to value. A disabled error mode or
/// decoherence method is switched on (noise, bias, decay) so the value acts.
RunSettings with_axis_value(const RunSettings &settings, SweepAxis axis, double value);

struct SweepRow {
    SweepAxis axis = SweepAxis::None;
    double value = 0;
    FidelityReport report;
};

std::vector<SweepRow> sweep(
    const CircuitProgram &program, const RunSettings &settings, SweepAxis axis, const std::vector<double> &values);

}  // namespace ionsim

#endif
