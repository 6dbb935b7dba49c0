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

#ifndef IONSIM_GATES_H
#define IONSIM_GATES_H

#include <cstdint>
#include <string>
#include <vector>

#include "ionsim/errors.h"
#include "ionsim/pulse.h"
#include "ionsim/rng.h"
#include "ionsim/state.h"

namespace ionsim {

enum class GateKind : uint8_t {
    Rotation,     ///< One V pulse (qubit; theta, phi).
    CNot,         ///< (control, target).
    CPhase,       ///< (m, n). Negates the amplitude when both read 1.
    CCNot,        ///< (control, control, target).
    SetBit,       ///< Measure, then flip to 1 if needed.
    ClearBit,     ///< Measure, then flip to 0 if needed.
    ReuseRenorm,  ///< Undo the superposition rotation, clear e0, rescale error terms.
    Fourier,      ///< Grover single-qubit F: V(pi/2,-pi/2) then U(2pi,0).
    ZeroReflect,  ///< Grover R over qubits l_0..l_{L-1} using ancilla s (last qubit).
};

const char *gate_kind_name(GateKind kind);
GateKind parse_gate_kind(const std::string &name);

struct Gate {
    GateKind kind = GateKind::Rotation;
    std::vector<int> qubits;
    double theta = 0;
    double phi = 0;

    static Gate rotation(int q, double theta, double phi);
    /// Bit flip realized as V(pi, 0) = -i·X.
    static Gate flip(int q);
    static Gate cnot(int control, int target);
    static Gate cphase(int m, int n);
    static Gate ccnot(int c1, int c2, int target);
    static Gate set_bit(int q);
    static Gate clear_bit(int q);
    static Gate reuse_renorm(int q);
    static Gate fourier(int q);
    static Gate zero_reflect(const std::vector<int> &l, int s);

    /// CNot, CPhase, CCNot, SetBit and ClearBit.
    bool is_logic() const;
    /// Whether the errors of this gate's merged pulse pairs tend to cancel.
    bool intra_cancels() const;
    bool is_measurement() const {
        return kind == GateKind::SetBit || kind == GateKind::ClearBit;
    }
    /// Validates qubit count, range and distinctness.
    void check(int num_qubits) const;
    /// One dump line: "GATE name qubits... params...".
    std::string str() const;
    static Gate parse(const std::string &line);

    bool operator==(const Gate &other) const = default;
};

/// Pulses of a gate in application order, errors zeroed. SetBit and ClearBit
/// yield their conditional flip pulse; ReuseRenorm yields its rotation.
std::vector<PulseSpec> lower_gate_threestate(const Gate &g);

enum class CombineMethod : uint8_t { Simple, Mixed };

const char *combine_method_name(CombineMethod method);
CombineMethod parse_combine_method(const std::string &text);

/// Error angle of a merged pulse pair.
double combine_error_angles(
    double delta_first, double delta_second, CombineMethod method, bool gate_is_logic, bool intra_cancels);

/// A pair of third-level pulses merged into one 2state rotation. first and
/// last are pulse slots within the pass; they coincide for a single 2pi pulse.
struct PassPair {
    PulseKind kind = PulseKind::UHat;
    int qubit = 0;
    size_t first = 0;
    size_t last = 0;
};

/// A maximal run of consecutive third-level pulses, executed as one pass.
struct PairedPass {
    size_t begin = 0;  ///< Index of the first replaced pulse in the lowering.
    size_t count = 0;  ///< Number of replaced pulses (decoherence slots).
    std::vector<PassPair> pairs;  ///< In priority order (by first slot).
};

/// One 2state execution step: a direct V/U pulse or a merged pass.
struct TwoStateStep {
    bool paired = false;
    size_t pulse = 0;
    PairedPass pass;
};

/// Groups a lowered pulse sequence for the 2state model.
std::vector<TwoStateStep> plan_twostate(const std::vector<PulseSpec> &pulses);

/// Per-trial execution settings and random streams.
struct ExecutionContext {
    ModelKind model = ModelKind::ThreeState;
    ErrorConfig err;
    DecoherenceConfig dec;
    CombineMethod combine = CombineMethod::Simple;
    RngStream op_rng{0};
    RngStream emit_rng{0};
    RngStream measure_rng{0};

    /// Zero-error support masks for ReuseRenorm, one per checkpoint, consumed
    /// in order. When record_into is set, masks are captured there instead.
    const std::vector<std::vector<uint8_t>> *supports = nullptr;
    std::vector<std::vector<uint8_t>> *record_into = nullptr;
    size_t support_cursor = 0;

    uint64_t pulses_applied = 0;
    uint64_t emissions = 0;

    ExecutionContext() = default;
    /// Streams derived from (seed, trial).
    ExecutionContext(ModelKind model, uint64_t seed, uint64_t trial);
};

/// Runs one gate with fresh per-pulse error draws and decoherence.
void apply_gate(QuantumState &state, const Gate &g, ExecutionContext &ctx);

/// Clears digit e0 of q, then rescales so the norm returns to its pre-clear
/// value. Only amplitudes outside the reference support are scaled when a
/// support mask is given and has any weight outside it.
void clear_and_rescale(QuantumState &state, int q, const std::vector<uint8_t> *support);

}  // namespace ionsim

#endif
