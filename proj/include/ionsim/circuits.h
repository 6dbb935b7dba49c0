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

#ifndef IONSIM_CIRCUITS_H
#define IONSIM_CIRCUITS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ionsim/gates.h"
#include "ionsim/state.h"

namespace ionsim {

/// A register value whose probability is reported as the success metric.
struct SuccessTarget {
    std::string reg;
    uint64_t value = 0;
};

struct CircuitProgram {
    std::string name;
    int num_qubits = 0;
    std::vector<QubitRange> registers;
    std::vector<Gate> gates;
    uint64_t initial_bits = 0;
    std::optional<SuccessTarget> target;

    const QubitRange &reg(const std::string &name) const;
    QubitRange &add_register(const std::string &name, int width);
    void add(const Gate &g) {
        gates.push_back(g);
    }
    /// Pulses in the 3state lowering, counting conditional flips as applied.
    size_t pulse_count() const;
    /// Checks register disjointness and gate qubit ranges.
    void validate() const;

    /// Text form: header lines followed by one "GATE ..." line per gate.
    std::string dump() const;
    static CircuitProgram parse(const std::string &text);
};

/// Initial basis state of a program, with its register layout attached.
QuantumState initial_state(const CircuitProgram &program, ModelKind model);

/// Applies every gate of the program in order.
void execute(const CircuitProgram &program, QuantumState &state, ExecutionContext &ctx);

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod);

/// Table-lookup evaluation of f(A) = X^A mod N.
struct LookupSpec {
    int la = 6;
    uint64_t x = 2;
    uint64_t n = 21;
};

/// Registers A (la qubits) and F (bit width of n-1). A is put in superposition,
/// then every pattern a is matched by a multi-controlled flip that writes
/// X^a mod N into F. The other F bits serve as borrowed ancillas.
CircuitProgram build_f21_lookup(const LookupSpec &spec = {});

enum class ModexpVariant : uint8_t { Full, SingleMult, A3Bit };

struct ModexpSpec {
    int L = 4;
    uint64_t x = 7;
    uint64_t n = 15;
    ModexpVariant variant = ModexpVariant::Full;
};

const char *modexp_variant_name(ModexpVariant v);

/// Repeated-squaring modular exponentiation out of ripple-carry adders.
///
/// Registers: A (2L+1, 1 or 3 qubits), F the running product (L), scratch1
/// (L carries plus the adder control), scratch2 (L+1 bit accumulator plus the
/// modular-reduction flag).
CircuitProgram build_modexp(const ModexpSpec &spec);

/// Undo the superposition rotation on q, clear e0 and rescale. See
/// clear_and_rescale for the rescaling rule.
void reuse_renorm(QuantumState &state, int q, const std::vector<uint8_t> *support = nullptr);

struct GroverSpec {
    int key_bits = 2;
    uint64_t key = 0;
    int iterations = 1;
};

/// floor(pi / (4 asin(sqrt(t/N)))), at least 1.
int grover_iteration_count(uint64_t space_size, uint64_t num_solutions);

/// Registers l (key_bits), r, s and, for key_bits >= 3, a clean scratch of
/// key_bits - 2 qubits for the oracle's Toffoli chain.
CircuitProgram build_grover(const GroverSpec &spec);

/// Benchmark roster by name: f21, grover, mult, f15_3bit, f15_long.
CircuitProgram build_benchmark(const std::string &name, const GroverSpec &grover = {});

/// Appends a flip of target controlled by all of controls. Uses CNot/CCNot
/// directly for up to two controls and borrowed (dirty) ancillas otherwise.
/// Needs controls.size() - 2 ancillas, which are left unchanged.
void append_mcx(
    std::vector<Gate> &out, const std::vector<int> &controls, int target, const std::vector<int> &dirty_ancillas);

}  // namespace ionsim

#endif
