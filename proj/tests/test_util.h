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

#ifndef IONSIM_TEST_UTIL_H
#define IONSIM_TEST_UTIL_H

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ionsim/circuits.h"

namespace ionsim::testing {

constexpr double kPi = std::numbers::pi;

/// Bit-level evaluation of a program on a computational basis input. Knows
/// nothing about pulses: CNot/CCNot/flip are read as classical permutations.
/// Rotations other than flips are rejected.
inline std::vector<uint8_t> classical_eval(const CircuitProgram &p, std::vector<uint8_t> bits) {
    for (const Gate &g : p.gates) {
        const auto &q = g.qubits;
        switch (g.kind) {
            case GateKind::CNot:
                bits[q[1]] ^= bits[q[0]];
                break;
            case GateKind::CCNot:
                bits[q[2]] ^= bits[q[0]] & bits[q[1]];
                break;
            case GateKind::CPhase:
                break;
            case GateKind::Rotation:
                if (std::abs(g.theta - kPi) > 1e-12) {
                    throw std::logic_error("classical_eval: non-flip rotation " + g.str());
                }
                bits[q[0]] ^= 1;
                break;
            default:
                throw std::logic_error("classical_eval: unsupported gate " + g.str());
        }
    }
    return bits;
}

inline std::vector<uint8_t> to_bits(uint64_t v, int n) {
    std::vector<uint8_t> b(n);
    for (int i = 0; i < n; i++) {
        b[i] = (v >> i) & 1;
    }
    return b;
}

inline uint64_t read_reg(const std::vector<uint8_t> &bits, const QubitRange &r) {
    uint64_t v = 0;
    for (int k = 0; k < r.width; k++) {
        v |= (uint64_t)bits[r[k]] << k;
    }
    return v;
}

/// The program without the superposition rotations on reg, starting from
/// reg = value instead.
inline CircuitProgram with_basis_input(CircuitProgram p, const std::string &reg, uint64_t value) {
    const QubitRange r = p.reg(reg);
    std::vector<Gate> kept;
    bool prep = true;
    for (const Gate &g : p.gates) {
        bool is_prep = g.kind == GateKind::Rotation && std::abs(g.theta - kPi / 2) < 1e-12 &&
                       g.qubits[0] >= r.first && g.qubits[0] < r.end();
        if (prep && is_prep) {
            continue;
        }
        prep = false;
        kept.push_back(g);
    }
    p.gates = kept;
    for (int k = 0; k < r.width; k++) {
        if ((value >> k) & 1) {
            p.initial_bits |= uint64_t{1} << r[k];
        }
    }
    return p;
}

/// Independent modular exponentiation by repeated multiplication.
inline uint64_t slow_pow_mod(uint64_t x, uint64_t e, uint64_t n) {
    uint64_t r = 1 % n;
    for (uint64_t i = 0; i < e; i++) {
        r = r * x % n;
    }
    return r;
}

}  // namespace ionsim::testing

#endif
