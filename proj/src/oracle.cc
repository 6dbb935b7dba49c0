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

#include "ionsim/oracle.h"

#include <cmath>

namespace ionsim {

namespace {

size_t pow3(int k) {
    size_t r = 1;
    while (k-- > 0) {
        r *= 3;
    }
    return r;
}

void check_size(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kOracleMaxQubits) {
        throw CapacityError("dense oracle supports 1 to " + std::to_string(kOracleMaxQubits) + " qubits");
    }
}

/// Position of (digits with digit q replaced by level, phonon) in the 3state layout.
size_t with_digit(size_t pos, int q, uint8_t level, uint8_t phonon) {
    size_t s = 2 * pow3(q);
    size_t cur = (pos / s) % 3;
    return pos - cur * s + level * s - (pos & 1) + phonon;
}

}  // namespace

double DenseUnitary::unitarity_error() const {
    Eigen::MatrixXcd d = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff();
}

DenseUnitary dense_identity(int num_qubits) {
    check_size(num_qubits);
    Eigen::Index d = (Eigen::Index)(2 * pow3(num_qubits));
    return DenseUnitary{num_qubits, Eigen::MatrixXcd::Identity(d, d)};
}

DenseUnitary dense_pulse(const PulseSpec &p, int num_qubits) {
    check_size(num_qubits);
    if (p.qubit < 0 || p.qubit >= num_qubits) {
        throw ContractViolation("pulse qubit out of range for the oracle");
    }
    size_t d = 2 * pow3(num_qubits);
    PulseMatrix pm = pulse_matrix(p.kind, p.effective_theta(), p.effective_phi());
    DenseUnitary u{num_qubits, Eigen::MatrixXcd::Zero((Eigen::Index)d, (Eigen::Index)d)};
    size_t s = 2 * pow3(p.qubit);
    for (size_t col = 0; col < d; col++) {
        uint8_t level = (uint8_t)((col / s) % 3);
        uint8_t phonon = col & 1;
        if (p.kind == PulseKind::V) {
            if (level == kE1) {
                u.m(col, col) = 1;
                continue;
            }
            for (uint8_t r = 0; r < 2; r++) {
                u.m(with_digit(col, p.qubit, r, phonon), col) += pm(r, level);
            }
            continue;
        }
        auto lv = coupled_levels(p.kind);
        if (level != lv[0] && level != lv[1]) {
            u.m(col, col) = 1;
            continue;
        }
        int local = (level == lv[0] ? 0 : 2) + phonon;
        for (int r = 0; r < 4; r++) {
            u.m(with_digit(col, p.qubit, lv[r / 2], (uint8_t)(r & 1)), col) += pm(r, local);
        }
    }
    return u;
}

DenseUnitary dense_unitary_of(const std::vector<PulseSpec> &pulses, int num_qubits) {
    DenseUnitary u = dense_identity(num_qubits);
    for (const PulseSpec &p : pulses) {
        u.m = dense_pulse(p, num_qubits).m * u.m;
    }
    return u;
}

DenseUnitary dense_unitary_of(const CircuitProgram &program) {
    std::vector<PulseSpec> pulses;
    for (const Gate &g : program.gates) {
        if (g.is_measurement() || g.kind == GateKind::ReuseRenorm) {
            throw ContractViolation("dense oracle covers unitary gates only");
        }
        auto lowered = lower_gate_threestate(g);
        pulses.insert(pulses.end(), lowered.begin(), lowered.end());
    }
    return dense_unitary_of(pulses, program.num_qubits);
}

Eigen::VectorXcd to_vector(const QuantumState &state) {
    Eigen::VectorXcd v((Eigen::Index)state.size());
    for (size_t i = 0; i < state.size(); i++) {
        v((Eigen::Index)i) = state[i];
    }
    return v;
}

double assert_equivalent(const QuantumState &simulated, const Eigen::VectorXcd &expected, double tol) {
    if ((size_t)expected.size() != simulated.size()) {
        throw ContractViolation("assert_equivalent: size mismatch");
    }
    Amp phase{1, 0};
    for (Eigen::Index i = 0; i < expected.size(); i++) {
        if (std::abs(expected(i)) > 1e-12) {
            Amp sim = simulated[(size_t)i];
            if (std::abs(sim) > 0) {
                phase = (sim / std::abs(sim)) / (expected(i) / std::abs(expected(i)));
            }
            break;
        }
    }
    double worst = 0;
    for (Eigen::Index i = 0; i < expected.size(); i++) {
        worst = std::max(worst, std::abs(simulated[(size_t)i] - phase * expected(i)));
    }
    if (worst > tol) {
        throw ToleranceError(
            "state deviates from the oracle by " + std::to_string(worst) + " (tolerance " + std::to_string(tol) + ")",
            worst);
    }
    return worst;
}

size_t computational_index(int num_qubits, uint64_t bits) {
    size_t pos = 0;
    for (int q = 0; q < num_qubits; q++) {
        if ((bits >> q) & 1) {
            pos += 2 * pow3(q);
        }
    }
    return pos;
}

QuantumState project_to_twostate(const QuantumState &three) {
    if (three.model() != ModelKind::ThreeState) {
        throw ContractViolation("project_to_twostate expects a 3state vector");
    }
    int M = three.num_qubits();
    QuantumState two(ModelKind::TwoState, M, 0);
    two[0] = 0;
    for (uint64_t bits = 0; bits < (uint64_t{1} << M); bits++) {
        size_t src = computational_index(M, bits);
        for (size_t ph = 0; ph < 2; ph++) {
            two[bits * 2 + ph] = three[src + ph];
        }
    }
    two.registers() = three.registers();
    return two;
}

}  // namespace ionsim
