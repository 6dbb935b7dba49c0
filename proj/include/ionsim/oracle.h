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

#ifndef IONSIM_ORACLE_H
#define IONSIM_ORACLE_H

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "ionsim/circuits.h"
#include "ionsim/pulse.h"
#include "ionsim/state.h"

namespace ionsim {

/// Brute-force reference: full 2·3^M matrices over the 3state pulse space.
struct DenseUnitary {
    int num_qubits = 0;
    Eigen::MatrixXcd m;

    Eigen::Index dim() const {
        return m.rows();
    }
    /// Largest |(U U^dagger - I)_ij|.
    double unitarity_error() const;
};

struct ToleranceError : std::runtime_error {
    double deviation;
    ToleranceError(const std::string &what, double deviation) : std::runtime_error(what), deviation(deviation) {
    }
};

constexpr int kOracleMaxQubits = 4;

DenseUnitary dense_identity(int num_qubits);

/// Full-space embedding of one pulse, built from pulse_matrix entrywise.
DenseUnitary dense_pulse(const PulseSpec &p, int num_qubits);

/// Product of the pulse embeddings in application order.
DenseUnitary dense_unitary_of(const std::vector<PulseSpec> &pulses, int num_qubits);

/// Zero-error program unitary. Measurement gates are rejected.
DenseUnitary dense_unitary_of(const CircuitProgram &program);

Eigen::VectorXcd to_vector(const QuantumState &state);

/// Max elementwise |simulated - phase·expected| with phase fixed by the first
/// entry of expected whose magnitude exceeds 1e-12. Throws ToleranceError
/// when the deviation exceeds tol.
double assert_equivalent(const QuantumState &simulated, const Eigen::VectorXcd &expected, double tol);

/// The 3state layout entries of a computational basis state with phonon 0.
size_t computational_index(int num_qubits, uint64_t bits);

/// Copies the third-level-free part of a 3state vector into the main plane of
/// a 2state vector of the same qubit count.
QuantumState project_to_twostate(const QuantumState &three);

}  // namespace ionsim

#endif
