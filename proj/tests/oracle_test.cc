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

#include "gtest/gtest.h"
#include "ionsim/rng.h"
#include "test_util.h"

using namespace ionsim;
using ionsim::testing::kPi;

namespace {

std::vector<PulseSpec> random_pulses(RngStream &rng, int num_qubits, int count) {
    const PulseKind kinds[] = {PulseKind::V, PulseKind::U, PulseKind::UHat, PulseKind::UTilde};
    std::vector<PulseSpec> out;
    for (int i = 0; i < count; i++) {
        PulseSpec p;
        p.kind = kinds[(int)(rng.uniform() * 4)];
        p.qubit = (int)(rng.uniform() * num_qubits);
        p.theta = (rng.uniform() * 4 - 2) * kPi;
        p.phi = (rng.uniform() * 2 - 1) * kPi;
        out.push_back(p);
    }
    return out;
}

/// Random normalized state with all 3state entries populated.
QuantumState random_state(RngStream &rng, int num_qubits) {
    QuantumState s(ModelKind::ThreeState, num_qubits, 0);
    for (Amp &a : s.amps()) {
        a = Amp{rng.gaussian(), rng.gaussian()};
    }
    renormalize(s);
    return s;
}

}  // namespace

TEST(oracle, empty_program_is_identity) {
    CircuitProgram p;
    p.num_qubits = 2;
    DenseUnitary u = dense_unitary_of(p);
    EXPECT_EQ(u.dim(), 18);
    EXPECT_LE((u.m - Eigen::MatrixXcd::Identity(18, 18)).cwiseAbs().maxCoeff(), 0.0);
    QuantumState s(ModelKind::ThreeState, 2, 0b11);
    EXPECT_EQ(assert_equivalent(s, u.m * to_vector(s), 1e-12), 0.0);
}

TEST(oracle, random_sequences_match_simulator) {
    RngStream rng(2024);
    for (int c = 0; c < 20; c++) {
        auto pulses = random_pulses(rng, 2, 12);
        DenseUnitary u = dense_unitary_of(pulses, 2);
        EXPECT_LE(u.unitarity_error(), 1e-12);
        QuantumState s = random_state(rng, 2);
        Eigen::VectorXcd want = u.m * to_vector(s);
        for (const auto &p : pulses) {
            apply_pulse(s, p);
        }
        EXPECT_LE(assert_equivalent(s, want, 1e-12), 1e-12) << c;
    }
}

TEST(oracle, composition_is_associative) {
    RngStream rng(77);
    auto pulses = random_pulses(rng, 3, 30);
    DenseUnitary whole = dense_unitary_of(pulses, 3);
    for (size_t cut : {0, 1, 13, 29, 30}) {
        std::vector<PulseSpec> a(pulses.begin(), pulses.begin() + cut), b(pulses.begin() + cut, pulses.end());
        Eigen::MatrixXcd joined = dense_unitary_of(b, 3).m * dense_unitary_of(a, 3).m;
        EXPECT_LE((joined - whole.m).cwiseAbs().maxCoeff(), 1e-12) << cut;
    }
}

TEST(oracle, perturbed_pulse_is_reported) {
    std::vector<PulseSpec> pulses{{PulseKind::V, 0, kPi / 2, 0.3}, {PulseKind::U, 1, kPi, 0}};
    DenseUnitary u = dense_unitary_of(pulses, 2);
    QuantumState s(ModelKind::ThreeState, 2, 0b10);
    Eigen::VectorXcd want = u.m * to_vector(s);
    pulses[0].dtheta = 1e-3;
    for (const auto &p : pulses) {
        apply_pulse(s, p);
    }
    try {
        assert_equivalent(s, want, 1e-10);
        FAIL() << "perturbation not detected";
    } catch (const ToleranceError &e) {
        EXPECT_GT(e.deviation, 1e-10);
    }
}

TEST(oracle, limits) {
    CircuitProgram big;
    big.num_qubits = kOracleMaxQubits + 1;
    EXPECT_THROW(dense_unitary_of(big), CapacityError);
    CircuitProgram meas;
    meas.num_qubits = 1;
    meas.add(Gate::set_bit(0));
    EXPECT_THROW(dense_unitary_of(meas), ContractViolation);
}

TEST(oracle, computational_index_and_projection) {
    QuantumState s(ModelKind::ThreeState, 3, 0b101);
    EXPECT_EQ(s[computational_index(3, 0b101)], Amp(1, 0));
    QuantumState t = project_to_twostate(s);
    EXPECT_EQ(t.model(), ModelKind::TwoState);
    QuantumState direct(ModelKind::TwoState, 3, 0b101);
    for (size_t i = 0; i < t.size(); i++) {
        EXPECT_EQ(t[i], direct[i]);
    }
}
