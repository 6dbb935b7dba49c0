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

#include "ionsim/gates.h"

#include <functional>

#include "gtest/gtest.h"
#include "ionsim/analysis.h"
#include "ionsim/oracle.h"
#include "test_util.h"

using namespace ionsim;
using ionsim::testing::kPi;

namespace {

CircuitProgram single_gate(int num_qubits, const Gate &g) {
    CircuitProgram p;
    p.name = "gate";
    p.num_qubits = num_qubits;
    p.add(g);
    return p;
}

/// Largest deviation of the computational block of u from c·diag(sign)·P,
/// where P sends basis b to perm(b) and c is one shared unit phase.
double permutation_deviation(
    const DenseUnitary &u, const std::function<uint64_t(uint64_t)> &perm, const std::function<double(uint64_t)> &sign) {
    int m = u.num_qubits;
    uint64_t n = uint64_t{1} << m;
    Amp phase = u.m((Eigen::Index)computational_index(m, perm(0)), (Eigen::Index)computational_index(m, 0)) / sign(0);
    double worst = std::abs(std::abs(phase) - 1);
    for (uint64_t b = 0; b < n; b++) {
        for (uint64_t c = 0; c < n; c++) {
            Amp want = c == perm(b) ? phase * sign(b) : Amp{};
            Amp got = u.m((Eigen::Index)computational_index(m, c), (Eigen::Index)computational_index(m, b));
            worst = std::max(worst, std::abs(got - want));
        }
    }
    return worst;
}

/// Runs g on every basis input through apply_gate and compares with the
/// oracle column. Returns the largest deviation.
double simulated_vs_oracle(int num_qubits, const Gate &g) {
    DenseUnitary u = dense_unitary_of(single_gate(num_qubits, g));
    double worst = 0;
    for (uint64_t b = 0; b < (uint64_t{1} << num_qubits); b++) {
        QuantumState s(ModelKind::ThreeState, num_qubits, b);
        ExecutionContext ctx(ModelKind::ThreeState, 1, 0);
        apply_gate(s, g, ctx);
        Eigen::VectorXcd want = u.m * to_vector(QuantumState(ModelKind::ThreeState, num_qubits, b));
        worst = std::max(worst, assert_equivalent(s, want, 1e-10));
    }
    return worst;
}

/// Deterministic non-trivial superposition over all qubits.
void spread(QuantumState &s, ExecutionContext &ctx) {
    for (int q = 0; q < s.num_qubits(); q++) {
        apply_gate(s, Gate::rotation(q, 0.7 + 0.3 * q, 0.2 - 0.5 * q), ctx);
    }
}

double max_e1_or_aux(const QuantumState &s) {
    double worst = 0;
    for (size_t i = 0; i < s.size(); i++) {
        bool extra = s.model() == ModelKind::TwoState ? i >= s.plane_size() : false;
        if (s.model() == ModelKind::ThreeState) {
            for (int q = 0; q < s.num_qubits(); q++) {
                extra |= s.digit(i, q) == kE1;
            }
        }
        if (extra) {
            worst = std::max(worst, std::abs(s[i]));
        }
    }
    return worst;
}

}  // namespace

TEST(gates, lowering_counts) {
    EXPECT_EQ(lower_gate_threestate(Gate::cnot(0, 1)).size(), 5u);
    EXPECT_EQ(lower_gate_threestate(Gate::cphase(0, 1)).size(), 3u);
    EXPECT_EQ(lower_gate_threestate(Gate::rotation(0, kPi / 2, kPi / 2)).size(), 1u);
    EXPECT_EQ(lower_gate_threestate(Gate::ccnot(0, 1, 2)).size(), 8u);
    EXPECT_EQ(lower_gate_threestate(Gate::fourier(0)).size(), 2u);
    EXPECT_EQ(lower_gate_threestate(Gate::zero_reflect({0, 1, 2}, 3)).size(), 7u);
    EXPECT_EQ(lower_gate_threestate(Gate::set_bit(0)).size(), 1u);
}

TEST(gates, cnot_pulse_sequence) {
    auto p = lower_gate_threestate(Gate::cnot(2, 5));
    ASSERT_EQ(p.size(), 5u);
    EXPECT_EQ(p[0].kind, PulseKind::V);
    EXPECT_EQ(p[0].qubit, 5);
    EXPECT_DOUBLE_EQ(p[0].theta, kPi / 2);
    EXPECT_DOUBLE_EQ(p[0].phi, -kPi / 2);
    EXPECT_EQ(p[1].kind, PulseKind::U);
    EXPECT_EQ(p[1].qubit, 2);
    EXPECT_DOUBLE_EQ(p[1].theta, kPi);
    EXPECT_EQ(p[2].kind, PulseKind::UHat);
    EXPECT_EQ(p[2].qubit, 5);
    EXPECT_DOUBLE_EQ(p[2].theta, 2 * kPi);
    EXPECT_EQ(p[3].kind, PulseKind::U);
    EXPECT_EQ(p[4].kind, PulseKind::V);
    EXPECT_DOUBLE_EQ(p[4].phi, kPi / 2);
    for (const auto &x : p) {
        EXPECT_EQ(x.dtheta, 0);
        EXPECT_EQ(x.dphi, 0);
    }
}

TEST(gates, combine_rules_all_flags) {
    for (bool logic : {false, true}) {
        for (bool cancels : {false, true}) {
            EXPECT_DOUBLE_EQ(combine_error_angles(0.01, 0.01, CombineMethod::Simple, logic, cancels), 0.0);
            EXPECT_DOUBLE_EQ(combine_error_angles(0.01, 0.02, CombineMethod::Simple, logic, cancels), -0.01);
            double mixed = combine_error_angles(0.01, 0.02, CombineMethod::Mixed, logic, cancels);
            if (logic || cancels) {
                EXPECT_DOUBLE_EQ(mixed, -0.01);
            } else {
                EXPECT_DOUBLE_EQ(mixed, 0.03);
            }
        }
    }
    EXPECT_EQ(parse_combine_method(combine_method_name(CombineMethod::Mixed)), CombineMethod::Mixed);
}

TEST(gates, flags) {
    EXPECT_TRUE(Gate::cnot(0, 1).is_logic());
    EXPECT_TRUE(Gate::cphase(0, 1).is_logic());
    EXPECT_TRUE(Gate::ccnot(0, 1, 2).is_logic());
    EXPECT_TRUE(Gate::set_bit(0).is_logic());
    EXPECT_TRUE(Gate::clear_bit(0).is_logic());
    EXPECT_FALSE(Gate::rotation(0, 1, 1).is_logic());
    EXPECT_FALSE(Gate::fourier(0).is_logic());
    EXPECT_FALSE(Gate::zero_reflect({0, 1}, 2).is_logic());
    EXPECT_FALSE(Gate::zero_reflect({0, 1}, 2).intra_cancels());
    EXPECT_TRUE(Gate::ccnot(0, 1, 2).intra_cancels());
}

TEST(gates, check_rejects_bad_qubits) {
    EXPECT_THROW(Gate::cnot(1, 1).check(3), ContractViolation);
    EXPECT_THROW(Gate::cnot(0, 3).check(3), ContractViolation);
    EXPECT_THROW(Gate::ccnot(0, 1, 0).check(3), ContractViolation);
    EXPECT_NO_THROW(Gate::ccnot(0, 1, 2).check(3));
}

TEST(gates, str_parse_round_trip) {
    std::vector<Gate> gs{Gate::rotation(3, 0.1, -2.5), Gate::cnot(0, 4), Gate::cphase(2, 1), Gate::ccnot(0, 1, 2),
                         Gate::set_bit(1), Gate::clear_bit(0), Gate::reuse_renorm(2), Gate::fourier(1),
                         Gate::zero_reflect({0, 1, 2}, 3), Gate::flip(5)};
    for (const Gate &g : gs) {
        EXPECT_EQ(Gate::parse(g.str()), g) << g.str();
    }
    EXPECT_THROW(Gate::parse("GATE BOGUS 1"), ContractViolation);
}

TEST(gates, cnot_truth_table) {
    // Table 1 with control qubit 0 and target qubit 1: 10 <-> 11.
    DenseUnitary u = dense_unitary_of(single_gate(2, Gate::cnot(0, 1)));
    EXPECT_LE(u.unitarity_error(), 1e-12);
    auto perm = [](uint64_t b) { return b & 1 ? b ^ 2 : b; };
    EXPECT_LE(permutation_deviation(u, perm, [](uint64_t) { return 1.0; }), 1e-10);
    EXPECT_LE(simulated_vs_oracle(2, Gate::cnot(0, 1)), 1e-10);
    EXPECT_LE(simulated_vs_oracle(3, Gate::cnot(2, 0)), 1e-10);
}

TEST(gates, cphase_sign_pattern) {
    DenseUnitary u = dense_unitary_of(single_gate(2, Gate::cphase(0, 1)));
    auto id = [](uint64_t b) { return b; };
    EXPECT_LE(permutation_deviation(u, id, [](uint64_t b) { return b == 3 ? -1.0 : 1.0; }), 1e-10);
    EXPECT_LE(simulated_vs_oracle(2, Gate::cphase(1, 0)), 1e-10);
}

TEST(gates, ccnot_toffoli_table) {
    DenseUnitary u = dense_unitary_of(single_gate(3, Gate::ccnot(0, 1, 2)));
    auto perm = [](uint64_t b) { return (b & 3) == 3 ? b ^ 4 : b; };
    EXPECT_LE(permutation_deviation(u, perm, [](uint64_t) { return 1.0; }), 1e-10);
    DenseUnitary v = dense_unitary_of(single_gate(4, Gate::ccnot(3, 1, 0)));
    auto perm2 = [](uint64_t b) { return (b & 10) == 10 ? b ^ 1 : b; };
    EXPECT_LE(permutation_deviation(v, perm2, [](uint64_t) { return 1.0; }), 1e-10);
    EXPECT_LE(simulated_vs_oracle(3, Gate::ccnot(0, 2, 1)), 1e-10);
}

TEST(gates, flip_is_not) {
    DenseUnitary u = dense_unitary_of(single_gate(2, Gate::flip(1)));
    EXPECT_LE(permutation_deviation(u, [](uint64_t b) { return b ^ 2; }, [](uint64_t) { return 1.0; }), 1e-12);
}

TEST(gates, fourier_is_hadamard) {
    DenseUnitary u = dense_unitary_of(single_gate(1, Gate::fourier(0)));
    Amp a = u.m((Eigen::Index)computational_index(1, 0), (Eigen::Index)computational_index(1, 0));
    Amp b = u.m((Eigen::Index)computational_index(1, 1), (Eigen::Index)computational_index(1, 0));
    Amp c = u.m((Eigen::Index)computational_index(1, 0), (Eigen::Index)computational_index(1, 1));
    Amp d = u.m((Eigen::Index)computational_index(1, 1), (Eigen::Index)computational_index(1, 1));
    double r = 1 / std::sqrt(2.0);
    Amp ph = a / r;
    EXPECT_NEAR(std::abs(ph), 1, 1e-12);
    EXPECT_LE(std::abs(b - ph * r), 1e-12);
    EXPECT_LE(std::abs(c - ph * r), 1e-12);
    EXPECT_LE(std::abs(d + ph * r), 1e-12);
}

TEST(gates, zero_reflect_on_l_space) {
    // R restricted to l with s = 1: diag(1, -1, -1, -1) up to phase.
    DenseUnitary u = dense_unitary_of(single_gate(3, Gate::zero_reflect({0, 1}, 2)));
    double worst = 0;
    Amp phase = u.m((Eigen::Index)computational_index(3, 4), (Eigen::Index)computational_index(3, 4));
    for (uint64_t l = 0; l < 4; l++) {
        uint64_t b = l | 4;
        Amp got = u.m((Eigen::Index)computational_index(3, b), (Eigen::Index)computational_index(3, b));
        worst = std::max(worst, std::abs(got - phase * (l == 0 ? 1.0 : -1.0)));
    }
    EXPECT_NEAR(std::abs(phase), 1, 1e-12);
    EXPECT_LE(worst, 1e-12);
}

TEST(gates, set_and_clear_bit) {
    for (ModelKind model : {ModelKind::ThreeState, ModelKind::TwoState}) {
        for (uint64_t seed = 1; seed <= 8; seed++) {
            QuantumState s(model, 2, 0);
            ExecutionContext ctx(model, seed, 0);
            apply_gate(s, Gate::rotation(0, kPi / 2, 0.4), ctx);
            apply_gate(s, Gate::set_bit(0), ctx);
            QubitRange r{"q", 0, 1};
            EXPECT_NEAR(probability_of_value(s, r, 1), 1, 1e-12);
            apply_gate(s, Gate::clear_bit(0), ctx);
            EXPECT_NEAR(probability_of_value(s, r, 0), 1, 1e-12);
            EXPECT_NEAR(squared_norm(s), 1, 1e-12);
        }
    }
}

TEST(gates, models_agree_on_main_plane) {
    std::vector<Gate> gs{Gate::cnot(0, 2),      Gate::cnot(2, 1),        Gate::cphase(1, 0),
                         Gate::ccnot(0, 1, 2),  Gate::ccnot(2, 0, 3),    Gate::fourier(3),
                         Gate::flip(1),         Gate::zero_reflect({0, 1, 2}, 3)};
    for (const Gate &g : gs) {
        QuantumState s3(ModelKind::ThreeState, 4, 0b1010);
        QuantumState s2(ModelKind::TwoState, 4, 0b1010);
        ExecutionContext c3(ModelKind::ThreeState, 1, 0), c2(ModelKind::TwoState, 1, 0);
        spread(s3, c3);
        spread(s2, c2);
        apply_gate(s3, g, c3);
        apply_gate(s2, g, c2);
        EXPECT_NEAR(squared_norm(s3), 1, 1e-12);
        EXPECT_NEAR(squared_norm(s2), 1, 1e-12);
        EXPECT_LE(max_e1_or_aux(s3), 1e-10) << g.str();
        EXPECT_LE(max_e1_or_aux(s2), 1e-10) << g.str();
        QuantumState p = project_to_twostate(s3);
        double worst = 0;
        for (size_t i = 0; i < p.size(); i++) {
            worst = std::max(worst, std::abs(p[i] - s2[i]));
        }
        EXPECT_LE(worst, 1e-12) << g.str();
    }
}

TEST(gates, self_inverse) {
    for (const Gate &g : {Gate::cnot(0, 1), Gate::cphase(1, 2), Gate::ccnot(2, 0, 1)}) {
        for (ModelKind model : {ModelKind::ThreeState, ModelKind::TwoState}) {
            QuantumState s(model, 3, 0b001);
            ExecutionContext ctx(model, 1, 0);
            spread(s, ctx);
            QuantumState before = s;
            apply_gate(s, g, ctx);
            apply_gate(s, g, ctx);
            EXPECT_NEAR(fidelity(s, before), 1, 1e-11) << g.str();
        }
    }
}

TEST(gates, plan_twostate_groups_passes) {
    auto cnot = plan_twostate(lower_gate_threestate(Gate::cnot(0, 1)));
    ASSERT_EQ(cnot.size(), 5u);
    EXPECT_FALSE(cnot[1].paired);
    ASSERT_TRUE(cnot[2].paired);
    ASSERT_EQ(cnot[2].pass.pairs.size(), 1u);
    EXPECT_EQ(cnot[2].pass.count, 1u);
    EXPECT_EQ(cnot[2].pass.pairs[0].first, 0u);
    EXPECT_EQ(cnot[2].pass.pairs[0].last, 0u);

    auto ccnot = plan_twostate(lower_gate_threestate(Gate::ccnot(0, 1, 2)));
    ASSERT_EQ(ccnot.size(), 5u);
    ASSERT_TRUE(ccnot[2].paired);
    const auto &pass = ccnot[2].pass;
    EXPECT_EQ(pass.begin, 2u);
    EXPECT_EQ(pass.count, 4u);
    ASSERT_EQ(pass.pairs.size(), 2u);
    EXPECT_EQ(pass.pairs[0].qubit, 1);
    EXPECT_EQ(pass.pairs[0].first, 0u);
    EXPECT_EQ(pass.pairs[0].last, 3u);
    EXPECT_EQ(pass.pairs[1].qubit, 2);
    EXPECT_EQ(pass.pairs[1].first, 1u);
    EXPECT_EQ(pass.pairs[1].last, 2u);

    auto zr = plan_twostate(lower_gate_threestate(Gate::zero_reflect({0, 1, 2}, 3)));
    ASSERT_EQ(zr.size(), 3u);
    ASSERT_TRUE(zr[1].paired);
    ASSERT_EQ(zr[1].pass.pairs.size(), 3u);
    EXPECT_EQ(zr[1].pass.pairs[0].kind, PulseKind::UTilde);
    EXPECT_EQ(zr[1].pass.pairs[2].kind, PulseKind::UHat);
    EXPECT_EQ(zr[1].pass.pairs[2].first, zr[1].pass.pairs[2].last);
}

TEST(gates, two_state_combine_method_matters_only_off_logic) {
    auto run = [](const Gate &g, CombineMethod method) {
        QuantumState s(ModelKind::TwoState, 3, 0b100);
        ExecutionContext ctx(ModelKind::TwoState, 1, 0);
        spread(s, ctx);
        ctx.err = ErrorConfig{ErrorMode::Bias, 0.02, 0};
        ctx.combine = method;
        apply_gate(s, g, ctx);
        return s;
    };
    Gate cp = Gate::cphase(0, 1);
    QuantumState a = run(cp, CombineMethod::Simple), b = run(cp, CombineMethod::Mixed);
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_EQ(a[i], b[i]);
    }
    Gate zr = Gate::zero_reflect({0, 1}, 2);
    QuantumState c = run(zr, CombineMethod::Simple), d = run(zr, CombineMethod::Mixed);
    EXPECT_NEAR(squared_norm(c), 1, 1e-12);
    EXPECT_NEAR(squared_norm(d), 1, 1e-12);
    EXPECT_LT(fidelity(c, d), 1 - 1e-8);
}

TEST(gates, bias_beats_noise_on_cnot_chain) {
    CircuitProgram p;
    p.name = "cnot50";
    p.num_qubits = 3;
    for (int q = 0; q < 3; q++) {
        p.add(Gate::rotation(q, kPi / 2, kPi / 2));
    }
    for (int i = 0; i < 50; i++) {
        p.add(Gate::cnot(i % 3, (i + 1) % 3));
    }
    RunSettings bias;
    bias.trials = 200;
    bias.err = ErrorConfig{ErrorMode::Bias, kPi / 256, 0};
    RunSettings noise = bias;
    noise.err = ErrorConfig{ErrorMode::Noise, 0, kPi / 256};
    double fb = run_benchmark(p, bias).mean_fidelity;
    double fn = run_benchmark(p, noise).mean_fidelity;
    EXPECT_GE(fb, fn);
}
