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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace ionsim {

namespace {

constexpr double kPi = std::numbers::pi;

struct GateInfo {
    GateKind kind;
    const char *name;
    int arity;  ///< Number of qubits, or -1 for variadic.
    int params;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::Rotation, "ROT", 1, 2},
    {GateKind::CNot, "CNOT", 2, 0},
    {GateKind::CPhase, "CPHASE", 2, 0},
    {GateKind::CCNot, "CCNOT", 3, 0},
    {GateKind::SetBit, "SETBIT", 1, 0},
    {GateKind::ClearBit, "CLEARBIT", 1, 0},
    {GateKind::ReuseRenorm, "REUSE", 1, 0},
    {GateKind::Fourier, "FOURIER", 1, 0},
    {GateKind::ZeroReflect, "ZREFLECT", -1, 0},
};

const GateInfo &info(GateKind kind) {
    for (const auto &e : kGateTable) {
        if (e.kind == kind) {
            return e;
        }
    }
    throw ContractViolation("unknown gate kind");
}

PulseSpec pulse(PulseKind kind, int q, double theta, double phi = 0) {
    return PulseSpec{kind, q, theta, phi, 0, 0};
}

bool is_full_turn(double theta) {
    return std::abs(std::abs(theta) - 2 * kPi) < 1e-9;
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    return info(kind).name;
}

GateKind parse_gate_kind(const std::string &name) {
    for (const auto &e : kGateTable) {
        if (name == e.name) {
            return e.kind;
        }
    }
    throw ContractViolation("unknown gate name '" + name + "'");
}

Gate Gate::rotation(int q, double theta, double phi) {
    return Gate{GateKind::Rotation, {q}, theta, phi};
}
Gate Gate::flip(int q) {
    return rotation(q, kPi, 0);
}
Gate Gate::cnot(int control, int target) {
    return Gate{GateKind::CNot, {control, target}};
}
Gate Gate::cphase(int m, int n) {
    return Gate{GateKind::CPhase, {m, n}};
}
Gate Gate::ccnot(int c1, int c2, int target) {
    return Gate{GateKind::CCNot, {c1, c2, target}};
}
Gate Gate::set_bit(int q) {
    return Gate{GateKind::SetBit, {q}};
}
Gate Gate::clear_bit(int q) {
    return Gate{GateKind::ClearBit, {q}};
}
Gate Gate::reuse_renorm(int q) {
    return Gate{GateKind::ReuseRenorm, {q}};
}
Gate Gate::fourier(int q) {
    return Gate{GateKind::Fourier, {q}};
}
Gate Gate::zero_reflect(const std::vector<int> &l, int s) {
    Gate g{GateKind::ZeroReflect, l};
    g.qubits.push_back(s);
    return g;
}

bool Gate::is_logic() const {
    switch (kind) {
        case GateKind::CNot:
        case GateKind::CPhase:
        case GateKind::CCNot:
        case GateKind::SetBit:
        case GateKind::ClearBit:
            return true;
        default:
            return false;
    }
}

bool Gate::intra_cancels() const {
    // Both halves of every merged pair in these templates share theta and phi,
    // so their systematic parts cancel in the difference.
    return kind == GateKind::CNot || kind == GateKind::CPhase || kind == GateKind::CCNot;
}

void Gate::check(int num_qubits) const {
    const auto &e = info(kind);
    if (e.arity >= 0 ? (int)qubits.size() != e.arity : qubits.size() < 2) {
        throw ContractViolation(std::string("wrong qubit count for gate ") + e.name);
    }
    for (size_t a = 0; a < qubits.size(); a++) {
        if (qubits[a] < 0 || qubits[a] >= num_qubits) {
            throw ContractViolation(std::string("qubit out of range in gate ") + e.name);
        }
        for (size_t b = 0; b < a; b++) {
            if (qubits[a] == qubits[b]) {
                throw ContractViolation(std::string("repeated qubit in gate ") + e.name);
            }
        }
    }
}

std::string Gate::str() const {
    const auto &e = info(kind);
    std::string out = "GATE ";
    out += e.name;
    for (int q : qubits) {
        out += " " + std::to_string(q);
    }
    if (e.params) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " %.17g %.17g", theta, phi);
        out += buf;
    }
    return out;
}

Gate Gate::parse(const std::string &line) {
    std::istringstream in(line);
    std::string word, name;
    if (!(in >> word >> name) || word != "GATE") {
        throw ContractViolation("malformed gate line: " + line);
    }
    Gate g;
    g.kind = parse_gate_kind(name);
    const auto &e = info(g.kind);
    std::vector<std::string> rest;
    while (in >> word) {
        rest.push_back(word);
    }
    if (rest.size() < (size_t)e.params) {
        throw ContractViolation("malformed gate line: " + line);
    }
    size_t nq = rest.size() - e.params;
    for (size_t k = 0; k < nq; k++) {
        g.qubits.push_back(std::stoi(rest[k]));
    }
    if (e.params) {
        g.theta = std::stod(rest[nq]);
        g.phi = std::stod(rest[nq + 1]);
    }
    return g;
}

std::vector<PulseSpec> lower_gate_threestate(const Gate &g) {
    using K = PulseKind;
    const auto &q = g.qubits;
    switch (g.kind) {
        case GateKind::Rotation:
            return {pulse(K::V, q[0], g.theta, g.phi)};
        case GateKind::CNot:
            return {
                pulse(K::V, q[1], kPi / 2, -kPi / 2),
                pulse(K::U, q[0], kPi),
                pulse(K::UHat, q[1], 2 * kPi),
                pulse(K::U, q[0], kPi),
                pulse(K::V, q[1], kPi / 2, kPi / 2),
            };
        case GateKind::CPhase:
            return {
                pulse(K::U, q[0], kPi),
                pulse(K::UHat, q[1], 2 * kPi),
                pulse(K::U, q[0], kPi),
            };
        case GateKind::CCNot:
            return {
                pulse(K::V, q[2], kPi / 2, -kPi / 2),
                pulse(K::U, q[0], kPi),
                pulse(K::UHat, q[1], kPi),
                pulse(K::UHat, q[2], kPi),
                pulse(K::UHat, q[2], kPi),
                pulse(K::UHat, q[1], kPi),
                pulse(K::U, q[0], kPi),
                pulse(K::V, q[2], kPi / 2, kPi / 2),
            };
        case GateKind::SetBit:
        case GateKind::ClearBit:
            return {pulse(K::V, q[0], kPi, -kPi / 2)};
        case GateKind::ReuseRenorm:
            return {pulse(K::V, q[0], kPi / 2, -kPi / 2)};
        case GateKind::Fourier:
            return {pulse(K::V, q[0], kPi / 2, -kPi / 2), pulse(K::U, q[0], 2 * kPi)};
        case GateKind::ZeroReflect: {
            int s = q.back();
            int L = (int)q.size() - 1;
            std::vector<PulseSpec> out{pulse(K::U, s, kPi)};
            for (int j = 0; j < L - 1; j++) {
                out.push_back(pulse(K::UTilde, q[j], kPi));
            }
            out.push_back(pulse(K::UHat, q[L - 1], 2 * kPi));
            for (int j = L - 2; j >= 0; j--) {
                out.push_back(pulse(K::UTilde, q[j], -kPi));
            }
            out.push_back(pulse(K::U, s, kPi));
            return out;
        }
    }
    return {};
}

const char *combine_method_name(CombineMethod method) {
    return method == CombineMethod::Simple ? "simple" : "mixed";
}

CombineMethod parse_combine_method(const std::string &text) {
    if (text == "simple") {
        return CombineMethod::Simple;
    }
    if (text == "mixed") {
        return CombineMethod::Mixed;
    }
    throw ContractViolation("unknown combine method '" + text + "'");
}

double combine_error_angles(
    double delta_first, double delta_second, CombineMethod method, bool gate_is_logic, bool intra_cancels) {
    if (method == CombineMethod::Simple || gate_is_logic || intra_cancels) {
        return delta_first - delta_second;
    }
    return delta_first + delta_second;
}

std::vector<TwoStateStep> plan_twostate(const std::vector<PulseSpec> &pulses) {
    std::vector<TwoStateStep> steps;
    size_t k = 0;
    while (k < pulses.size()) {
        PulseKind kind = pulses[k].kind;
        if (kind == PulseKind::V || kind == PulseKind::U) {
            steps.push_back(TwoStateStep{false, k, {}});
            k++;
            continue;
        }
        PairedPass pass;
        pass.begin = k;
        std::vector<size_t> open;
        while (k < pulses.size() && (pulses[k].kind == PulseKind::UHat || pulses[k].kind == PulseKind::UTilde)) {
            const PulseSpec &p = pulses[k];
            size_t slot = k - pass.begin;
            if (is_full_turn(p.theta)) {
                pass.pairs.push_back(PassPair{p.kind, p.qubit, slot, slot});
            } else {
                int found = -1;
                for (int t = (int)open.size() - 1; t >= 0; t--) {
                    const PulseSpec &o = pulses[pass.begin + open[t]];
                    if (o.kind == p.kind && o.qubit == p.qubit) {
                        found = t;
                        break;
                    }
                }
                if (found < 0) {
                    open.push_back(slot);
                } else {
                    pass.pairs.push_back(PassPair{p.kind, p.qubit, open[found], slot});
                    open.erase(open.begin() + found);
                }
            }
            k++;
        }
        if (!open.empty()) {
            throw ContractViolation("unpaired third-level pulse cannot be merged for the 2state model");
        }
        pass.count = k - pass.begin;
        std::sort(pass.pairs.begin(), pass.pairs.end(), [](const PassPair &a, const PassPair &b) {
            return a.first < b.first;
        });
        steps.push_back(TwoStateStep{true, pass.begin, std::move(pass)});
    }
    return steps;
}

ExecutionContext::ExecutionContext(ModelKind model, uint64_t seed, uint64_t trial)
    : model(model),
      op_rng(seed, trial, StreamTag::OpError),
      emit_rng(seed, trial, StreamTag::Emission),
      measure_rng(seed, trial, StreamTag::Measurement) {
}

namespace {

void decohere(QuantumState &state, ExecutionContext &ctx, InFlightMask mask) {
    ctx.pulses_applied++;
    if (decoherence_after_pulse(state, ctx.dec, ctx.emit_rng, mask)) {
        ctx.emissions++;
    }
}

void run_pass(
    QuantumState &state,
    const Gate &g,
    const PairedPass &pass,
    const std::vector<PulseSpec> &pulses,
    ExecutionContext &ctx) {
    size_t np = pass.pairs.size();
    std::vector<Mat2> mats(np);
    std::vector<size_t> bit(np), want(np);
    for (size_t p = 0; p < np; p++) {
        const PassPair &pp = pass.pairs[p];
        const PulseSpec &a = pulses[pass.begin + pp.first];
        const PulseSpec &b = pulses[pass.begin + pp.last];
        PairedRotation r{pp.kind, pp.qubit, a.theta, a.dtheta, a.phi, a.dphi};
        if (pp.first != pp.last) {
            r.total_theta += b.theta;
            r.combined_delta = combine_error_angles(a.dtheta, b.dtheta, ctx.combine, g.is_logic(), g.intra_cancels());
            r.combined_dphi = combine_error_angles(a.dphi, b.dphi, ctx.combine, g.is_logic(), g.intra_cancels());
        }
        mats[p] = r.matrix();
        bit[p] = state.stride(pp.qubit);
        want[p] = r.trigger_level() ? bit[p] : 0;
    }
    size_t plane = state.plane_size();
    Amp *main = state.amps().data();
    Amp *aux = main + plane;
    auto match = [&](size_t i) -> int {
        for (size_t p = 0; p < np; p++) {
            if ((i & bit[p]) == want[p]) {
                return (int)p;
            }
        }
        return -1;
    };

    if (!ctx.dec.active()) {
        for (size_t i = 1; i < plane; i += 2) {
            int p = match(i);
            if (p >= 0) {
                rotate_pair(mats[p], main[i], aux[i]);
            }
        }
        ctx.pulses_applied += pass.count;
        return;
    }

    // Emulate the replaced pulses slot by slot so decoherence sees the same
    // phonon population as the 3state model: a matched element leaves the
    // phonon mode at its pair's first slot and returns at the last.
    std::vector<int8_t> assign(plane, -1);
    for (size_t i = 1; i < plane; i += 2) {
        assign[i] = (int8_t)match(i);
    }
    std::vector<uint8_t> in_flight(plane, 0);
    for (size_t slot = 0; slot < pass.count; slot++) {
        for (size_t i = 1; i < plane; i += 2) {
            int p = assign[i];
            if (p < 0) {
                continue;
            }
            const PassPair &pp = pass.pairs[p];
            if (pp.first == slot) {
                rotate_pair(mats[p], main[i], aux[i]);
            }
            in_flight[i] = pp.first <= slot && slot < pp.last;
        }
        decohere(state, ctx, in_flight.data());
    }
}

void run_pulses(QuantumState &state, const Gate &g, std::vector<PulseSpec> pulses, ExecutionContext &ctx) {
    for (PulseSpec &p : pulses) {
        ErrorAngles d = draw_error_angles(ctx.err, ctx.op_rng);
        p.dtheta = d.dtheta;
        p.dphi = d.dphi;
    }
    if (ctx.model == ModelKind::ThreeState) {
        for (const PulseSpec &p : pulses) {
            apply_pulse(state, p);
            decohere(state, ctx, nullptr);
        }
        return;
    }
    for (const TwoStateStep &step : plan_twostate(pulses)) {
        if (step.paired) {
            run_pass(state, g, step.pass, pulses, ctx);
        } else {
            apply_pulse(state, pulses[step.pulse]);
            decohere(state, ctx, nullptr);
        }
    }
}

}  // namespace

void clear_and_rescale(QuantumState &state, int q, const std::vector<uint8_t> *support) {
    if (support != nullptr && support->size() != state.size()) {
        throw ContractViolation("reference support does not match the state size");
    }
    double before = squared_norm(state);
    double on = 0, off = 0;
    for (size_t i = 0; i < state.size(); i++) {
        if (state.digit(i, q) == kE0) {
            state[i] = 0;
        } else if (support != nullptr && (*support)[i]) {
            on += std::norm(state[i]);
        } else {
            off += std::norm(state[i]);
        }
    }
    if (on + off == 0) {
        throw DegenerateStateError("no amplitude left after clearing the reused qubit");
    }
    if (support != nullptr && off > 0 && before > on) {
        double f = std::sqrt((before - on) / off);
        for (size_t i = 0; i < state.size(); i++) {
            if (!(*support)[i]) {
                state[i] *= f;
            }
        }
        return;
    }
    double f = std::sqrt(before / (on + off));
    if (f != 1) {
        for (Amp &a : state.amps()) {
            a *= f;
        }
    }
}

void apply_gate(QuantumState &state, const Gate &g, ExecutionContext &ctx) {
    if (state.model() != ctx.model) {
        throw ContractViolation("state model does not match the execution context");
    }
    g.check(state.num_qubits());
    switch (g.kind) {
        case GateKind::SetBit:
        case GateKind::ClearBit: {
            int bit = measure_qubit(state, g.qubits[0], ctx.measure_rng);
            int want = g.kind == GateKind::SetBit;
            if (bit != want) {
                run_pulses(state, g, lower_gate_threestate(g), ctx);
            }
            return;
        }
        case GateKind::ReuseRenorm: {
            run_pulses(state, g, lower_gate_threestate(g), ctx);
            int q = g.qubits[0];
            if (ctx.record_into != nullptr) {
                clear_and_rescale(state, q, nullptr);
                std::vector<uint8_t> mask(state.size());
                for (size_t i = 0; i < state.size(); i++) {
                    mask[i] = std::norm(state[i]) > 1e-20;
                }
                ctx.record_into->push_back(std::move(mask));
                return;
            }
            const std::vector<uint8_t> *support = nullptr;
            if (ctx.supports != nullptr && ctx.support_cursor < ctx.supports->size()) {
                support = &(*ctx.supports)[ctx.support_cursor];
            }
            ctx.support_cursor++;
            clear_and_rescale(state, q, support);
            return;
        }
        default:
            run_pulses(state, g, lower_gate_threestate(g), ctx);
    }
}

}  // namespace ionsim
