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

#include "ionsim/analysis.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace ionsim {

namespace {

constexpr uint64_t kReferenceTrial = ~uint64_t{0};

template <typename F>
void parallel_for(int n, int jobs, F &&body) {
    int workers = std::max(1, std::min(jobs, n));
    if (workers == 1) {
        for (int i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_lock);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

double fidelity(const QuantumState &psi, const QuantumState &phi_ref) {
    return std::norm(inner_product(phi_ref, psi));
}

Reference run_reference(const CircuitProgram &program, ModelKind model, uint64_t seed) {
    Reference ref{initial_state(program, model), {}};
    ExecutionContext ctx(model, seed, kReferenceTrial);
    ctx.record_into = &ref.supports;
    execute(program, ref.state, ctx);
    return ref;
}

TrialResult run_trial(
    const CircuitProgram &program, const Reference &ref, const RunSettings &settings, uint64_t trial,
    QuantumState *final_state) {
    ExecutionContext ctx(settings.model, settings.seed, trial);
    ctx.err = settings.err;
    ctx.dec = settings.dec;
    ctx.combine = settings.combine;
    ctx.supports = &ref.supports;
    QuantumState psi = initial_state(program, settings.model);
    execute(program, psi, ctx);
    TrialResult r;
    r.fidelity = fidelity(psi, ref.state);
    r.survival_norm = squared_norm(psi);
    r.emissions = ctx.emissions;
    if (program.target) {
        r.success_probability = probability_of_value(psi, program.reg(program.target->reg), program.target->value);
    }
    if (final_state != nullptr) {
        *final_state = std::move(psi);
    }
    return r;
}

FidelityReport run_benchmark(const CircuitProgram &program, const RunSettings &settings) {
    return run_benchmark(program, run_reference(program, settings.model, settings.seed), settings);
}

FidelityReport run_benchmark(const CircuitProgram &program, const Reference &ref, const RunSettings &settings) {
    if (settings.trials < 1) {
        throw ContractViolation("trials must be at least 1");
    }
    FidelityReport rep;
    rep.settings = settings;
    rep.pulses = program.pulse_count();
    rep.num_qubits = program.num_qubits;
    rep.trials.resize(settings.trials);
    parallel_for(settings.trials, settings.jobs, [&](int t) {
        rep.trials[t] = run_trial(program, ref, settings, (uint64_t)t);
    });
    double n = settings.trials;
    double sf = 0, ss = 0, sp = 0;
    for (const auto &t : rep.trials) {
        sf += t.fidelity;
        ss += t.survival_norm;
        sp += t.success_probability;
    }
    rep.mean_fidelity = sf / n;
    rep.mean_survival = ss / n;
    if (program.target) {
        rep.mean_success = sp / n;
    }
    if (settings.trials > 1) {
        double var = 0;
        for (const auto &t : rep.trials) {
            var += (t.fidelity - rep.mean_fidelity) * (t.fidelity - rep.mean_fidelity);
        }
        rep.stderr_fidelity = std::sqrt(var / (n - 1) / n);
    }
    return rep;
}

OmegaEstimate estimate_omega(const CircuitProgram &program, const RunSettings &settings) {
    if (!settings.err.active() || !settings.dec.active()) {
        throw ContractViolation("omega needs both an error mode and a decoherence method");
    }
    Reference ref = run_reference(program, settings.model, settings.seed);
    RunSettings op = settings;
    op.dec = {};
    RunSettings dec = settings;
    dec.err = {};
    OmegaEstimate e;
    e.op_only = run_benchmark(program, ref, op);
    e.dec_only = run_benchmark(program, ref, dec);
    e.both = run_benchmark(program, ref, settings);
    e.f_op = e.op_only.mean_fidelity;
    e.f_dec = e.dec_only.mean_fidelity;
    e.f_both = e.both.mean_fidelity;
    e.omega = e.f_both - e.f_dec * e.f_op;
    return e;
}

const char *sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::None:
            return "none";
        case SweepAxis::Sigma:
            return "sigma";
        case SweepAxis::Mu:
            return "mu";
        case SweepAxis::Dec:
            return "dec";
    }
    return "?";
}

SweepAxis parse_sweep_axis(const std::string &text) {
    for (auto a : {SweepAxis::None, SweepAxis::Sigma, SweepAxis::Mu, SweepAxis::Dec}) {
        if (text == sweep_axis_name(a)) {
            return a;
        }
    }
    throw ContractViolation("unknown sweep axis '" + text + "'");
}

std::vector<double> default_sweep_values(SweepAxis axis) {
    constexpr double pi = std::numbers::pi;
    switch (axis) {
        case SweepAxis::Dec:
            return {0, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1, 1};
        case SweepAxis::Sigma:
        case SweepAxis::Mu:
            return {0, pi / 1024, pi / 512, pi / 256, pi / 128, pi / 64, pi / 32};
        case SweepAxis::None:
            break;
    }
    return {};
}

RunSettings with_axis_value(const RunSettings &settings, SweepAxis axis, double value) {
    if (value < 0) {
        throw ContractViolation("sweep values must be non-negative");
    }
    RunSettings s = settings;
    switch (axis) {
        case SweepAxis::None:
            break;
        case SweepAxis::Sigma:
            s.err.sigma = value;
            if (s.err.mode == ErrorMode::None) {
                s.err.mode = ErrorMode::Noise;
            } else if (s.err.mode == ErrorMode::Bias) {
                s.err.mode = ErrorMode::Both;
            }
            break;
        case SweepAxis::Mu:
            s.err.mu = value;
            if (s.err.mode == ErrorMode::None) {
                s.err.mode = ErrorMode::Bias;
            } else if (s.err.mode == ErrorMode::Noise) {
                s.err.mode = ErrorMode::Both;
            }
            break;
        case SweepAxis::Dec:
            s.dec.dec = value;
            if (s.dec.method == DecoherenceMethod::None) {
                s.dec.method = DecoherenceMethod::Decay;
            }
            break;
    }
    return s;
}

std::vector<SweepRow> sweep(
    const CircuitProgram &program, const RunSettings &settings, SweepAxis axis, const std::vector<double> &values) {
    if (values.empty()) {
        throw ContractViolation("sweep needs at least one value");
    }
    Reference ref = run_reference(program, settings.model, settings.seed);
    std::vector<SweepRow> rows;
    for (double v : values) {
        rows.push_back(SweepRow{axis, v, run_benchmark(program, ref, with_axis_value(settings, axis, v))});
    }
    return rows;
}

}  // namespace ionsim
