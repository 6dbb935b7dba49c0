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

#include "ionsim/run_config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace ionsim {

namespace {

using nlohmann::json;

constexpr const char *kBenchmarks[] = {"f21", "grover", "mult", "f15_3bit", "f15_long", "custom"};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double parse_number(const std::string &text) {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) {
        throw std::invalid_argument(text);
    }
    return v;
}

double angle_from_json(const json &j) {
    return j.is_string() ? parse_angle(j.get<std::string>()) : j.get<double>();
}

}  // namespace

double parse_angle(const std::string &text) {
    try {
        std::string t = text;
        double scale = 1;
        size_t slash = t.find('/');
        if (slash != std::string::npos && t.find("pi") != std::string::npos) {
            scale = 1 / parse_number(t.substr(slash + 1));
            t = t.substr(0, slash);
        }
        size_t pi = t.find("pi");
        if (pi == std::string::npos) {
            return parse_number(t) * scale;
        }
        if (pi + 2 != t.size()) {
            throw std::invalid_argument(text);
        }
        double k = 1;
        if (pi > 0) {
            std::string head = t.substr(0, pi);
            if (head.back() == '*') {
                head.pop_back();
            }
            k = head == "-" ? -1 : parse_number(head);
        }
        return k * std::numbers::pi * scale;
    } catch (const std::exception &) {
        throw ContractViolation("cannot parse angle '" + text + "'");
    }
}

ModelKind parse_model(const std::string &text) {
    if (text == "3state") {
        return ModelKind::ThreeState;
    }
    if (text == "2state") {
        return ModelKind::TwoState;
    }
    throw ContractViolation("unknown model '" + text + "' (expected 3state or 2state)");
}

const char *benchmark_names() {
    return "f21, grover, mult, f15_3bit, f15_long, custom";
}

void RunConfig::validate() const {
    bool known = false;
    for (const char *b : kBenchmarks) {
        known |= benchmark == b;
    }
    if (!known) {
        throw ContractViolation("unknown benchmark '" + benchmark + "' (expected one of " + benchmark_names() + ")");
    }
    if (benchmark == "custom" && program_path.empty()) {
        throw ContractViolation("benchmark custom needs a program file");
    }
    if (settings.trials < 1) {
        throw ContractViolation("trials must be at least 1");
    }
    if (settings.jobs < 1) {
        throw ContractViolation("jobs must be at least 1");
    }
    if (settings.err.sigma < 0 || settings.dec.dec < 0) {
        throw ContractViolation("sigma and the decoherence rate must be non-negative");
    }
    if (format != "csv" && format != "json") {
        throw ContractViolation("unknown format '" + format + "' (expected csv or json)");
    }
    if (axis == SweepAxis::None && !values.empty()) {
        throw ContractViolation("sweep values given without a sweep axis");
    }
    for (double v : values) {
        if (!(v >= 0)) {
            throw ContractViolation("sweep values must be non-negative");
        }
    }
}

RunConfig config_from_json(const std::string &json_text, RunConfig base) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception &e) {
        throw ContractViolation(std::string("invalid config JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ContractViolation("config JSON must be an object");
    }
    RunConfig c = std::move(base);
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string &k = it.key();
            const json &v = it.value();
            if (k == "benchmark") {
                c.benchmark = v.get<std::string>();
            } else if (k == "program") {
                c.program_path = v.get<std::string>();
            } else if (k == "model") {
                c.settings.model = parse_model(v.get<std::string>());
            } else if (k == "combine") {
                c.settings.combine = parse_combine_method(v.get<std::string>());
            } else if (k == "err") {
                c.settings.err.mode = parse_error_mode(v.get<std::string>());
            } else if (k == "mu") {
                c.settings.err.mu = angle_from_json(v);
            } else if (k == "sigma") {
                c.settings.err.sigma = angle_from_json(v);
            } else if (k == "dec") {
                c.settings.dec.method = parse_decoherence_method(v.get<std::string>());
            } else if (k == "rate") {
                c.settings.dec.dec = v.get<double>();
            } else if (k == "trials") {
                c.settings.trials = v.get<int>();
            } else if (k == "seed") {
                c.settings.seed = v.get<uint64_t>();
            } else if (k == "jobs") {
                c.settings.jobs = v.get<int>();
            } else if (k == "sweep") {
                c.axis = parse_sweep_axis(v.get<std::string>());
            } else if (k == "values") {
                c.values.clear();
                for (const json &e : v) {
                    c.values.push_back(angle_from_json(e));
                }
            } else if (k == "keybits") {
                c.grover.key_bits = v.get<int>();
            } else if (k == "key") {
                c.grover.key = v.get<uint64_t>();
            } else if (k == "iterations") {
                c.grover.iterations = v.get<int>();
            } else if (k == "out") {
                c.out = v.get<std::string>();
            } else if (k == "format") {
                c.format = v.get<std::string>();
            } else {
                throw ContractViolation("unknown config key '" + k + "'");
            }
        }
    } catch (const json::exception &e) {
        throw ContractViolation(std::string("bad value in config JSON: ") + e.what());
    }
    return c;
}

CircuitProgram program_for(const RunConfig &config) {
    if (config.benchmark == "custom") {
        std::ifstream in(config.program_path);
        if (!in) {
            throw ContractViolation("cannot read program file '" + config.program_path + "'");
        }
        std::stringstream text;
        text << in.rdbuf();
        return CircuitProgram::parse(text.str());
    }
    GroverSpec g = config.grover;
    if (g.iterations <= 0 && config.benchmark == "grover") {
        if (g.key_bits < 1 || g.key_bits > 24) {
            throw ContractViolation("keybits must be between 1 and 24");
        }
        g.iterations = grover_iteration_count(uint64_t{1} << g.key_bits, 1);
    }
    return build_benchmark(config.benchmark, g);
}

std::vector<SweepRow> run_config(const RunConfig &config, const CircuitProgram &program) {
    config.validate();
    if (config.axis == SweepAxis::None) {
        return {SweepRow{SweepAxis::None, 0, run_benchmark(program, config.settings)}};
    }
    std::vector<double> values = config.values.empty() ? default_sweep_values(config.axis) : config.values;
    return sweep(program, config.settings, config.axis, values);
}

std::string format_csv(const RunConfig &config, const std::vector<SweepRow> &rows) {
    std::string out =
        "benchmark,model,combine,axis,axis_value,trials,mean_fidelity,stderr_fidelity,survival_norm,seed,"
        "success_probability\n";
    for (const SweepRow &r : rows) {
        const RunSettings &s = r.report.settings;
        out += config.benchmark;
        out += ",";
        out += model_name(s.model);
        out += ",";
        out += combine_method_name(s.combine);
        out += ",";
        out += sweep_axis_name(r.axis);
        out += "," + fmt(r.value);
        out += "," + std::to_string(s.trials);
        out += "," + fmt(r.report.mean_fidelity);
        out += "," + fmt(r.report.stderr_fidelity);
        out += "," + fmt(r.report.mean_survival);
        out += "," + std::to_string(s.seed);
        out += ",";
        if (r.report.mean_success) {
            out += fmt(*r.report.mean_success);
        }
        out += "\n";
    }
    return out;
}

std::string format_json(const RunConfig &config, const CircuitProgram &program, const std::vector<SweepRow> &rows) {
    const RunSettings &s = config.settings;
    json j;
    j["benchmark"] = config.benchmark;
    j["model"] = model_name(s.model);
    j["combine"] = combine_method_name(s.combine);
    j["err"] = {{"mode", error_mode_name(s.err.mode)}, {"mu", s.err.mu}, {"sigma", s.err.sigma}};
    j["dec"] = {{"method", decoherence_method_name(s.dec.method)}, {"rate", s.dec.dec}};
    j["seed"] = s.seed;
    j["trials"] = s.trials;
    j["qubits"] = program.num_qubits;
    j["pulses"] = program.pulse_count();
    j["axis"] = sweep_axis_name(config.axis);
    json out_rows = json::array();
    for (const SweepRow &r : rows) {
        json row;
        row["axis_value"] = r.value;
        row["mean_fidelity"] = r.report.mean_fidelity;
        row["stderr_fidelity"] = r.report.stderr_fidelity;
        row["survival_norm"] = r.report.mean_survival;
        row["success_probability"] = r.report.mean_success ? json(*r.report.mean_success) : json(nullptr);
        json fids = json::array();
        json norms = json::array();
        for (const TrialResult &t : r.report.trials) {
            fids.push_back(t.fidelity);
            norms.push_back(t.survival_norm);
        }
        row["fidelities"] = fids;
        row["survival_norms"] = norms;
        out_rows.push_back(row);
    }
    j["rows"] = out_rows;
    return j.dump(2) + "\n";
}

}  // namespace ionsim
