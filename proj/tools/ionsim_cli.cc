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

// Command-line front end: fidelity runs and sweeps, program and state dumps.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ionsim/run_config.h"

using namespace ionsim;

namespace {

struct Flags {
    std::optional<std::string> benchmark, program, model, combine, err, mu, sigma, dec, sweep, out, format;
    std::optional<double> rate;
    std::optional<int> trials, jobs, keybits, iterations;
    std::optional<uint64_t> seed, key;
    std::optional<std::vector<std::string>> values;
    std::string config_path;
};

void add_common(CLI::App *cmd, Flags &f) {
    cmd->add_option("--benchmark", f.benchmark, std::string("Benchmark: ") + benchmark_names());
    cmd->add_option("--program", f.program, "Program dump file for --benchmark custom");
    cmd->add_option("--model", f.model, "Simulation model: 3state or 2state");
    cmd->add_option("--keybits", f.keybits, "Grover key width");
    cmd->add_option("--key", f.key, "Grover marked key");
    cmd->add_option("--iterations", f.iterations, "Grover iterations (default: optimal count)");
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
    cmd->add_option("--out", f.out, "Output file (default: stdout)");
}

void write_output(const std::string &path, const std::string &text, bool binary = false) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    out << text;
    if (!out) {
        throw ContractViolation("cannot write '" + path + "'");
    }
}

RunConfig resolve(const Flags &f) {
    RunConfig c;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) {
            throw ContractViolation("cannot read config '" + f.config_path + "'");
        }
        std::stringstream text;
        text << in.rdbuf();
        c = config_from_json(text.str(), c);
    }
    if (f.benchmark) c.benchmark = *f.benchmark;
    if (f.program) c.program_path = *f.program;
    if (f.model) c.settings.model = parse_model(*f.model);
    if (f.combine) c.settings.combine = parse_combine_method(*f.combine);
    if (f.err) c.settings.err.mode = parse_error_mode(*f.err);
    if (f.mu) c.settings.err.mu = parse_angle(*f.mu);
    if (f.sigma) c.settings.err.sigma = parse_angle(*f.sigma);
    if (f.dec) c.settings.dec.method = parse_decoherence_method(*f.dec);
    if (f.rate) c.settings.dec.dec = *f.rate;
    if (f.trials) c.settings.trials = *f.trials;
    if (f.jobs) c.settings.jobs = *f.jobs;
    if (f.seed) c.settings.seed = *f.seed;
    if (f.sweep) c.axis = parse_sweep_axis(*f.sweep);
    if (f.values) {
        c.values.clear();
        for (const auto &v : *f.values) {
            c.values.push_back(parse_angle(v));
        }
    }
    if (f.keybits) c.grover.key_bits = *f.keybits;
    if (f.key) c.grover.key = *f.key;
    if (f.iterations) c.grover.iterations = *f.iterations;
    if (f.out) c.out = *f.out;
    if (f.format) c.format = *f.format;
    return c;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pulse-level trapped-ion quantum computer simulator"};
    app.require_subcommand(1);

    Flags run_flags;
    auto *run = app.add_subcommand("run", "Run fidelity trials or a parameter sweep");
    add_common(run, run_flags);
    run->add_option("--combine", run_flags.combine, "Paired error combination (2state): simple or mixed");
    run->add_option("--err", run_flags.err, "Operational error mode: none, bias, noise, both");
    run->add_option("--mu", run_flags.mu, "Bias error angle, e.g. 0.003 or pi/1024");
    run->add_option("--sigma", run_flags.sigma, "Gaussian error std dev, e.g. pi/256");
    run->add_option("--dec", run_flags.dec, "Decoherence method: none, decay, spon_emit");
    run->add_option("--rate", run_flags.rate, "Decoherence rate per pulse");
    run->add_option("--trials", run_flags.trials, "Trials per point (default 4)");
    run->add_option("--seed", run_flags.seed, "Base random seed (default 1)");
    run->add_option("--jobs", run_flags.jobs, "Worker threads over trials; output does not depend on it");
    run->add_option("--sweep", run_flags.sweep, "Sweep axis: sigma, mu or dec");
    run->add_option("--values", run_flags.values, "Sweep values (comma separated; default per axis)")
        ->delimiter(',');
    run->add_option("--format", run_flags.format, "Output format: csv or json");

    Flags dump_flags;
    std::string state_path;
    auto *dump = app.add_subcommand("dump", "Write a benchmark program, or its zero-error final state");
    add_common(dump, dump_flags);
    dump->add_option("--state", state_path, "Also run the program without errors and write the binary state here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*run) {
            RunConfig c = resolve(run_flags);
            c.validate();
            CircuitProgram program = program_for(c);
            auto rows = run_config(c, program);
            write_output(c.out, c.format == "json" ? format_json(c, program, rows) : format_csv(c, rows));
        } else if (*dump) {
            RunConfig c = resolve(dump_flags);
            CircuitProgram program = program_for(c);
            write_output(c.out, program.dump());
            if (!state_path.empty()) {
                Reference ref = run_reference(program, c.settings.model, c.settings.seed);
                std::ostringstream bytes;
                write_state_dump(ref.state, bytes);
                write_output(state_path, bytes.str(), true);
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
