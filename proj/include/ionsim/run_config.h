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

#ifndef IONSIM_RUN_CONFIG_H
#define IONSIM_RUN_CONFIG_H

#include <cstdint>
#include <string>
#include <vector>

#include "ionsim/analysis.h"
#include "ionsim/circuits.h"

namespace ionsim {

/// Everything one CLI invocation needs. Field names double as JSON keys.
struct RunConfig {
    std::string benchmark = "f21";
    std::string program_path;  ///< Program dump file for benchmark "custom".
    RunSettings settings;
    SweepAxis axis = SweepAxis::None;
    std::vector<double> values;  ///< Empty means the axis defaults.
    GroverSpec grover{2, 0, 0};  ///< iterations 0 means the optimal count.
    std::string out;             ///< Empty means stdout.
    std::string format = "csv";

    /// Checks names, ranges and sweep consistency.
    void validate() const;
};

/// Parses an angle: a plain number, "pi", "pi/K", "K*pi" or "K*pi/D".
double parse_angle(const std::string &text);
ModelKind parse_model(const std::string &text);
const char *benchmark_names();

/// Applies the keys of a JSON object on top of base.
RunConfig config_from_json(const std::string &json_text, RunConfig base = {});

CircuitProgram program_for(const RunConfig &config);

/// One row per sweep value, or one row with axis "none".
std::vector<SweepRow> run_config(const RunConfig &config, const CircuitProgram &program);

std::string format_csv(const RunConfig &config, const std::vector<SweepRow> &rows);
std::string format_json(const RunConfig &config, const CircuitProgram &program, const std::vector<SweepRow> &rows);

}  // namespace ionsim

#endif
