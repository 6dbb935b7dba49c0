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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ionsim/analysis.h"
#include "ionsim/run_config.h"

namespace py = pybind11;
using namespace ionsim;

namespace {

py::dict report_dict(const FidelityReport &r) {
    py::dict d;
    std::vector<double> fids, norms;
    std::vector<uint64_t> emissions;
    for (const TrialResult &t : r.trials) {
        fids.push_back(t.fidelity);
        norms.push_back(t.survival_norm);
        emissions.push_back(t.emissions);
    }
    d["mean_fidelity"] = r.mean_fidelity;
    d["stderr_fidelity"] = r.stderr_fidelity;
    d["survival_norm"] = r.mean_survival;
    d["success_probability"] = r.mean_success ? py::cast(*r.mean_success) : py::none();
    d["fidelities"] = fids;
    d["survival_norms"] = norms;
    d["emissions"] = emissions;
    d["pulses"] = r.pulses;
    d["qubits"] = r.num_qubits;
    return d;
}

RunSettings make_settings(const std::string &model, const std::string &err, double mu, double sigma,
                          const std::string &dec, double rate, const std::string &combine, int trials, uint64_t seed,
                          int jobs) {
    RunSettings s;
    s.model = parse_model(model);
    s.err = ErrorConfig{parse_error_mode(err), mu, sigma};
    s.dec = DecoherenceConfig{parse_decoherence_method(dec), rate};
    s.combine = parse_combine_method(combine);
    s.trials = trials;
    s.seed = seed;
    s.jobs = jobs;
    return s;
}

#define IONSIM_SETTINGS_ARGS                                                                                 py::arg("model") = "3state", py::arg("err") = "none", py::arg("mu") = 0.0, py::arg("sigma") = 0.0,     py::arg("dec") = "none", py::arg("rate") = 0.0, py::arg("combine") = "simple", py::arg("trials") = 4,     py::arg("seed") = 1, py::arg("jobs") = 1

}  // namespace

PYBIND11_MODULE(_ionsim, m) {
    m.doc() = "Pulse-level trapped-ion quantum computer simulator";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<DegenerateStateError>(m, "DegenerateStateError", PyExc_ArithmeticError);

    py::class_<QubitRange>(m, "QubitRange")
        .def_readonly("name", &QubitRange::name)
        .def_readonly("first", &QubitRange::first)
        .def_readonly("width", &QubitRange::width)
        .def("__repr__", [](const QubitRange &r) {
            return "QubitRange(" + r.name + ", " + std::to_string(r.first) + ", " + std::to_string(r.width) + ")";
        });

    py::class_<CircuitProgram>(m, "CircuitProgram")
        .def_readonly("name", &CircuitProgram::name)
        .def_readonly("num_qubits", &CircuitProgram::num_qubits)
        .def_readonly("registers", &CircuitProgram::registers)
        .def_readonly("initial_bits", &CircuitProgram::initial_bits)
        .def_property_readonly("num_gates", [](const CircuitProgram &p) { return p.gates.size(); })
        .def("pulse_count", &CircuitProgram::pulse_count)
        .def("reg", &CircuitProgram::reg, py::return_value_policy::copy)
        .def("dump", &CircuitProgram::dump)
        .def_static("parse", &CircuitProgram::parse);

    py::class_<QuantumState>(m, "QuantumState")
        .def_property_readonly("num_qubits", &QuantumState::num_qubits)
        .def_property_readonly("model", [](const QuantumState &s) { return model_name(s.model()); })
        .def("__len__", &QuantumState::size)
        .def("amplitudes",
             [](const QuantumState &s) {
                 std::vector<py::ssize_t> shape{(py::ssize_t)s.size()}, strides{(py::ssize_t)sizeof(Amp)};
                 return py::array_t<Amp>(shape, strides, s.amps().data());
             })
        .def("squared_norm", [](const QuantumState &s) { return squared_norm(s); })
        .def(
            "probability",
            [](const QuantumState &s, const std::string &reg, uint64_t value) {
                return probability_of_value(s, s.find_register(reg), value);
            },
            py::arg("register"), py::arg("value"));

    m.def("build_benchmark", [](const std::string &name, int keybits, uint64_t key, int iterations) {
        GroverSpec g{keybits, key, iterations > 0 ? iterations : grover_iteration_count(uint64_t{1} << keybits, 1)};
        return build_benchmark(name, g);
    }, py::arg("name"), py::arg("keybits") = 2, py::arg("key") = 0, py::arg("iterations") = 0);
    m.def("build_grover", [](int keybits, uint64_t key, int iterations) {
        return build_grover({keybits, key, iterations});
    }, py::arg("keybits"), py::arg("key"), py::arg("iterations"));
    m.def("build_modexp", [](int L, uint64_t x, uint64_t n, const std::string &variant) {
        ModexpVariant v = variant == "full"          ? ModexpVariant::Full
                          : variant == "single_mult" ? ModexpVariant::SingleMult
                          : variant == "a3bit"       ? ModexpVariant::A3Bit
                                                     : throw ContractViolation("unknown variant '" + variant + "'");
        return build_modexp({L, x, n, v});
    }, py::arg("L") = 4, py::arg("x") = 7, py::arg("n") = 15, py::arg("variant") = "full");
    m.def("grover_iteration_count", &grover_iteration_count, py::arg("space_size"), py::arg("num_solutions") = 1);
    m.def("parse_angle", &parse_angle);

    m.def("run_zero_error", [](const CircuitProgram &p, const std::string &model, uint64_t seed) {
        py::gil_scoped_release unlocked;
        return run_reference(p, parse_model(model), seed).state;
    }, py::arg("program"), py::arg("model") = "3state", py::arg("seed") = 1);

    m.def("run_benchmark",
          [](const CircuitProgram &p, const std::string &model, const std::string &err, double mu, double sigma,
             const std::string &dec, double rate, const std::string &combine, int trials, uint64_t seed, int jobs) {
              RunSettings s = make_settings(model, err, mu, sigma, dec, rate, combine, trials, seed, jobs);
              FidelityReport r;
              {
                  py::gil_scoped_release unlocked;
                  r = run_benchmark(p, s);
              }
              return report_dict(r);
          },
          py::arg("program"), IONSIM_SETTINGS_ARGS);

    m.def("estimate_omega",
          [](const CircuitProgram &p, const std::string &model, const std::string &err, double mu, double sigma,
             const std::string &dec, double rate, const std::string &combine, int trials, uint64_t seed, int jobs) {
              RunSettings s = make_settings(model, err, mu, sigma, dec, rate, combine, trials, seed, jobs);
              OmegaEstimate e;
              {
                  py::gil_scoped_release unlocked;
                  e = estimate_omega(p, s);
              }
              py::dict d;
              d["f_op"] = e.f_op;
              d["f_dec"] = e.f_dec;
              d["f_both"] = e.f_both;
              d["omega"] = e.omega;
              return d;
          },
          py::arg("program"), IONSIM_SETTINGS_ARGS);

    m.def("run_config", [](const std::string &json_text) {
        RunConfig c = config_from_json(json_text);
        c.validate();
        CircuitProgram p = program_for(c);
        std::vector<SweepRow> rows;
        {
            py::gil_scoped_release unlocked;
            rows = run_config(c, p);
        }
        return c.format == "json" ? format_json(c, p, rows) : format_csv(c, rows);
    }, py::arg("config_json"), "Runs a JSON config (same keys as the CLI) and returns the CSV or JSON text.");
}
