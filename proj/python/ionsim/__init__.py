# Copyright 2026 The IonSim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Pulse-level trapped-ion quantum computer simulator."""

from ._ionsim import (
    CapacityError,
    CircuitProgram,
    ContractViolation,
    DegenerateStateError,
    QuantumState,
    QubitRange,
    build_benchmark,
    build_grover,
    build_modexp,
    estimate_omega,
    grover_iteration_count,
    parse_angle,
    run_benchmark,
    run_config,
    run_zero_error,
)

__all__ = [
    "CapacityError",
    "CircuitProgram",
    "ContractViolation",
    "DegenerateStateError",
    "QuantumState",
    "QubitRange",
    "build_benchmark",
    "build_grover",
    "build_modexp",
    "estimate_omega",
    "grover_iteration_count",
    "parse_angle",
    "run_benchmark",
    "run_config",
    "run_zero_error",
]
