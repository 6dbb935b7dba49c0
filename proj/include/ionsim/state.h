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

#ifndef IONSIM_STATE_H
#define IONSIM_STATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ionsim {

using Amp = std::complex<double>;

/// Which simulation model a state vector uses.
enum class ModelKind : uint8_t {
    /// Every ion carries three levels (g, e0, e1). Storage is 2·3^M amplitudes.
    ThreeState = 0,
    /// Every ion carries two levels; transient third-level amplitude lives in a
    /// shared auxiliary plane. Storage is 2^(M+2) amplitudes.
    TwoState = 1,
};

/// Ion level digits. Logical 0 is g and logical 1 is e0.
enum Level : uint8_t { kG = 0, kE0 = 1, kE1 = 2 };

const char *model_name(ModelKind model);

/// Thrown when a state would exceed the configured memory cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

/// Thrown when an operation needs a nonzero norm and none is left.
struct DegenerateStateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown on caller misuse (mismatched states, out-of-range qubits, ...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QubitRange {
    std::string name;
    int first = 0;
    int width = 0;

    int operator[](int k) const {
        return first + k;
    }
    int end() const {
        return first + width;
    }
};

struct StateIndex {
    std::vector<uint8_t> digits;
    uint8_t phonon = 0;
    uint8_t plane = 0;

    bool operator==(const StateIndex &other) const = default;
};

/// Memory cap for a single state's amplitude storage. Reads
/// IONSIM_MEM_CAP_BYTES when set, otherwise 4 GiB.
size_t memory_cap_bytes();

/// Number of amplitudes a state of the given shape occupies.
size_t storage_length(ModelKind model, int num_qubits);

class QuantumState {
   public:
    /// Basis state with qubit q = bit q of initial_bits, phonon 0, aux plane empty.
    QuantumState(ModelKind model, int num_qubits, uint64_t initial_bits = 0);

    ModelKind model() const {
        return model_;
    }
    int num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return amps_.size();
    }
    /// Number of entries in one plane (the whole state for ThreeState).
    size_t plane_size() const {
        return model_ == ModelKind::TwoState ? amps_.size() / 2 : amps_.size();
    }
    /// Index distance between neighbouring values of qubit q's digit.
    size_t stride(int q) const {
        return strides_[q];
    }
    /// Digit of qubit q at storage position pos.
    uint8_t digit(size_t pos, int q) const;

    std::span<Amp> amps() {
        return amps_;
    }
    std::span<const Amp> amps() const {
        return amps_;
    }
    Amp &operator[](size_t pos) {
        return amps_[pos];
    }
    const Amp &operator[](size_t pos) const {
        return amps_[pos];
    }

    size_t encode(const StateIndex &index) const;
    StateIndex decode(size_t pos) const;

    std::vector<QubitRange> &registers() {
        return registers_;
    }
    const std::vector<QubitRange> &registers() const {
        return registers_;
    }
    const QubitRange &find_register(const std::string &name) const;

    void check_qubit(int q) const;

   private:
    ModelKind model_;
    int num_qubits_;
    std::vector<size_t> strides_;
    std::vector<Amp> amps_;
    std::vector<QubitRange> registers_;
};

/// Sum of conj(a_i)·b_i over all positions, aux plane included.
Amp inner_product(const QuantumState &a, const QuantumState &b);

double squared_norm(const QuantumState &state);

/// Rescales to unit norm and returns the factor applied to every amplitude.
double renormalize(QuantumState &state);

class RngStream;

/// Born-rule measurement of qubit q in the computational basis. Collapses and
/// renormalizes the state. Consumes exactly one uniform draw.
int measure_qubit(QuantumState &state, int q, RngStream &rng);

/// Probability that the qubits of reg read out value (bit k of value on reg[k]).
double probability_of_value(const QuantumState &state, const QubitRange &reg, uint64_t value);

/// Binary dump: "IONSIM01", uint32 model tag, uint32 qubit count (all
/// little-endian), then (real, imag) doubles in index order.
void write_state_dump(const QuantumState &state, std::ostream &out);
QuantumState read_state_dump(std::istream &in);

}  // namespace ionsim

#endif
