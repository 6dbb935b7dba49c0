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

#include "ionsim/state.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

#include "ionsim/rng.h"

namespace ionsim {

const char *model_name(ModelKind model) {
    return model == ModelKind::ThreeState ? "3state" : "2state";
}

size_t memory_cap_bytes() {
    if (const char *env = std::getenv("IONSIM_MEM_CAP_BYTES")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0') {
            return (size_t)v;
        }
    }
    return size_t{4} << 30;
}

size_t storage_length(ModelKind model, int num_qubits) {
    if (num_qubits < 1) {
        throw ContractViolation("num_qubits must be at least 1");
    }
    constexpr size_t limit = std::numeric_limits<size_t>::max() / 4;
    size_t n = 2;
    size_t base = model == ModelKind::ThreeState ? 3 : 2;
    for (int q = 0; q < num_qubits; q++) {
        if (n > limit) {
            throw CapacityError("state size overflows for " + std::to_string(num_qubits) + " qubits");
        }
        n *= base;
    }
    if (model == ModelKind::TwoState) {
        n *= 2;
    }
    return n;
}

QuantumState::QuantumState(ModelKind model, int num_qubits, uint64_t initial_bits)
    : model_(model), num_qubits_(num_qubits) {
    size_t n = storage_length(model, num_qubits);
    size_t cap = memory_cap_bytes();
    if (n > cap / sizeof(Amp)) {
        throw CapacityError(
            std::string(model_name(model)) + " state with " + std::to_string(num_qubits) + " qubits needs " +
            std::to_string(n * sizeof(Amp)) + " bytes, above the cap of " + std::to_string(cap) +
            " bytes (set IONSIM_MEM_CAP_BYTES to raise it)");
    }
    if (num_qubits < 64 && (initial_bits >> num_qubits) != 0) {
        throw ContractViolation("initial_bits has bits beyond num_qubits");
    }
    size_t base = model == ModelKind::ThreeState ? 3 : 2;
    size_t s = 2;
    for (int q = 0; q < num_qubits; q++) {
        strides_.push_back(s);
        s *= base;
    }
    amps_.assign(n, Amp{0, 0});
    size_t pos = 0;
    for (int q = 0; q < num_qubits; q++) {
        if ((initial_bits >> q) & 1) {
            pos += strides_[q];
        }
    }
    amps_[pos] = 1;
}

uint8_t QuantumState::digit(size_t pos, int q) const {
    if (model_ == ModelKind::TwoState) {
        return (uint8_t)((pos >> (q + 1)) & 1);
    }
    return (uint8_t)((pos / strides_[q]) % 3);
}

void QuantumState::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw ContractViolation(
            "qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

size_t QuantumState::encode(const StateIndex &index) const {
    if ((int)index.digits.size() != num_qubits_ || index.phonon > 1 || index.plane > 1 ||
        (index.plane == 1 && model_ == ModelKind::ThreeState)) {
        throw ContractViolation("malformed state index");
    }
    size_t pos = index.phonon;
    uint8_t max_digit = model_ == ModelKind::ThreeState ? 2 : 1;
    for (int q = 0; q < num_qubits_; q++) {
        if (index.digits[q] > max_digit) {
            throw ContractViolation("digit out of range for model");
        }
        pos += index.digits[q] * strides_[q];
    }
    if (index.plane) {
        pos += plane_size();
    }
    return pos;
}

StateIndex QuantumState::decode(size_t pos) const {
    if (pos >= amps_.size()) {
        throw ContractViolation("position out of range");
    }
    StateIndex r;
    r.phonon = pos & 1;
    if (model_ == ModelKind::TwoState) {
        r.plane = pos >= plane_size();
    }
    r.digits.resize(num_qubits_);
    for (int q = 0; q < num_qubits_; q++) {
        r.digits[q] = digit(pos, q);
    }
    return r;
}

const QubitRange &QuantumState::find_register(const std::string &name) const {
    for (const auto &r : registers_) {
        if (r.name == name) {
            return r;
        }
    }
    throw ContractViolation("no register named '" + name + "'");
}

Amp inner_product(const QuantumState &a, const QuantumState &b) {
    if (a.model() != b.model() || a.num_qubits() != b.num_qubits()) {
        throw ContractViolation("inner_product of states with different shapes");
    }
    double re = 0, im = 0;
    for (size_t i = 0; i < a.size(); i++) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double squared_norm(const QuantumState &state) {
    double acc = 0;
    for (const Amp &a : state.amps()) {
        acc += std::norm(a);
    }
    return acc;
}

double renormalize(QuantumState &state) {
    double n2 = squared_norm(state);
    if (!(n2 > 0)) {
        throw DegenerateStateError("cannot renormalize a zero-norm state");
    }
    double f = 1 / std::sqrt(n2);
    if (f != 1) {
        for (Amp &a : state.amps()) {
            a *= f;
        }
    }
    return f;
}

int measure_qubit(QuantumState &state, int q, RngStream &rng) {
    state.check_qubit(q);
    double p[3] = {0, 0, 0};
    for (size_t i = 0; i < state.size(); i++) {
        p[state.digit(i, q)] += std::norm(state[i]);
    }
    double total = p[0] + p[1] + p[2];
    if (p[2] > 1e-9 * (total > 0 ? total : 1)) {
        throw ContractViolation("measured qubit carries third-level amplitude");
    }
    double u = rng.uniform();
    int bit = u * (p[0] + p[1]) < p[1] ? 1 : 0;
    if (p[bit] == 0) {
        bit ^= 1;
    }
    for (size_t i = 0; i < state.size(); i++) {
        if (state.digit(i, q) != bit) {
            state[i] = 0;
        }
    }
    renormalize(state);
    return bit;
}

double probability_of_value(const QuantumState &state, const QubitRange &reg, uint64_t value) {
    if (reg.first < 0 || reg.width < 0 || reg.end() > state.num_qubits()) {
        throw ContractViolation("register outside the state");
    }
    if (reg.width < 64 && (value >> reg.width) != 0) {
        throw ContractViolation("value does not fit in register " + reg.name);
    }
    double acc = 0;
    for (size_t i = 0; i < state.size(); i++) {
        bool match = true;
        for (int k = 0; k < reg.width && match; k++) {
            match = state.digit(i, reg[k]) == ((value >> k) & 1);
        }
        if (match) {
            acc += std::norm(state[i]);
        }
    }
    return acc;
}

namespace {

constexpr char kDumpMagic[8] = {'I', 'O', 'N', 'S', 'I', 'M', '0', '1'};

void put_le(std::ostream &out, uint64_t v, int bytes) {
    char buf[8];
    for (int k = 0; k < bytes; k++) {
        buf[k] = (char)((v >> (8 * k)) & 0xFF);
    }
    out.write(buf, bytes);
}

uint64_t get_le(std::istream &in, int bytes) {
    unsigned char buf[8];
    if (!in.read(reinterpret_cast<char *>(buf), bytes)) {
        throw ContractViolation("truncated state dump");
    }
    uint64_t v = 0;
    for (int k = 0; k < bytes; k++) {
        v |= (uint64_t)buf[k] << (8 * k);
    }
    return v;
}

}  // namespace

void write_state_dump(const QuantumState &state, std::ostream &out) {
    out.write(kDumpMagic, sizeof(kDumpMagic));
    put_le(out, (uint32_t)state.model(), 4);
    put_le(out, (uint32_t)state.num_qubits(), 4);
    for (const Amp &a : state.amps()) {
        put_le(out, std::bit_cast<uint64_t>(a.real()), 8);
        put_le(out, std::bit_cast<uint64_t>(a.imag()), 8);
    }
}

QuantumState read_state_dump(std::istream &in) {
    char magic[8];
    if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kDumpMagic, sizeof(magic)) != 0) {
        throw ContractViolation("not an ionsim state dump");
    }
    uint64_t tag = get_le(in, 4);
    uint64_t m = get_le(in, 4);
    if (tag > 1) {
        throw ContractViolation("unknown model tag in state dump");
    }
    QuantumState s((ModelKind)tag, (int)m, 0);
    for (size_t i = 0; i < s.size(); i++) {
        double re = std::bit_cast<double>(get_le(in, 8));
        double im = std::bit_cast<double>(get_le(in, 8));
        s[i] = Amp{re, im};
    }
    return s;
}

}  // namespace ionsim
