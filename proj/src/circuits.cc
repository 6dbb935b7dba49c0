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

#include "ionsim/circuits.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ionsim {

namespace {

constexpr double kPi = std::numbers::pi;

bool bit_of(uint64_t v, int i) {
    return (v >> i) & 1;
}

uint64_t mod_inverse(uint64_t a, uint64_t n) {
    int64_t t = 0, nt = 1, r = (int64_t)n, nr = (int64_t)(a % n);
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) {
        throw ContractViolation("value has no modular inverse");
    }
    return (uint64_t)(t < 0 ? t + (int64_t)n : t);
}

/// carry_next ^= MAJ(z, carry, k·q). carry < 0 stands for a known zero and
/// q < 0 for an uncontrolled addition.
void carry_step(std::vector<Gate> &out, int z, int carry, int q, bool k, int carry_next) {
    if (carry >= 0) {
        out.push_back(Gate::ccnot(z, carry, carry_next));
    }
    if (!k) {
        return;
    }
    if (q >= 0) {
        out.push_back(Gate::ccnot(z, q, carry_next));
        if (carry >= 0) {
            out.push_back(Gate::ccnot(carry, q, carry_next));
        }
    } else {
        out.push_back(Gate::cnot(z, carry_next));
        if (carry >= 0) {
            out.push_back(Gate::cnot(carry, carry_next));
        }
    }
}

/// z ^= carry ^ k·q.
void sum_step(std::vector<Gate> &out, int z, int carry, int q, bool k) {
    if (carry >= 0) {
        out.push_back(Gate::cnot(carry, z));
    }
    if (k) {
        out.push_back(q >= 0 ? Gate::cnot(q, z) : Gate::flip(z));
    }
}

/// z += k·q (mod 2^n) with a ripple of n-1 clean carries, which are restored.
void add_const(std::vector<Gate> &out, const std::vector<int> &z, const std::vector<int> &carries, int q, uint64_t k) {
    int n = (int)z.size();
    k &= (uint64_t{1} << n) - 1;
    if (k == 0) {
        return;
    }
    auto carry_in = [&](int i) { return i == 0 ? -1 : carries[i - 1]; };
    for (int i = 0; i + 1 < n; i++) {
        carry_step(out, z[i], carry_in(i), q, bit_of(k, i), carries[i]);
    }
    sum_step(out, z[n - 1], carry_in(n - 1), q, bit_of(k, n - 1));
    for (int i = n - 2; i >= 0; i--) {
        carry_step(out, z[i], carry_in(i), q, bit_of(k, i), carries[i]);
        sum_step(out, z[i], carry_in(i), q, bit_of(k, i));
    }
}

struct MulLayout {
    std::vector<int> y;        ///< Running product, L bits.
    std::vector<int> z;        ///< Accumulator, L+1 bits; the top bit is the sign.
    std::vector<int> carries;  ///< L carries.
    int t = 0;                 ///< Adder control, holds a AND y_i.
    int flag = 0;              ///< Reduction flag.
};

/// z = (z + q·k) mod N for z < N, leaving the flag clean.
void mod_add(std::vector<Gate> &out, const MulLayout &m, int q, uint64_t k, uint64_t n_mod) {
    k %= n_mod;
    if (k == 0) {
        return;
    }
    int nb = (int)m.z.size();
    uint64_t wrap = uint64_t{1} << nb;
    int top = m.z.back();
    add_const(out, m.z, m.carries, q, k);
    add_const(out, m.z, m.carries, -1, wrap - n_mod);
    out.push_back(Gate::cnot(top, m.flag));
    add_const(out, m.z, m.carries, m.flag, n_mod);
    add_const(out, m.z, m.carries, q, wrap - k);
    out.push_back(Gate::flip(top));
    out.push_back(Gate::cnot(top, m.flag));
    out.push_back(Gate::flip(top));
    add_const(out, m.z, m.carries, q, k);
}

/// y = y·c mod N when a is set. Accumulates c·y into z, swaps, then clears z
/// by subtracting c^{-1}·y.
void controlled_mult(std::vector<Gate> &out, const MulLayout &m, int a, uint64_t c, uint64_t n_mod) {
    uint64_t c_inv = mod_inverse(c, n_mod);
    size_t L = m.y.size();
    auto accumulate = [&](uint64_t factor, bool subtract) {
        for (size_t i = 0; i < L; i++) {
            uint64_t k = (factor << i) % n_mod;
            if (k == 0) {
                continue;
            }
            out.push_back(Gate::ccnot(a, m.y[i], m.t));
            mod_add(out, m, m.t, subtract ? n_mod - k : k, n_mod);
            out.push_back(Gate::ccnot(a, m.y[i], m.t));
        }
    };
    accumulate(c % n_mod, false);
    for (size_t i = 0; i < L; i++) {
        out.push_back(Gate::cnot(m.z[i], m.y[i]));
        out.push_back(Gate::ccnot(a, m.y[i], m.z[i]));
        out.push_back(Gate::cnot(m.z[i], m.y[i]));
    }
    accumulate(c_inv, true);
}

/// Toffoli ladder with clean ancillas, which are returned to zero.
void append_mcx_clean(std::vector<Gate> &out, const std::vector<int> &c, int target, const std::vector<int> &clean) {
    size_t k = c.size();
    if (k == 1) {
        out.push_back(Gate::cnot(c[0], target));
        return;
    }
    if (k == 2) {
        out.push_back(Gate::ccnot(c[0], c[1], target));
        return;
    }
    if (clean.size() < k - 2) {
        throw ContractViolation("not enough clean ancillas for the oracle");
    }
    std::vector<Gate> ladder{Gate::ccnot(c[0], c[1], clean[0])};
    for (size_t i = 2; i + 1 < k; i++) {
        ladder.push_back(Gate::ccnot(c[i], clean[i - 2], clean[i - 1]));
    }
    out.insert(out.end(), ladder.begin(), ladder.end());
    out.push_back(Gate::ccnot(c[k - 1], clean[k - 3], target));
    out.insert(out.end(), ladder.rbegin(), ladder.rend());
}

}  // namespace

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t mod) {
    unsigned __int128 r = 1 % mod, b = base % mod;
    while (exp) {
        if (exp & 1) {
            r = r * b % mod;
        }
        b = b * b % mod;
        exp >>= 1;
    }
    return (uint64_t)r;
}

const QubitRange &CircuitProgram::reg(const std::string &reg_name) const {
    for (const auto &r : registers) {
        if (r.name == reg_name) {
            return r;
        }
    }
    throw ContractViolation("program has no register named '" + reg_name + "'");
}

QubitRange &CircuitProgram::add_register(const std::string &reg_name, int width) {
    registers.push_back(QubitRange{reg_name, num_qubits, width});
    num_qubits += width;
    return registers.back();
}

size_t CircuitProgram::pulse_count() const {
    size_t n = 0;
    for (const Gate &g : gates) {
        n += lower_gate_threestate(g).size();
    }
    return n;
}

void CircuitProgram::validate() const {
    if (num_qubits < 1) {
        throw ContractViolation("program has no qubits");
    }
    std::vector<int> owner(num_qubits, -1);
    for (size_t r = 0; r < registers.size(); r++) {
        for (int k = 0; k < registers[r].width; k++) {
            int q = registers[r][k];
            if (q < 0 || q >= num_qubits) {
                throw ContractViolation("register " + registers[r].name + " exceeds the qubit count");
            }
            if (owner[q] >= 0) {
                throw ContractViolation("registers overlap at qubit " + std::to_string(q));
            }
            owner[q] = (int)r;
        }
    }
    for (const Gate &g : gates) {
        g.check(num_qubits);
    }
    if (num_qubits < 64 && (initial_bits >> num_qubits) != 0) {
        throw ContractViolation("initial bits exceed the qubit count");
    }
    if (target) {
        const QubitRange &r = reg(target->reg);
        if (r.width < 64 && (target->value >> r.width) != 0) {
            throw ContractViolation("target value does not fit its register");
        }
    }
}

std::string CircuitProgram::dump() const {
    std::ostringstream out;
    out << "PROGRAM " << (name.empty() ? "custom" : name) << "\n";
    out << "# pulses " << pulse_count() << "\n";
    out << "QUBITS " << num_qubits << "\n";
    out << "INIT " << initial_bits << "\n";
    for (const auto &r : registers) {
        out << "REGISTER " << r.name << " " << r.first << " " << r.width << "\n";
    }
    if (target) {
        out << "TARGET " << target->reg << " " << target->value << "\n";
    }
    for (const Gate &g : gates) {
        out << g.str() << "\n";
    }
    return out.str();
}

CircuitProgram CircuitProgram::parse(const std::string &text) {
    CircuitProgram p;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream words(line);
        std::string head;
        if (!(words >> head) || head[0] == '#') {
            continue;
        }
        bool ok = true;
        if (head == "GATE") {
            p.gates.push_back(Gate::parse(line));
        } else if (head == "PROGRAM") {
            ok = (bool)(words >> p.name);
        } else if (head == "QUBITS") {
            ok = (bool)(words >> p.num_qubits);
        } else if (head == "INIT") {
            ok = (bool)(words >> p.initial_bits);
        } else if (head == "REGISTER") {
            QubitRange r;
            ok = (bool)(words >> r.name >> r.first >> r.width);
            p.registers.push_back(r);
        } else if (head == "TARGET") {
            SuccessTarget t;
            ok = (bool)(words >> t.reg >> t.value);
            p.target = t;
        } else {
            ok = false;
        }
        if (!ok) {
            throw ContractViolation("bad program line " + std::to_string(line_no) + ": " + line);
        }
    }
    p.validate();
    return p;
}

QuantumState initial_state(const CircuitProgram &program, ModelKind model) {
    QuantumState s(model, program.num_qubits, program.initial_bits);
    s.registers() = program.registers;
    return s;
}

void execute(const CircuitProgram &program, QuantumState &state, ExecutionContext &ctx) {
    if (state.num_qubits() != program.num_qubits) {
        throw ContractViolation("state does not match the program's qubit count");
    }
    for (const Gate &g : program.gates) {
        apply_gate(state, g, ctx);
    }
}

void append_mcx(
    std::vector<Gate> &out, const std::vector<int> &x, int target, const std::vector<int> &dirty_ancillas) {
    size_t m = x.size();
    if (m == 0) {
        throw ContractViolation("multi-controlled flip needs a control");
    }
    if (m <= 2) {
        append_mcx_clean(out, x, target, {});
        return;
    }
    if (dirty_ancillas.size() < m - 2) {
        throw ContractViolation("not enough borrowed ancillas for a multi-controlled flip");
    }
    const auto &a = dirty_ancillas;
    auto ladder = [&](std::vector<Gate> &seq) {
        for (size_t i = m - 2; i >= 2; i--) {
            seq.push_back(Gate::ccnot(x[i], a[i - 2], a[i - 1]));
        }
        seq.push_back(Gate::ccnot(x[0], x[1], a[0]));
        for (size_t i = 2; i + 1 < m; i++) {
            seq.push_back(Gate::ccnot(x[i], a[i - 2], a[i - 1]));
        }
    };
    Gate top = Gate::ccnot(x[m - 1], a[m - 3], target);
    out.push_back(top);
    ladder(out);
    out.push_back(top);
    ladder(out);
}

CircuitProgram build_f21_lookup(const LookupSpec &spec) {
    if (spec.la < 1 || spec.la > 20 || spec.n < 2 || spec.x == 0) {
        throw ContractViolation("invalid lookup spec");
    }
    CircuitProgram p;
    p.name = "f21";
    const QubitRange A = p.add_register("A", spec.la);
    const QubitRange F = p.add_register("F", std::bit_width(spec.n - 1));
    if (spec.la >= 3 && F.width - 1 < spec.la - 2) {
        throw ContractViolation("output register too narrow to borrow ancillas for the lookup");
    }
    std::vector<int> controls;
    for (int i = 0; i < A.width; i++) {
        controls.push_back(A[i]);
        p.add(Gate::rotation(A[i], kPi / 2, kPi / 2));
    }
    uint64_t full = (uint64_t{1} << spec.la) - 1;
    uint64_t dressed = 0;
    auto redress = [&](uint64_t want) {
        for (int i = 0; i < A.width; i++) {
            if (bit_of(want ^ dressed, i)) {
                p.add(Gate::flip(A[i]));
            }
        }
        dressed = want;
    };
    for (uint64_t k = 0; k <= full; k++) {
        uint64_t a = k ^ (k >> 1);
        redress(~a & full);
        uint64_t f = mod_pow(spec.x, a, spec.n);
        if (f == 0) {
            continue;
        }
        int lead = std::countr_zero(f);
        std::vector<Gate> fan;
        std::vector<int> borrowed;
        for (int b = 0; b < F.width; b++) {
            if (b == lead) {
                continue;
            }
            borrowed.push_back(F[b]);
            if (bit_of(f, b)) {
                fan.push_back(Gate::cnot(F[lead], F[b]));
            }
        }
        p.gates.insert(p.gates.end(), fan.begin(), fan.end());
        append_mcx(p.gates, controls, F[lead], borrowed);
        p.gates.insert(p.gates.end(), fan.begin(), fan.end());
    }
    redress(0);
    p.validate();
    return p;
}

const char *modexp_variant_name(ModexpVariant v) {
    switch (v) {
        case ModexpVariant::Full:
            return "full";
        case ModexpVariant::SingleMult:
            return "single_mult";
        case ModexpVariant::A3Bit:
            return "a3bit";
    }
    return "?";
}

CircuitProgram build_modexp(const ModexpSpec &spec) {
    int L = spec.L;
    if (L < 2 || L > 16 || spec.n >= (uint64_t{1} << L) || spec.n < (uint64_t{1} << (L - 1)) ||
        spec.x == 0 || spec.x >= spec.n || std::gcd(spec.x, spec.n) != 1) {
        throw ContractViolation("invalid modular exponentiation spec");
    }
    CircuitProgram p;
    int na = spec.variant == ModexpVariant::Full ? 2 * L + 1 : spec.variant == ModexpVariant::SingleMult ? 1 : 3;
    const QubitRange A = p.add_register("A", na);
    const QubitRange F = p.add_register("F", L);
    const QubitRange s1 = p.add_register("scratch1", L + 1);
    const QubitRange s2 = p.add_register("scratch2", L + 2);
    p.name = spec.variant == ModexpVariant::Full         ? "f15_long"
             : spec.variant == ModexpVariant::SingleMult ? "mult"
                                                         : "f15_3bit";
    p.initial_bits = uint64_t{1} << F[0];

    MulLayout m;
    for (int i = 0; i < L; i++) {
        m.y.push_back(F[i]);
        m.carries.push_back(s1[i]);
    }
    m.t = s1[L];
    for (int i = 0; i <= L; i++) {
        m.z.push_back(s2[i]);
    }
    m.flag = s2[L + 1];

    for (int i = 0; i < na; i++) {
        p.add(Gate::rotation(A[i], kPi / 2, kPi / 2));
    }
    int mults = spec.variant == ModexpVariant::SingleMult ? 1 : 2 * L + 1;
    uint64_t c = spec.x % spec.n;
    for (int j = 0; j < mults; j++) {
        int a = A[std::min(j, na - 1)];
        if (spec.variant == ModexpVariant::A3Bit && j >= 3) {
            p.add(Gate::reuse_renorm(a));
            p.add(Gate::rotation(a, kPi / 2, kPi / 2));
        }
        controlled_mult(p.gates, m, a, c, spec.n);
        c = c * c % spec.n;
    }
    p.validate();
    return p;
}

void reuse_renorm(QuantumState &state, int q, const std::vector<uint8_t> *support) {
    for (const PulseSpec &pulse : lower_gate_threestate(Gate::reuse_renorm(q))) {
        apply_pulse(state, pulse);
    }
    clear_and_rescale(state, q, support);
}

int grover_iteration_count(uint64_t space_size, uint64_t num_solutions) {
    if (num_solutions < 1 || num_solutions > space_size) {
        throw ContractViolation("need 1 <= solutions <= space size");
    }
    double theta = std::asin(std::sqrt((double)num_solutions / (double)space_size));
    int k = (int)std::floor(kPi / (4 * theta));
    return k < 1 ? 1 : k;
}

CircuitProgram build_grover(const GroverSpec &spec) {
    int k = spec.key_bits;
    if (k < 1 || k > 24 || (spec.key >> k) != 0 || spec.iterations < 1) {
        throw ContractViolation("invalid grover spec");
    }
    CircuitProgram p;
    p.name = "grover";
    const QubitRange l = p.add_register("l", k);
    const int r = p.add_register("r", 1).first;
    const int s = p.add_register("s", 1).first;
    std::vector<int> clean;
    if (k >= 3) {
        const QubitRange scratch = p.add_register("scratch", k - 2);
        for (int i = 0; i < scratch.width; i++) {
            clean.push_back(scratch[i]);
        }
    }
    std::vector<int> lq;
    for (int i = 0; i < k; i++) {
        lq.push_back(l[i]);
        p.add(Gate::rotation(l[i], kPi / 2, kPi / 2));
    }
    p.add(Gate::set_bit(r));
    p.add(Gate::rotation(r, kPi / 2, kPi / 2));
    p.add(Gate::set_bit(s));
    for (int it = 0; it < spec.iterations; it++) {
        auto dress = [&] {
            for (int i = 0; i < k; i++) {
                if (!bit_of(spec.key, i)) {
                    p.add(Gate::flip(l[i]));
                }
            }
        };
        dress();
        append_mcx_clean(p.gates, lq, r, clean);
        dress();
        for (int q : lq) {
            p.add(Gate::fourier(q));
        }
        p.add(Gate::zero_reflect(lq, s));
        for (int q : lq) {
            p.add(Gate::fourier(q));
        }
    }
    p.target = SuccessTarget{"l", spec.key};
    p.validate();
    return p;
}

CircuitProgram build_benchmark(const std::string &name, const GroverSpec &grover) {
    if (name == "f21") {
        return build_f21_lookup();
    }
    if (name == "grover") {
        return build_grover(grover);
    }
    if (name == "mult") {
        return build_modexp({4, 7, 15, ModexpVariant::SingleMult});
    }
    if (name == "f15_3bit") {
        return build_modexp({4, 7, 15, ModexpVariant::A3Bit});
    }
    if (name == "f15_long") {
        return build_modexp({4, 7, 15, ModexpVariant::Full});
    }
    throw ContractViolation("unknown benchmark '" + name + "'");
}

}  // namespace ionsim
