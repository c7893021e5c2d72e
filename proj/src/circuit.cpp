// Copyright 2026 The permfilter Authors
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


#include "permfilter/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "permfilter/error.hpp"
#include "permfilter/rng.hpp"

namespace permfilter {

namespace {

using std::numbers::pi;

void check_probability(double p, const char *what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

void check_gate(const Gate &g, std::size_t num_qubits) {
    if (g.qubits[0] >= num_qubits) {
        fail(ErrorCode::DimensionMismatch, "gate qubit " + std::to_string(g.qubits[0]) + " out of range for " +
                                               std::to_string(num_qubits) + " qubits");
    }
    if (g.arity() == 2) {
        if (g.qubits[1] >= num_qubits) {
            fail(ErrorCode::DimensionMismatch, "gate qubit " + std::to_string(g.qubits[1]) + " out of range");
        }
        if (g.qubits[0] == g.qubits[1]) {
            fail(ErrorCode::InvalidArgument, "two-qubit gate needs distinct qubits");
        }
    }
    if (!std::isfinite(g.angle)) {
        fail(ErrorCode::InvalidArgument, "gate angle must be finite");
    }
}

std::uint64_t bit_of(std::size_t qubit, std::size_t num_qubits) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

// exp(-i angle/2 z0 z1) for the parity of the two bits of x.
Complex zz_phase(std::uint64_t x, std::uint64_t b0, std::uint64_t b1, double half) {
    const bool odd = (((x & b0) != 0) != ((x & b1) != 0));
    return std::polar(1.0, odd ? half : -half);
}

void apply_1q_left(ComplexMatrix &rho, std::uint64_t bit, const ComplexMatrix &u) {
    const std::size_t d = rho.dim();
    for (std::uint64_t r0 = 0; r0 < d; ++r0) {
        if (r0 & bit) {
            continue;
        }
        const std::uint64_t r1 = r0 | bit;
        for (std::size_t c = 0; c < d; ++c) {
            const Complex a = rho(r0, c);
            const Complex b = rho(r1, c);
            rho(r0, c) = u(0, 0) * a + u(0, 1) * b;
            rho(r1, c) = u(1, 0) * a + u(1, 1) * b;
        }
    }
}

void apply_1q_right_adjoint(ComplexMatrix &rho, std::uint64_t bit, const ComplexMatrix &u) {
    const std::size_t d = rho.dim();
    const Complex u00 = std::conj(u(0, 0));
    const Complex u01 = std::conj(u(0, 1));
    const Complex u10 = std::conj(u(1, 0));
    const Complex u11 = std::conj(u(1, 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::uint64_t c0 = 0; c0 < d; ++c0) {
            if (c0 & bit) {
                continue;
            }
            const std::uint64_t c1 = c0 | bit;
            const Complex a = rho(r, c0);
            const Complex b = rho(r, c1);
            rho(r, c0) = a * u00 + b * u01;
            rho(r, c1) = a * u10 + b * u11;
        }
    }
}

std::vector<Complex> basis_zero(std::size_t num_qubits) {
    std::vector<Complex> psi(std::size_t{1} << num_qubits);
    psi[0] = 1.0;
    return psi;
}

void apply_gate_to_vector(std::vector<Complex> &psi, std::size_t num_qubits, const Gate &g) {
    check_gate(g, num_qubits);
    const std::size_t d = psi.size();
    if (g.kind == GateKind::RZZ) {
        const std::uint64_t b0 = bit_of(g.qubits[0], num_qubits);
        const std::uint64_t b1 = bit_of(g.qubits[1], num_qubits);
        for (std::uint64_t x = 0; x < d; ++x) {
            psi[x] *= zz_phase(x, b0, b1, g.angle / 2.0);
        }
        return;
    }
    const ComplexMatrix u = gate_unitary(g);
    const std::uint64_t bit = bit_of(g.qubits[0], num_qubits);
    for (std::uint64_t x0 = 0; x0 < d; ++x0) {
        if (x0 & bit) {
            continue;
        }
        const Complex a = psi[x0];
        const Complex b = psi[x0 | bit];
        psi[x0] = u(0, 0) * a + u(0, 1) * b;
        psi[x0 | bit] = u(1, 0) * a + u(1, 1) * b;
    }
}

}  // namespace

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::RZZ:
            return "RZZ";
        case GateKind::H:
            return "H";
    }
    return "?";
}

void PauliChannel::validate() const {
    check_probability(px, "pX");
    check_probability(py, "pY");
    check_probability(pz, "pZ");
    if (px + py + pz > 1.0 + 1e-15) {
        fail(ErrorCode::InvalidArgument, "Pauli channel probabilities sum above 1");
    }
}

std::array<double, 4> PauliChannel::transfer_diagonal() const {
    validate();
    return {1.0, 1.0 - 2.0 * (py + pz), 1.0 - 2.0 * (px + pz), 1.0 - 2.0 * (px + py)};
}

CircuitSpec build_stage_circuit(std::size_t num_qubits, std::size_t stages, std::uint64_t seed, NoiseModel noise) {
    if (num_qubits < 2) {
        fail(ErrorCode::InvalidArgument, "layered circuits need at least 2 qubits");
    }
    if (stages < 1) {
        fail(ErrorCode::InvalidArgument, "layered circuits need at least 1 stage");
    }
    check_probability(noise.p1, "p1");
    check_probability(noise.p2, "p2");
    CircuitSpec spec;
    spec.num_qubits = num_qubits;
    spec.stages = stages;
    spec.noise = noise;
    spec.seed = seed;
    Rng rng(derive_seed(seed, "angles"));
    const std::size_t pairs = num_qubits * (num_qubits - 1) / 2;
    spec.gates.reserve(stages * (pairs + 2 * num_qubits));
    for (std::size_t s = 0; s < stages; ++s) {
        for (std::size_t i = 0; i < num_qubits; ++i) {
            for (std::size_t j = i + 1; j < num_qubits; ++j) {
                spec.gates.push_back(Gate::rzz(i, j, rng.uniform(-pi, pi)));
            }
        }
        for (std::size_t q = 0; q < num_qubits; ++q) {
            spec.gates.push_back(Gate::rx(q, rng.uniform(-pi, pi)));
        }
        for (std::size_t q = 0; q < num_qubits; ++q) {
            spec.gates.push_back(Gate::ry(q, rng.uniform(-pi, pi)));
        }
    }
    return spec;
}

ComplexMatrix gate_unitary(const Gate &g) {
    const double c = std::cos(g.angle / 2.0);
    const double s = std::sin(g.angle / 2.0);
    const Complex i(0.0, 1.0);
    switch (g.kind) {
        case GateKind::RX:
            return ComplexMatrix(2, {c, -i * s, -i * s, c});
        case GateKind::RY:
            return ComplexMatrix(2, {c, -s, s, c});
        case GateKind::RZ:
            return ComplexMatrix(2, {std::polar(1.0, -g.angle / 2.0), 0.0, 0.0, std::polar(1.0, g.angle / 2.0)});
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2.0;
            return ComplexMatrix(2, {r, r, r, -r});
        }
        case GateKind::RZZ: {
            ComplexMatrix u(4);
            const Complex even = std::polar(1.0, -g.angle / 2.0);
            const Complex odd = std::polar(1.0, g.angle / 2.0);
            u(0, 0) = even;
            u(1, 1) = odd;
            u(2, 2) = odd;
            u(3, 3) = even;
            return u;
        }
    }
    return ComplexMatrix::identity(2);
}

ComplexMatrix embedded_gate_unitary(const Gate &g, std::size_t num_qubits) {
    check_gate(g, num_qubits);
    const std::size_t d = std::size_t{1} << num_qubits;
    if (g.kind == GateKind::RZZ) {
        ComplexMatrix u(d);
        const std::uint64_t b0 = bit_of(g.qubits[0], num_qubits);
        const std::uint64_t b1 = bit_of(g.qubits[1], num_qubits);
        for (std::uint64_t x = 0; x < d; ++x) {
            u(x, x) = zz_phase(x, b0, b1, g.angle / 2.0);
        }
        return u;
    }
    ComplexMatrix out = g.qubits[0] == 0 ? gate_unitary(g) : ComplexMatrix::identity(2);
    for (std::size_t q = 1; q < num_qubits; ++q) {
        out = kron(out, q == g.qubits[0] ? gate_unitary(g) : ComplexMatrix::identity(2));
    }
    return out;
}

void apply_gate_inplace(ComplexMatrix &rho, std::size_t num_qubits, const Gate &g) {
    if (rho.dim() != (std::size_t{1} << num_qubits)) {
        fail(ErrorCode::DimensionMismatch, "state dimension does not match qubit count");
    }
    check_gate(g, num_qubits);
    const std::size_t d = rho.dim();
    if (g.kind == GateKind::RZZ) {
        const std::uint64_t b0 = bit_of(g.qubits[0], num_qubits);
        const std::uint64_t b1 = bit_of(g.qubits[1], num_qubits);
        std::vector<Complex> phase(d);
        for (std::uint64_t x = 0; x < d; ++x) {
            phase[x] = zz_phase(x, b0, b1, g.angle / 2.0);
        }
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                rho(r, c) *= phase[r] * std::conj(phase[c]);
            }
        }
        return;
    }
    const ComplexMatrix u = gate_unitary(g);
    const std::uint64_t bit = bit_of(g.qubits[0], num_qubits);
    apply_1q_left(rho, bit, u);
    apply_1q_right_adjoint(rho, bit, u);
}

DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &g) {
    ComplexMatrix m = rho.matrix();
    apply_gate_inplace(m, rho.num_qubits(), g);
    return DensityMatrix::unchecked(std::move(m));
}

void apply_depolarizing_inplace(ComplexMatrix &rho, std::size_t num_qubits, std::span<const std::size_t> qubits,
                                double p) {
    check_probability(p, "depolarizing probability");
    if (qubits.empty() || qubits.size() > 2) {
        fail(ErrorCode::InvalidArgument, "depolarizing acts on 1 or 2 qubits");
    }
    if (rho.dim() != (std::size_t{1} << num_qubits)) {
        fail(ErrorCode::DimensionMismatch, "state dimension does not match qubit count");
    }
    std::uint64_t mask = 0;
    for (std::size_t q : qubits) {
        if (q >= num_qubits) {
            fail(ErrorCode::DimensionMismatch, "depolarizing qubit out of range");
        }
        const std::uint64_t b = bit_of(q, num_qubits);
        if (mask & b) {
            fail(ErrorCode::InvalidArgument, "depolarizing qubits must be distinct");
        }
        mask |= b;
    }
    if (p == 0.0) {
        return;
    }
    // The uniform mixture over non-identity Paulis equals a partial twirl:
    // (1 - g) rho + g Tr_Q{rho} (x) I / 2^k with g = p 4^k / (4^k - 1).
    const std::size_t k = qubits.size();
    const double full = static_cast<double>(std::uint64_t{1} << (2 * k));
    const double gamma = p * full / (full - 1.0);
    const double keep = 1.0 - gamma;
    const double inv_sub = 1.0 / static_cast<double>(std::uint64_t{1} << k);

    std::vector<std::uint64_t> subs;
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
        subs.push_back(s);
        if (s == 0) {
            break;
        }
    }
    const std::size_t d = rho.dim();
    for (std::uint64_t r = 0; r < d; ++r) {
        if (r & mask) {
            continue;
        }
        for (std::uint64_t c = 0; c < d; ++c) {
            if (c & mask) {
                continue;
            }
            Complex partial = 0.0;
            for (std::uint64_t a : subs) {
                partial += rho(r | a, c | a);
            }
            const Complex mixed = gamma * inv_sub * partial;
            for (std::uint64_t a : subs) {
                for (std::uint64_t b : subs) {
                    Complex &entry = rho(r | a, c | b);
                    entry *= keep;
                    if (a == b) {
                        entry += mixed;
                    }
                }
            }
        }
    }
}

DensityMatrix apply_depolarizing(const DensityMatrix &rho, std::span<const std::size_t> qubits, double p) {
    ComplexMatrix m = rho.matrix();
    apply_depolarizing_inplace(m, rho.num_qubits(), qubits, p);
    return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix apply_pauli_channel(const DensityMatrix &rho, std::size_t qubit, const PauliChannel &channel) {
    channel.validate();
    const std::size_t nq = rho.num_qubits();
    if (qubit >= nq) {
        fail(ErrorCode::DimensionMismatch, "channel qubit out of range");
    }
    const std::size_t d = rho.dim();
    const ComplexMatrix &in = rho.matrix();
    ComplexMatrix out = in;
    out *= 1.0 - channel.px - channel.py - channel.pz;
    const std::pair<Pauli, double> parts[3] = {{Pauli::X, channel.px}, {Pauli::Y, channel.py}, {Pauli::Z, channel.pz}};
    for (const auto &[letter, prob] : parts) {
        if (prob == 0.0) {
            continue;
        }
        const PauliString s = PauliString::single(nq, qubit, letter);
        const std::uint64_t m = s.flip_mask();
        // (P rho P)(r, c) = omega(r ^ m) rho(r ^ m, c ^ m) omega(c).
        for (std::uint64_t r = 0; r < d; ++r) {
            for (std::uint64_t c = 0; c < d; ++c) {
                out(r, c) += prob * s.phase(r ^ m) * in(r ^ m, c ^ m) * s.phase(c);
            }
        }
    }
    return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix run_noisy(const CircuitSpec &circuit) {
    check_probability(circuit.noise.p1, "p1");
    check_probability(circuit.noise.p2, "p2");
    const std::size_t nq = circuit.num_qubits;
    ComplexMatrix rho = DensityMatrix::pure_basis(nq, 0).matrix();
    for (const Gate &g : circuit.gates) {
        apply_gate_inplace(rho, nq, g);
        const double p = g.arity() == 2 ? circuit.noise.p2 : circuit.noise.p1;
        if (p > 0.0) {
            apply_depolarizing_inplace(rho, nq, std::span<const std::size_t>(g.qubits.data(), g.arity()), p);
        }
    }
    return DensityMatrix::unchecked(std::move(rho));
}

std::vector<Complex> run_statevector(const CircuitSpec &circuit) {
    std::vector<Complex> psi = basis_zero(circuit.num_qubits);
    for (const Gate &g : circuit.gates) {
        apply_gate_to_vector(psi, circuit.num_qubits, g);
    }
    return psi;
}

double expected_errors(const CircuitSpec &circuit) {
    double total = 0.0;
    for (const Gate &g : circuit.gates) {
        total += g.arity() == 2 ? circuit.noise.p2 : circuit.noise.p1;
    }
    return total;
}

namespace {

double calibrate_from_counts(double target, double n1, double n2, double p1_ratio) {
    if (!(target >= 0.0) || !(p1_ratio >= 0.0)) {
        fail(ErrorCode::InvalidArgument, "target and p1 ratio must be nonnegative");
    }
    const double weight = n2 + p1_ratio * n1;
    if (weight <= 0.0) {
        fail(ErrorCode::InvalidArgument, "circuit has no noisy gates to calibrate");
    }
    const double p2 = target / weight;
    if (p2 > 1.0 || p1_ratio * p2 > 1.0) {
        fail(ErrorCode::InvalidArgument, "target expected errors needs a probability above 1");
    }
    return p2;
}

}  // namespace

double calibrate_p2_for(double target, const CircuitSpec &circuit, double p1_ratio) {
    double n1 = 0.0;
    double n2 = 0.0;
    for (const Gate &g : circuit.gates) {
        (g.arity() == 2 ? n2 : n1) += 1.0;
    }
    return calibrate_from_counts(target, n1, n2, p1_ratio);
}

double calibrate_p2_for(double target, std::size_t num_qubits, std::size_t stages, double p1_ratio) {
    const double n2 = static_cast<double>(stages * num_qubits * (num_qubits - 1) / 2);
    const double n1 = static_cast<double>(stages * 2 * num_qubits);
    return calibrate_from_counts(target, n1, n2, p1_ratio);
}

QaoaSchedule linear_schedule(std::size_t num_stages) {
    if (num_stages < 1) {
        fail(ErrorCode::InvalidArgument, "schedule needs at least 1 stage");
    }
    QaoaSchedule s;
    const double total = static_cast<double>(num_stages);
    for (std::size_t l = 1; l <= num_stages; ++l) {
        const double frac = static_cast<double>(l) / total;
        s.c.push_back(frac);
        s.b.push_back(1.0 - frac);
    }
    return s;
}

CircuitSpec build_qaoa_circuit(const Observable &phase_hamiltonian, const QaoaSchedule &schedule, NoiseModel noise) {
    if (schedule.b.size() != schedule.c.size() || schedule.c.empty()) {
        fail(ErrorCode::InvalidArgument, "schedule coefficient lists must be non-empty and equal length");
    }
    check_probability(noise.p1, "p1");
    check_probability(noise.p2, "p2");
    const std::size_t nq = phase_hamiltonian.num_qubits();
    struct Compiled {
        bool pair;
        std::size_t q0, q1;
        double weight;
    };
    std::vector<Compiled> terms;
    for (const auto &t : phase_hamiltonian.terms()) {
        std::vector<std::size_t> support;
        for (std::size_t q = 0; q < nq; ++q) {
            const Pauli p = t.string[q];
            if (p == Pauli::I) {
                continue;
            }
            if (p != Pauli::Z) {
                fail(ErrorCode::InvalidArgument, "phase Hamiltonian may contain only Z and ZZ terms");
            }
            support.push_back(q);
        }
        if (support.empty()) {
            continue;
        }
        if (support.size() > 2) {
            fail(ErrorCode::InvalidArgument, "phase Hamiltonian terms act on at most 2 qubits");
        }
        terms.push_back({support.size() == 2, support[0], support.size() == 2 ? support[1] : 0, t.weight});
    }

    CircuitSpec spec;
    spec.num_qubits = nq;
    spec.stages = schedule.num_stages();
    spec.noise = noise;
    for (std::size_t q = 0; q < nq; ++q) {
        spec.gates.push_back(Gate::h(q));
    }
    for (std::size_t l = 0; l < schedule.num_stages(); ++l) {
        const double c = schedule.c[l];
        for (const Compiled &t : terms) {
            spec.gates.push_back(t.pair ? Gate::rzz(t.q0, t.q1, 2.0 * c * t.weight) : Gate::rz(t.q0, 2.0 * c * t.weight));
        }
        for (std::size_t q = 0; q < nq; ++q) {
            spec.gates.push_back(Gate::rx(q, 2.0 * schedule.b[l]));
        }
    }
    return spec;
}

}  // namespace permfilter
