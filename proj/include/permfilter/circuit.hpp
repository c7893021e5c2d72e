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


#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "permfilter/linalg.hpp"
#include "permfilter/pauli.hpp"
#include "permfilter/state.hpp"

namespace permfilter {

enum class GateKind : std::uint8_t { RX, RY, RZ, RZZ, H };

std::string gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind;
    std::array<std::size_t, 2> qubits;  // second entry unused for 1-qubit gates
    double angle;                       // radians, 0 for H

    static Gate rx(std::size_t q, double angle) {
        return {GateKind::RX, {q, 0}, angle};
    }
    static Gate ry(std::size_t q, double angle) {
        return {GateKind::RY, {q, 0}, angle};
    }
    static Gate rz(std::size_t q, double angle) {
        return {GateKind::RZ, {q, 0}, angle};
    }
    static Gate rzz(std::size_t q0, std::size_t q1, double angle) {
        return {GateKind::RZZ, {q0, q1}, angle};
    }
    static Gate h(std::size_t q) {
        return {GateKind::H, {q, 0}, 0.0};
    }

    std::size_t arity() const noexcept {
        return kind == GateKind::RZZ ? 2 : 1;
    }
};

/// Per-gate depolarizing probabilities for one- and two-qubit gates.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Single-qubit Pauli channel rho -> (1-pX-pY-pZ) rho + pX XrhoX + pY YrhoY + pZ ZrhoZ.
struct PauliChannel {
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    /// Throws InvalidArgument unless all probabilities are >= 0 and sum to <= 1.
    void validate() const;
    /// Real 4x4 transfer matrix in the (I, X, Y, Z) basis. It is diagonal for
    /// Pauli channels; the entries are returned as the diagonal.
    std::array<double, 4> transfer_diagonal() const;
};

struct CircuitSpec {
    std::size_t num_qubits = 0;
    std::size_t stages = 0;
    std::vector<Gate> gates;  // applied in order to |0...0>
    NoiseModel noise;
    std::uint64_t seed = 0;
};

/// Random layered circuit. Each stage applies RZZ on every pair (i < j) in
/// lexicographic order, then RX on every qubit, then RY on every qubit.
/// Angles are i.i.d. uniform on [-pi, pi).
CircuitSpec build_stage_circuit(std::size_t num_qubits, std::size_t stages, std::uint64_t seed,
                                NoiseModel noise = {});

/// 2x2 (or 4x4 for RZZ) unitary of a gate in its own qubit order.
ComplexMatrix gate_unitary(const Gate &g);

/// Full 2^Nq unitary of a gate, built by Kronecker products. Used as an
/// oracle in tests; the simulator never forms it.
ComplexMatrix embedded_gate_unitary(const Gate &g, std::size_t num_qubits);

/// rho -> U rho U^dagger. Throws DimensionMismatch or InvalidArgument.
DensityMatrix apply_gate(const DensityMatrix &rho, const Gate &g);
void apply_gate_inplace(ComplexMatrix &rho, std::size_t num_qubits, const Gate &g);

/// Uniform depolarizing channel on one or two qubits:
/// rho -> (1-p) rho + p/(4^k - 1) sum over non-identity Paulis P rho P.
DensityMatrix apply_depolarizing(const DensityMatrix &rho, std::span<const std::size_t> qubits, double p);
void apply_depolarizing_inplace(ComplexMatrix &rho, std::size_t num_qubits, std::span<const std::size_t> qubits,
                                double p);

DensityMatrix apply_pauli_channel(const DensityMatrix &rho, std::size_t qubit, const PauliChannel &channel);

/// Runs the circuit from |0...0> with depolarizing noise after every gate.
DensityMatrix run_noisy(const CircuitSpec &circuit);

/// Noiseless pure-state evolution from |0...0>.
std::vector<Complex> run_statevector(const CircuitSpec &circuit);

/// Sum over gates of their depolarizing probability.
double expected_errors(const CircuitSpec &circuit);

/// Two-qubit probability p2 such that expected_errors equals `target` when
/// p1 = p1_ratio * p2, for the given gate list.
double calibrate_p2_for(double target, const CircuitSpec &circuit, double p1_ratio = 0.1);
/// Same for a layered circuit of the given shape.
double calibrate_p2_for(double target, std::size_t num_qubits, std::size_t stages, double p1_ratio = 0.1);

/// Linear annealing schedule: c_l = l / L and b_l = 1 - l / L for l = 1..L.
struct QaoaSchedule {
    std::vector<double> b;  // mixer coefficients
    std::vector<double> c;  // phase coefficients
    std::size_t num_stages() const noexcept {
        return c.size();
    }
};
QaoaSchedule linear_schedule(std::size_t num_stages);

/// Alternating-operator circuit for a phase Hamiltonian made of Z and ZZ
/// terms. H on every qubit, then per stage RZ(2 c w) / RZZ(2 c w) for each
/// term followed by RX(2 b) on every qubit. Identity terms only add a global
/// phase and are skipped.
CircuitSpec build_qaoa_circuit(const Observable &phase_hamiltonian, const QaoaSchedule &schedule,
                               NoiseModel noise = {});

}  // namespace permfilter
