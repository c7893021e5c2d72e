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

#include <cstdint>
#include <vector>

#include "permfilter/pauli.hpp"

namespace permfilter {

/// Multi-user detection instance y = H x + w with binary symbols.
struct MudProblem {
    std::size_t users = 0;      // n, columns of H
    std::size_t receivers = 0;  // m, rows of H
    std::vector<double> channel;  // row-major m x n
    std::vector<int> transmitted;  // +-1, length n
    std::vector<double> received;  // length m
    double noise_variance = 0.0;

    double h(std::size_t row, std::size_t col) const {
        return channel[row * users + col];
    }
};

/// Noise variance giving the requested SNR for unit-power symbols through a
/// channel with N(0, 1/m) entries: (n / m) 10^(-snr/10).
double mud_noise_variance(std::size_t users, std::size_t receivers, double snr_db);

MudProblem build_mud_problem(std::size_t users, std::size_t receivers, double snr_db, std::uint64_t seed);
/// Same draw with an explicit noise variance (0 gives a noiseless channel).
MudProblem build_mud_problem_with_variance(std::size_t users, std::size_t receivers, double noise_variance,
                                           std::uint64_t seed);

/// Ising form of the detection objective on `users` qubits:
/// sum_i [H^T y]_i Z_i - sum_{i<j} [H^T H]_ij Z_i Z_j. Every term is kept,
/// including zero weights. Qubit i carries symbol i with +1 <-> |0>.
Observable mud_phase_hamiltonian(const MudProblem &p);

/// Value of the phase Hamiltonian on a symbol vector.
double mud_classical_value(const MudProblem &p, const std::vector<int> &symbols);

/// Exhaustive argmin_x ||y - H x||^2 over {-1, +1}^n. Ties resolve to the
/// lexicographically first vector with -1 < +1.
std::vector<int> mud_ml_solution(const MudProblem &p);

/// Exhaustive argmax of the phase Hamiltonian's classical value.
std::vector<int> mud_hamiltonian_argmax(const MudProblem &p);

/// Symbols encoded by a computational basis index.
std::vector<int> symbols_from_index(std::uint64_t index, std::size_t users);

}  // namespace permfilter
