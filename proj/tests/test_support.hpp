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


// Shared fixtures for the unit tests.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "permfilter/linalg.hpp"
#include "permfilter/pauli.hpp"
#include "permfilter/rng.hpp"
#include "permfilter/state.hpp"

namespace permfilter::testing {

/// G G^dagger / Tr with a complex Gaussian dim x rank factor G.
inline DensityMatrix random_density(std::size_t num_qubits, std::uint64_t seed, std::size_t rank = 0) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (rank == 0) {
        rank = dim;
    }
    Rng rng(seed);
    std::vector<Complex> g(dim * rank);
    for (auto &z : g) {
        z = Complex(rng.normal(), rng.normal());
    }
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < rank; ++k) {
                acc += g[r * rank + k] * std::conj(g[c * rank + k]);
            }
            m(r, c) = acc;
        }
    }
    m *= 1.0 / m.trace().real();
    return DensityMatrix::from_matrix(std::move(m));
}

inline PauliString random_pauli(std::size_t num_qubits, Rng &rng) {
    std::vector<Pauli> letters(num_qubits);
    for (auto &p : letters) {
        p = static_cast<Pauli>(rng.next_u64() % 4);
    }
    return PauliString(std::move(letters));
}

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd out(m.dim(), m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

/// Diagonal state padded with zeros to the next power of two.
inline DensityMatrix padded_diagonal(std::vector<double> p) {
    std::size_t dim = 1;
    while (dim < p.size()) {
        dim <<= 1;
    }
    if (dim < 2) {
        dim = 2;
    }
    p.resize(dim, 0.0);
    return DensityMatrix::diagonal(p);
}

}  // namespace permfilter::testing
