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
#include <span>
#include <vector>

#include "permfilter/linalg.hpp"
#include "permfilter/pauli.hpp"

namespace permfilter {

/// Hermitian, positive semidefinite, unit-trace matrix over 2^Nq dimensions.
class DensityMatrix {
   public:
    /// Tolerance applied by the validating factories.
    static constexpr double kTolerance = 1e-10;

    /// Validates Hermiticity, unit trace and the minimum eigenvalue, each
    /// against kTolerance. Throws InvalidState (or NotHermitian /
    /// DimensionMismatch) otherwise.
    static DensityMatrix from_matrix(ComplexMatrix m);
    /// |index><index| on num_qubits qubits.
    static DensityMatrix pure_basis(std::size_t num_qubits, std::uint64_t index);
    /// |psi><psi|; psi must have unit norm within kTolerance.
    static DensityMatrix from_pure(std::span<const Complex> psi);
    static DensityMatrix maximally_mixed(std::size_t num_qubits);
    /// Diagonal state from a probability vector of length 2^Nq.
    static DensityMatrix diagonal(std::span<const double> probabilities);
    /// Wraps a matrix without checks. The simulator uses this for states it
    /// produced from channels that preserve the invariants by construction.
    static DensityMatrix unchecked(ComplexMatrix m);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.dim();
    }
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }

    struct Validity {
        double hermiticity_error;
        double trace_error;
        double min_eigenvalue;
        bool ok(double tolerance) const {
            return hermiticity_error <= tolerance && trace_error <= tolerance && min_eigenvalue >= -tolerance;
        }
    };
    /// Measures the three invariants (costs one eigendecomposition).
    Validity validity() const;

   private:
    DensityMatrix(ComplexMatrix m, std::size_t num_qubits) : matrix_(std::move(m)), num_qubits_(num_qubits) {
    }
    ComplexMatrix matrix_;
    std::size_t num_qubits_ = 0;
};

/// Number of qubits for a power-of-two dimension. Throws DimensionMismatch.
std::size_t qubits_for_dim(std::size_t dim);

/// sum_i w_i Tr{rho S_i}. Throws DimensionMismatch.
double expectation(const DensityMatrix &rho, const Observable &obs);

/// rho^n by repeated squaring.
ComplexMatrix matrix_power(const ComplexMatrix &m, int n);

/// Tr{rho^n} by explicit matrix products, independent of any
/// eigendecomposition.
double matrix_power_trace(const DensityMatrix &rho, int n);

/// Spectral statistics of a state. The dominant eigenvalue is split off and
/// the remainder ("noise part") is summarized by its mean, standard
/// deviation and their ratio.
struct SpectrumSummary {
    std::vector<double> eigenvalues;  // descending, clipped at zero
    double lambda1 = 0.0;
    std::vector<double> noise;  // eigenvalues[1..]
    double mu = 0.0;
    double bandwidth = 0.0;
    double rel_bandwidth = 0.0;

    /// Builds a summary from any nonnegative eigenvalue list summing to 1
    /// (within 1e-9). Small negatives down to -1e-10 are clipped.
    static SpectrumSummary from_eigenvalues(std::vector<double> eigenvalues);
};

/// Below this noise mean the state counts as pure and b is reported as 0.
inline constexpr double kPureMeanThreshold = 1e-14;

SpectrumSummary spectrum_summary(const DensityMatrix &rho);

}  // namespace permfilter
