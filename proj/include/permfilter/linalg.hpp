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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace permfilter {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    /// Takes ownership of `entries` (row-major, dim*dim values). Rejects
    /// size mismatches and non-finite entries.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix outer(std::span<const Complex> ket);

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) noexcept {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    /// Largest entrywise |A - A^dagger|.
    double hermiticity_error() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise |a - b|. Dimensions must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Eigenvalues (descending) and the matching orthonormal eigenvectors stored
/// as columns of `vectors`.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Throws NotHermitian when max |m - m^dagger| exceeds 1e-8.
EigenSystem hermitian_eigs(const ComplexMatrix &m);

/// Jacobi tuning knobs. Exposed for tests; the defaults are what
/// hermitian_eigs uses.
struct JacobiOptions {
    double off_diagonal_threshold = 1e-12;
    int max_sweeps = 100;
    double hermitian_tolerance = 1e-8;
};

EigenSystem hermitian_eigs(const ComplexMatrix &m, const JacobiOptions &options);

}  // namespace permfilter
