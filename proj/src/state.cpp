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


#include "permfilter/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "permfilter/error.hpp"

namespace permfilter {

namespace {

constexpr double kClipFloor = -1e-10;
constexpr double kSumTolerance = 1e-9;

std::vector<double> clip_eigenvalues(std::vector<double> values) {
    for (double &v : values) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::InvalidArgument, "eigenvalues must be finite");
        }
        if (v < kClipFloor) {
            fail(ErrorCode::NegativeEigenvalue, "eigenvalue " + std::to_string(v) + " is below -1e-10");
        }
        v = std::max(v, 0.0);
    }
    return values;
}

}  // namespace

std::size_t qubits_for_dim(std::size_t dim) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        fail(ErrorCode::DimensionMismatch, "dimension " + std::to_string(dim) + " is not a power of two >= 2");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    const std::size_t nq = qubits_for_dim(m.dim());
    DensityMatrix rho(std::move(m), nq);
    const double herm = rho.matrix_.hermiticity_error();
    if (herm > kTolerance) {
        fail(ErrorCode::InvalidState, "state is not Hermitian (error " + std::to_string(herm) + ")");
    }
    const Validity v = rho.validity();
    if (v.trace_error > kTolerance) {
        fail(ErrorCode::InvalidState, "state trace differs from 1 by " + std::to_string(v.trace_error));
    }
    if (v.min_eigenvalue < -kTolerance) {
        fail(ErrorCode::InvalidState, "state has eigenvalue " + std::to_string(v.min_eigenvalue));
    }
    return rho;
}

DensityMatrix DensityMatrix::pure_basis(std::size_t num_qubits, std::uint64_t index) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    qubits_for_dim(dim);
    if (index >= dim) {
        fail(ErrorCode::InvalidArgument, "basis index out of range");
    }
    ComplexMatrix m(dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m), num_qubits);
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> psi) {
    const std::size_t nq = qubits_for_dim(psi.size());
    double norm2 = 0.0;
    for (const Complex &a : psi) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kTolerance) {
        fail(ErrorCode::InvalidState, "state vector norm^2 is " + std::to_string(norm2));
    }
    return DensityMatrix(ComplexMatrix::outer(psi), nq);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t nq = qubits_for_dim(dim);
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(std::move(m), nq);
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
    const std::size_t nq = qubits_for_dim(probabilities.size());
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            fail(ErrorCode::InvalidState, "diagonal probabilities must be finite and nonnegative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kTolerance) {
        fail(ErrorCode::InvalidState, "diagonal probabilities sum to " + std::to_string(total));
    }
    return DensityMatrix(ComplexMatrix::diagonal(probabilities), nq);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
    const std::size_t nq = qubits_for_dim(m.dim());
    return DensityMatrix(std::move(m), nq);
}

DensityMatrix::Validity DensityMatrix::validity() const {
    Validity v{};
    v.hermiticity_error = matrix_.hermiticity_error();
    v.trace_error = std::abs(matrix_.trace() - 1.0);
    if (v.hermiticity_error > 1e-8) {
        v.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return v;
    }
    v.min_eigenvalue = hermitian_eigs(matrix_).values.back();
    return v;
}

double expectation(const DensityMatrix &rho, const Observable &obs) {
    if (obs.num_qubits() != rho.num_qubits()) {
        fail(ErrorCode::DimensionMismatch, "observable acts on " + std::to_string(obs.num_qubits()) +
                                               " qubits, state has " + std::to_string(rho.num_qubits()));
    }
    Complex acc = 0.0;
    for (const auto &t : obs.terms()) {
        acc += t.weight * trace_with_pauli(rho.matrix(), t.string);
    }
    const double scale = std::max(1.0, std::abs(acc.real()));
    if (std::abs(acc.imag()) > 1e-10 * scale) {
        fail(ErrorCode::InvalidState, "expectation has imaginary part " + std::to_string(acc.imag()));
    }
    return acc.real();
}

ComplexMatrix matrix_power(const ComplexMatrix &m, int n) {
    if (n < 0) {
        fail(ErrorCode::InvalidArgument, "matrix power must be nonnegative");
    }
    ComplexMatrix result = ComplexMatrix::identity(m.dim());
    ComplexMatrix base = m;
    bool first = true;
    while (n > 0) {
        if (n & 1) {
            result = first ? base : result * base;
            first = false;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

double matrix_power_trace(const DensityMatrix &rho, int n) {
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "power must be >= 1");
    }
    if (n == 1) {
        return rho.matrix().trace().real();
    }
    // Tr{A B} = sum_ij A_ij B_ji, so only half the power is formed.
    const ComplexMatrix half = matrix_power(rho.matrix(), n / 2);
    const ComplexMatrix other = (n % 2 == 0) ? half : half * rho.matrix();
    const std::size_t d = rho.dim();
    Complex acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            acc += half(i, j) * other(j, i);
        }
    }
    return acc.real();
}

SpectrumSummary SpectrumSummary::from_eigenvalues(std::vector<double> eigenvalues) {
    if (eigenvalues.empty()) {
        fail(ErrorCode::InvalidArgument, "eigenvalue list is empty");
    }
    SpectrumSummary s;
    s.eigenvalues = clip_eigenvalues(std::move(eigenvalues));
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    const double total = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
    if (std::abs(total - 1.0) > kSumTolerance) {
        fail(ErrorCode::InvalidState, "eigenvalues sum to " + std::to_string(total));
    }
    s.lambda1 = s.eigenvalues.front();
    s.noise.assign(s.eigenvalues.begin() + 1, s.eigenvalues.end());
    if (s.noise.empty()) {
        return s;
    }
    const double count = static_cast<double>(s.noise.size());
    s.mu = std::accumulate(s.noise.begin(), s.noise.end(), 0.0) / count;
    double ss = 0.0;
    for (double v : s.noise) {
        ss += (v - s.mu) * (v - s.mu);
    }
    s.bandwidth = std::sqrt(ss / count);
    s.rel_bandwidth = s.mu < kPureMeanThreshold ? 0.0 : s.bandwidth / s.mu;
    return s;
}

SpectrumSummary spectrum_summary(const DensityMatrix &rho) {
    return SpectrumSummary::from_eigenvalues(hermitian_eigs(rho.matrix()).values);
}

}  // namespace permfilter
