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

#include <span>
#include <string>
#include <vector>

#include "permfilter/filter.hpp"
#include "permfilter/pauli.hpp"
#include "permfilter/spectral.hpp"
#include "permfilter/state.hpp"

namespace permfilter {

/// Eigendecomposition of a state, computed once and reused by every
/// mitigation output. Eigenvalues are clipped at zero like SpectrumSummary.
class SpectralDecomposition {
   public:
    explicit SpectralDecomposition(const DensityMatrix &rho);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::span<const double> eigenvalues() const noexcept {
        return eigenvalues_;
    }
    const ComplexMatrix &eigenvectors() const noexcept {
        return vectors_;
    }
    /// <psi_i|O|psi_i> for every eigenvector, identity terms included.
    std::vector<double> eigenvector_expectations(const Observable &obs) const;
    /// Tr{rho^n O} = sum_i l_i^n <psi_i|O|psi_i>.
    double trace_power_observable(const Observable &obs, int n) const;
    /// Tr{rho^n}.
    double trace_power(int n) const;
    SpectrumSummary summary() const;

   private:
    std::size_t num_qubits_;
    std::vector<double> eigenvalues_;
    ComplexMatrix vectors_;
};

/// Tr{rho^n O} from explicit matrix powers; the independent path.
double trace_power_observable(const DensityMatrix &rho, const Observable &obs, int n);

enum class NormalizationMode {
    /// Divide by sum_n alpha Tr{rho^n}, the filtered identity.
    trace,
    /// Divide by h(l1), the filtered dominant eigenvalue.
    dominant,
};

struct MitigationResult {
    double value = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
    std::string method;  // "raw", "vd(n)" or "filter(N)"
};

/// Tr{rho^n U} / Tr{rho^n}.
MitigationResult vd_output(const SpectralDecomposition &rho, const Observable &obs, int n);
MitigationResult vd_output(const DensityMatrix &rho, const Observable &obs, int n);

/// sum_n alpha Tr{rho^n U} / sum_n alpha Tr{rho^n} for any (not necessarily
/// monic) coefficient vector. Throws DegenerateDenominator when the
/// denominator magnitude is at most 1e-12.
MitigationResult filter_output(const SpectralDecomposition &rho, const Observable &obs,
                               std::span<const double> coefficients,
                               NormalizationMode mode = NormalizationMode::trace);
MitigationResult filter_output(const SpectralDecomposition &rho, const Observable &obs, const FilterSpec &filter,
                               NormalizationMode mode = NormalizationMode::trace);
MitigationResult filter_output(const DensityMatrix &rho, const Observable &obs, const FilterSpec &filter,
                               NormalizationMode mode = NormalizationMode::trace);

struct ErrorReport {
    double eps_u = 0.0;                // |y - ideal| on the identity-free observable
    double eps_tilde_empirical = 0.0;  // sum over noise eigenvalues of |h|
    double error_ratio = 0.0;          // empirical metric relative to same-order VD
    double ideal_reference = 0.0;      // ideal expectation, identity-free
    double value = 0.0;                // mitigated expectation, identity-free
};

/// Error of a filter's estimate against an ideal expectation value. The
/// identity component of the observable is dropped from both sides.
ErrorReport estimation_error(const SpectralDecomposition &noisy, double ideal_value, const Observable &obs,
                             const FilterSpec &filter);
ErrorReport estimation_error(const DensityMatrix &noisy, const DensityMatrix &ideal, const Observable &obs,
                             const FilterSpec &filter);

/// sum_{i>=2} |h(l_i)|. With `normalized`, scaled by 2 / h(l1).
double empirical_design_metric(const SpectrumSummary &spectrum, const FilterSpec &filter, bool normalized = false);

/// Empirical metric relative to VD of the same order. Throws
/// DegenerateDenominator when the VD metric vanishes (pure states).
double error_ratio(const SpectrumSummary &spectrum, const FilterSpec &filter);
/// Model-based ratio epsilon_tilde(beta) / epsilon_tilde(0).
double error_ratio(const ParetoModel &model, const FilterSpec &filter);

enum class VarianceForm {
    /// Each squared coefficient weights its own single-copy variance:
    /// sum alpha^2 (1 - T^2). Reduces to 1 - Tr{rho U}^2 for the identity
    /// filter and vanishes on pure states.
    per_term,
    /// 1 - sum alpha^2 T^2, which coincides with per_term for VD of order >= 2.
    literal,
};

/// Delta-method variance of the filtered estimator of a Pauli observable.
double filter_variance(const SpectralDecomposition &rho, const PauliString &pauli, const FilterSpec &filter,
                       VarianceForm form = VarianceForm::per_term);
double filter_variance(const DensityMatrix &rho, const PauliString &pauli, const FilterSpec &filter,
                       VarianceForm form = VarianceForm::per_term);

/// sum w^2 Var_filter(S) / sum w^2 (1 - Tr{rho S}^2) over non-identity terms.
/// Throws DegenerateDenominator when the unmitigated variance vanishes and
/// InvalidArgument when the observable has no non-identity term.
double sampling_overhead_factor(const SpectralDecomposition &rho, const Observable &hamiltonian,
                                const FilterSpec &filter, VarianceForm form = VarianceForm::per_term);
double sampling_overhead_factor(const DensityMatrix &rho, const Observable &hamiltonian, const FilterSpec &filter,
                                VarianceForm form = VarianceForm::per_term);

}  // namespace permfilter
