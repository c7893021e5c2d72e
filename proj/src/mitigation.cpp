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


#include "permfilter/mitigation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "permfilter/error.hpp"

namespace permfilter {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void check_qubits(std::size_t state_qubits, std::size_t obs_qubits) {
    if (state_qubits != obs_qubits) {
        fail(ErrorCode::DimensionMismatch, "observable acts on " + std::to_string(obs_qubits) +
                                               " qubits, state has " + std::to_string(state_qubits));
    }
}

// Coefficient multiplying rho^n for n = 1..N.
double coefficient_for_power(std::span<const double> coefficients, std::size_t n) {
    return coefficients[coefficients.size() - n];
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(const DensityMatrix &rho) : num_qubits_(rho.num_qubits()) {
    EigenSystem es = hermitian_eigs(rho.matrix());
    eigenvalues_ = SpectrumSummary::from_eigenvalues(es.values).eigenvalues;
    vectors_ = std::move(es.vectors);
}

std::vector<double> SpectralDecomposition::eigenvector_expectations(const Observable &obs) const {
    check_qubits(num_qubits_, obs.num_qubits());
    std::vector<double> out(eigenvalues_.size(), 0.0);
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
        for (const auto &t : obs.terms()) {
            out[i] += t.weight * pauli_expectation_in_column(vectors_, i, t.string);
        }
    }
    return out;
}

double SpectralDecomposition::trace_power_observable(const Observable &obs, int n) const {
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "power must be >= 1");
    }
    const std::vector<double> u = eigenvector_expectations(obs);
    double acc = 0.0;
    for (std::size_t i = 0; i < eigenvalues_.size(); ++i) {
        acc += std::pow(eigenvalues_[i], n) * u[i];
    }
    return acc;
}

double SpectralDecomposition::trace_power(int n) const {
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "power must be >= 1");
    }
    double acc = 0.0;
    for (double l : eigenvalues_) {
        acc += std::pow(l, n);
    }
    return acc;
}

SpectrumSummary SpectralDecomposition::summary() const {
    return SpectrumSummary::from_eigenvalues(eigenvalues_);
}

double trace_power_observable(const DensityMatrix &rho, const Observable &obs, int n) {
    check_qubits(rho.num_qubits(), obs.num_qubits());
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "power must be >= 1");
    }
    const ComplexMatrix power = matrix_power(rho.matrix(), n);
    double acc = 0.0;
    for (const auto &t : obs.terms()) {
        acc += t.weight * trace_with_pauli(power, t.string).real();
    }
    return acc;
}

MitigationResult vd_output(const SpectralDecomposition &rho, const Observable &obs, int n) {
    if (n < 1) {
        fail(ErrorCode::InvalidArgument, "VD order must be >= 1");
    }
    MitigationResult r;
    r.numerator = rho.trace_power_observable(obs, n);
    r.denominator = rho.trace_power(n);
    if (!(std::abs(r.denominator) > kDenominatorFloor)) {
        fail(ErrorCode::DegenerateDenominator, "Tr{rho^n} vanishes");
    }
    r.value = r.numerator / r.denominator;
    r.method = n == 1 ? "raw" : "vd(" + std::to_string(n) + ")";
    return r;
}

MitigationResult vd_output(const DensityMatrix &rho, const Observable &obs, int n) {
    check_qubits(rho.num_qubits(), obs.num_qubits());
    return vd_output(SpectralDecomposition(rho), obs, n);
}

MitigationResult filter_output(const SpectralDecomposition &rho, const Observable &obs,
                               std::span<const double> coefficients, NormalizationMode mode) {
    if (coefficients.empty()) {
        fail(ErrorCode::InvalidArgument, "filter needs at least one coefficient");
    }
    const std::vector<double> u = rho.eigenvector_expectations(obs);
    const std::span<const double> lambda = rho.eigenvalues();
    MitigationResult r;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const double h = polynomial_response(coefficients, lambda[i]);
        r.numerator += h * u[i];
        r.denominator += h;
    }
    if (mode == NormalizationMode::dominant) {
        r.denominator = polynomial_response(coefficients, lambda.front());
    }
    if (!(std::abs(r.denominator) > kDenominatorFloor)) {
        fail(ErrorCode::DegenerateDenominator,
             "filtered normalization " + std::to_string(r.denominator) + " is too close to zero");
    }
    r.value = r.numerator / r.denominator;
    r.method = "filter(" + std::to_string(coefficients.size()) + ")";
    return r;
}

MitigationResult filter_output(const SpectralDecomposition &rho, const Observable &obs, const FilterSpec &filter,
                               NormalizationMode mode) {
    return filter_output(rho, obs, filter.coefficients(), mode);
}

MitigationResult filter_output(const DensityMatrix &rho, const Observable &obs, const FilterSpec &filter,
                               NormalizationMode mode) {
    check_qubits(rho.num_qubits(), obs.num_qubits());
    return filter_output(SpectralDecomposition(rho), obs, filter, mode);
}

double empirical_design_metric(const SpectrumSummary &spectrum, const FilterSpec &filter, bool normalized) {
    double total = 0.0;
    for (double l : spectrum.noise) {
        total += std::abs(filter.response(l));
    }
    if (normalized) {
        const double top = filter.response(spectrum.lambda1);
        if (!(std::abs(top) > 0.0)) {
            fail(ErrorCode::DegenerateDenominator, "filter vanishes at the dominant eigenvalue");
        }
        total *= 2.0 / top;
    }
    return total;
}

double error_ratio(const SpectrumSummary &spectrum, const FilterSpec &filter) {
    const double reference = empirical_design_metric(spectrum, FilterSpec::vd(filter.order()));
    if (!(reference > 0.0) || spectrum.mu < kPureMeanThreshold) {
        fail(ErrorCode::DegenerateDenominator, "VD metric vanishes (noise-free spectrum)");
    }
    return empirical_design_metric(spectrum, filter) / reference;
}

double error_ratio(const ParetoModel &model, const FilterSpec &filter) {
    const double reference = epsilon_tilde(std::vector<double>(filter.order() - 1, 0.0), model);
    if (!(reference > 0.0)) {
        fail(ErrorCode::DegenerateDenominator, "VD objective vanishes");
    }
    return epsilon_tilde(filter.zeros(), model) / reference;
}

ErrorReport estimation_error(const SpectralDecomposition &noisy, double ideal_value, const Observable &obs,
                             const FilterSpec &filter) {
    const Observable traceless = obs.without_identity();
    ErrorReport report;
    report.ideal_reference = ideal_value;
    report.value = traceless.terms().empty() ? 0.0 : filter_output(noisy, traceless, filter).value;
    report.eps_u = std::abs(report.value - ideal_value);
    const SpectrumSummary spectrum = noisy.summary();
    report.eps_tilde_empirical = empirical_design_metric(spectrum, filter);
    const double reference = empirical_design_metric(spectrum, FilterSpec::vd(filter.order()));
    const bool pure = !(reference > 0.0) || spectrum.mu < kPureMeanThreshold;
    report.error_ratio = pure ? std::numeric_limits<double>::quiet_NaN() : report.eps_tilde_empirical / reference;
    return report;
}

ErrorReport estimation_error(const DensityMatrix &noisy, const DensityMatrix &ideal, const Observable &obs,
                             const FilterSpec &filter) {
    check_qubits(noisy.num_qubits(), obs.num_qubits());
    const Observable traceless = obs.without_identity();
    const double ideal_value = traceless.terms().empty() ? 0.0 : expectation(ideal, traceless);
    return estimation_error(SpectralDecomposition(noisy), ideal_value, obs, filter);
}

double filter_variance(const SpectralDecomposition &rho, const PauliString &pauli, const FilterSpec &filter,
                       VarianceForm form) {
    check_qubits(rho.num_qubits(), pauli.num_qubits());
    Observable u(pauli.num_qubits());
    u.add(1.0, pauli);
    const std::span<const double> alpha = filter.coefficients();
    const std::size_t order = alpha.size();
    std::vector<double> t(order + 1), p(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        t[n] = rho.trace_power_observable(u, static_cast<int>(n));
        p[n] = rho.trace_power(static_cast<int>(n));
    }
    double numerator = 0.0;
    double denominator = coefficient_for_power(alpha, 1);
    double numerator_var = form == VarianceForm::literal ? 1.0 : 0.0;
    double denominator_var = form == VarianceForm::literal ? 1.0 : 0.0;
    double covariance = 0.0;
    for (std::size_t n = 1; n <= order; ++n) {
        const double a = coefficient_for_power(alpha, n);
        const double a2 = a * a;
        numerator += a * t[n];
        numerator_var += form == VarianceForm::literal ? -a2 * t[n] * t[n] : a2 * (1.0 - t[n] * t[n]);
        if (n >= 2) {
            denominator += a * p[n];
            denominator_var += form == VarianceForm::literal ? -a2 * p[n] * p[n] : a2 * (1.0 - p[n] * p[n]);
            covariance += a2 * (t[1] - t[n] * p[n]);
        }
    }
    if (!(std::abs(denominator) > kDenominatorFloor)) {
        fail(ErrorCode::DegenerateDenominator, "filtered normalization is too close to zero");
    }
    const double d2 = denominator * denominator;
    return numerator_var / d2 - 2.0 * numerator / (d2 * denominator) * covariance +
           numerator * numerator * denominator_var / (d2 * d2);
}

double filter_variance(const DensityMatrix &rho, const PauliString &pauli, const FilterSpec &filter,
                       VarianceForm form) {
    return filter_variance(SpectralDecomposition(rho), pauli, filter, form);
}

double sampling_overhead_factor(const SpectralDecomposition &rho, const Observable &hamiltonian,
                                const FilterSpec &filter, VarianceForm form) {
    check_qubits(rho.num_qubits(), hamiltonian.num_qubits());
    double filtered = 0.0;
    double unprotected = 0.0;
    std::size_t used = 0;
    for (const auto &term : hamiltonian.terms()) {
        if (term.string.is_identity()) {
            continue;
        }
        ++used;
        Observable single(term.string.num_qubits());
        single.add(1.0, term.string);
        const double w2 = term.weight * term.weight;
        const double raw = rho.trace_power_observable(single, 1);
        filtered += w2 * filter_variance(rho, term.string, filter, form);
        unprotected += w2 * (1.0 - raw * raw);
    }
    if (used == 0) {
        fail(ErrorCode::InvalidArgument, "Hamiltonian has no non-identity term");
    }
    if (!(unprotected > kDenominatorFloor)) {
        fail(ErrorCode::DegenerateDenominator, "unmitigated variance vanishes");
    }
    return filtered / unprotected;
}

double sampling_overhead_factor(const DensityMatrix &rho, const Observable &hamiltonian, const FilterSpec &filter,
                                VarianceForm form) {
    return sampling_overhead_factor(SpectralDecomposition(rho), hamiltonian, filter, form);
}

}  // namespace permfilter
