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


#include "permfilter/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "permfilter/error.hpp"

namespace permfilter {

MomentVector moments_from_state(const DensityMatrix &rho, std::size_t order) {
    if (order < 2) {
        fail(ErrorCode::InvalidArgument, "moment vector needs order >= 2");
    }
    MomentVector m;
    m.num_qubits = rho.num_qubits();
    for (std::size_t n = 2; n <= order; ++n) {
        m.values.push_back(matrix_power_trace(rho, static_cast<int>(n)));
    }
    return m;
}

double estimate_lambda1(const MomentVector &m) {
    if (m.values.empty()) {
        fail(ErrorCode::InvalidArgument, "moment vector is empty");
    }
    const double top = m.values.back();
    if (!(top > 0.0)) {
        fail(ErrorCode::DegenerateSpectrum, "highest moment must be positive");
    }
    return std::pow(top, 1.0 / static_cast<double>(m.order()));
}

void ParetoModel::validate() const {
    if (!(shape > 2.0) || !std::isfinite(shape)) {
        fail(ErrorCode::InvalidArgument, "Pareto shape must exceed 2, got " + std::to_string(shape));
    }
    if (!(scale > 0.0 && scale < 1.0)) {
        fail(ErrorCode::InvalidArgument, "Pareto scale must lie in (0, 1), got " + std::to_string(scale));
    }
}

double ParetoModel::mean() const {
    return shape * scale / (shape - 1.0);
}

double ParetoModel::second_moment() const {
    return shape * scale * scale / (shape - 2.0);
}

double ParetoModel::density(double lambda) const {
    if (lambda < scale) {
        return 0.0;
    }
    return shape / scale * std::pow(scale / lambda, shape + 1.0);
}

std::pair<double, double> pareto_forward_moments(const ParetoModel &model) {
    model.validate();
    return {model.mean(), model.second_moment()};
}

ParetoFit fit_pareto_from_estimates(double mean_estimate, double second_moment_estimate) {
    if (!(mean_estimate > 0.0) || !(second_moment_estimate > 0.0)) {
        fail(ErrorCode::DegenerateSpectrum, "moment estimates must be positive (mean " + std::to_string(mean_estimate) +
                                                ", second moment " + std::to_string(second_moment_estimate) + ")");
    }
    ParetoFit fit;
    fit.mean_estimate = mean_estimate;
    fit.second_moment_estimate = second_moment_estimate;
    const double r = second_moment_estimate / (mean_estimate * mean_estimate);
    double k = kMaxParetoShape;
    if (r > 1.0 + 1e-9) {
        k = 1.0 + std::sqrt(1.0 + 1.0 / (r - 1.0));
    }
    if (!(r > 1.0 + 1e-9) || k > kMaxParetoShape) {
        k = kMaxParetoShape;
        fit.status = FitStatus::narrow_clamped;
    }
    fit.model.shape = k;
    fit.model.scale = mean_estimate * (k - 1.0) / k;
    if (!(fit.model.scale < 1.0)) {
        fail(ErrorCode::DegenerateSpectrum, "fitted scale is not below 1");
    }
    return fit;
}

ParetoFit fit_pareto(const MomentVector &m) {
    if (m.order() < 3) {
        fail(ErrorCode::InvalidArgument, "Pareto fit needs order >= 3; order 2 is not identifiable");
    }
    const std::size_t dim = std::size_t{1} << m.num_qubits;
    if (dim < 2) {
        fail(ErrorCode::InvalidArgument, "moment vector has no qubit count");
    }
    const double lambda1 = estimate_lambda1(m);
    const double noise_count = static_cast<double>(dim - 1);
    const double mean = (1.0 - lambda1) / noise_count;
    const double second = (m.values.front() - lambda1 * lambda1) / noise_count;
    ParetoFit fit = fit_pareto_from_estimates(mean, second);
    fit.lambda1_estimate = lambda1;
    return fit;
}

double prop2_bound(double mu, double rel_bandwidth, std::size_t num_qubits, std::size_t order) {
    if (!(mu > 0.0)) {
        fail(ErrorCode::InvalidArgument, "noise mean must be positive");
    }
    if (!(rel_bandwidth >= 0.0)) {
        fail(ErrorCode::InvalidArgument, "relative bandwidth must be nonnegative");
    }
    if (order < 1) {
        fail(ErrorCode::InvalidArgument, "order must be >= 1");
    }
    const double dim = std::ldexp(1.0, static_cast<int>(num_qubits));
    return std::pow(rel_bandwidth * std::sqrt(dim - 1.0), static_cast<double>(order - 1)) / mu;
}

double prop3_bound(double rel_bandwidth, std::size_t order) {
    if (order < 2) {
        fail(ErrorCode::InvalidArgument, "order must be >= 2");
    }
    const double b = rel_bandwidth;
    if (!(b >= 0.0)) {
        fail(ErrorCode::InvalidArgument, "relative bandwidth must be nonnegative");
    }
    const double n_minus_1 = static_cast<double>(order - 1);
    if (!(b < 1.0 / n_minus_1)) {
        fail(ErrorCode::HypothesisViolated, "bound requires b < 1/(N-1), got b = " + std::to_string(b));
    }
    double product = 1.0;
    for (std::size_t n = 1; n + 2 <= order; ++n) {
        product *= 1.0 - static_cast<double>(n) * b;
    }
    const double factorial = std::tgamma(static_cast<double>(order));
    return factorial * std::pow(1.0 + b, static_cast<double>(order)) * std::pow(b, n_minus_1) /
           (std::numbers::e * product);
}

double pareto_rel_bandwidth(double shape) {
    if (!(shape > 2.0)) {
        fail(ErrorCode::InvalidArgument, "Pareto shape must exceed 2");
    }
    const double km1 = shape - 1.0;
    return std::sqrt(shape / (km1 * km1 * (shape - 2.0)));
}

double prop4_bound(double eps_l, double layers, std::size_t num_qubits) {
    if (!(eps_l > 0.0)) {
        fail(ErrorCode::InvalidArgument, "per-Pauli error floor must be positive");
    }
    if (!(layers >= 1.0)) {
        fail(ErrorCode::InvalidArgument, "layer count must be >= 1");
    }
    const double dim = std::ldexp(1.0, static_cast<int>(num_qubits));
    const double decay = std::exp(-4.0 * eps_l * layers);
    const double denominator = 1.0 - 1.0 / dim - decay;
    if (!(denominator > 0.0)) {
        fail(ErrorCode::BoundVacuous, "concentration bound is vacuous (denominator " + std::to_string(denominator) + ")");
    }
    return (1.0 + std::sqrt(dim - 1.0)) * decay / denominator;
}

}  // namespace permfilter
