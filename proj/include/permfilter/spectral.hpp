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

#include <cstddef>
#include <vector>

#include "permfilter/state.hpp"

namespace permfilter {

/// Power sums Tr{rho^2}, ..., Tr{rho^N} of a state.
struct MomentVector {
    std::vector<double> values;  // values[i] = Tr{rho^(i+2)}
    std::size_t num_qubits = 0;

    /// Filter order the vector supports (values.size() + 1).
    std::size_t order() const noexcept {
        return values.size() + 1;
    }
};

/// Throws InvalidArgument for order < 2.
MomentVector moments_from_state(const DensityMatrix &rho, std::size_t order);

/// Dominant-eigenvalue estimate (Tr{rho^N})^(1/N) from the highest moment.
double estimate_lambda1(const MomentVector &m);

/// Power-law noise density f(l) = k lm^k l^-(k+1) on l >= lm.
struct ParetoModel {
    double shape = 0.0;  // k
    double scale = 0.0;  // lm

    /// Throws InvalidArgument unless shape > 2 and 0 < scale < 1.
    void validate() const;
    double mean() const;
    double second_moment() const;
    double density(double lambda) const;
};

/// Largest shape the fit will report; narrower spectra are clamped here.
inline constexpr double kMaxParetoShape = 50.0;

enum class FitStatus { ok, narrow_clamped };

struct ParetoFit {
    ParetoModel model;
    FitStatus status = FitStatus::ok;
    double lambda1_estimate = 0.0;
    double mean_estimate = 0.0;
    double second_moment_estimate = 0.0;
};

/// Method-of-moments inversion of mean = k lm/(k-1) and
/// second moment = k lm^2/(k-2). Throws DegenerateSpectrum when either
/// estimate is not positive. When the ratio second/mean^2 is at most 1+1e-9
/// or the inverted shape exceeds kMaxParetoShape, the shape is clamped and
/// the scale follows from the mean equation.
ParetoFit fit_pareto_from_estimates(double mean_estimate, double second_moment_estimate);

/// Full fit from moments on num_qubits qubits. Requires order >= 3.
ParetoFit fit_pareto(const MomentVector &m);

/// Forward moment map used for round-trip checks: (mean, second moment).
std::pair<double, double> pareto_forward_moments(const ParetoModel &model);

/// (1/mu) (b sqrt(2^Nq - 1))^(N-1).
double prop2_bound(double mu, double rel_bandwidth, std::size_t num_qubits, std::size_t order);

/// (N-1)! (1+b)^N b^(N-1) / (e prod_{n=1}^{N-2} (1 - n b)). Throws
/// HypothesisViolated unless b < 1/(N-1).
double prop3_bound(double rel_bandwidth, std::size_t order);

/// Relative bandwidth of a Pareto density: sqrt(k / ((k-1)^2 (k-2))).
double pareto_rel_bandwidth(double shape);

/// (1 + sqrt(2^Nq - 1)) e^(-4 eps L) / (1 - 2^-Nq - e^(-4 eps L)). Throws
/// BoundVacuous when the denominator is not positive.
double prop4_bound(double eps_l, double layers, std::size_t num_qubits);

}  // namespace permfilter
