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
#include <optional>
#include <span>
#include <vector>

#include "permfilter/spectral.hpp"
#include "permfilter/state.hpp"

namespace permfilter {

/// Polynomial spectral filter h(l) = l prod_n (l - zeros[n]) of order N.
/// coefficients[j] multiplies l^(N-j); coefficients[0] == 1.
class FilterSpec {
   public:
    /// Zeros must be finite and nonnegative; they are sorted ascending.
    /// Throws InfeasibleBeta otherwise.
    static FilterSpec from_zeros(std::vector<double> zeros);
    /// Monic coefficient vector (leading entry 1 within 1e-12). The zeros are
    /// recovered by root finding and must be real and nonnegative.
    static FilterSpec from_coefficients(std::vector<double> coefficients);
    /// All zeros at the origin: h(l) = l^N.
    static FilterSpec vd(std::size_t order);

    std::size_t order() const noexcept {
        return coefficients_.size();
    }
    std::span<const double> zeros() const noexcept {
        return zeros_;
    }
    std::span<const double> coefficients() const noexcept {
        return coefficients_;
    }
    /// Product form l prod (l - beta).
    double response(double lambda) const;
    /// Coefficient form sum_j alpha_j l^(N-j).
    double response_from_coefficients(double lambda) const;

   private:
    FilterSpec(std::vector<double> zeros, std::vector<double> coefficients)
        : zeros_(std::move(zeros)), coefficients_(std::move(coefficients)) {
    }
    std::vector<double> zeros_;
    std::vector<double> coefficients_;
};

/// Coefficients of prod_n (l - zeros[n]), leading 1. Length zeros.size()+1.
std::vector<double> alpha_from_beta(std::span<const double> zeros);

/// Ascending real roots of the monic polynomial with the given coefficients.
/// Durand-Kerner iteration; clusters that are numerically one repeated root
/// are replaced by their mean.
/// Throws ComplexRoots if a root keeps |imag| > 1e-8 and InfeasibleBeta if a
/// root is below -1e-10. Roots in [-1e-10, 0) are clipped to 0.
std::vector<double> beta_from_alpha(std::span<const double> coefficients);

/// sum_j alpha_j l^(N-j) for a coefficient vector of length N.
double polynomial_response(std::span<const double> coefficients, double lambda);

/// Antiderivative of l^-k prod (l - beta) written in coefficient form:
/// sum_j alpha_j l^(N-j-k) / (N-j-k). Throws ShapeAtPole when k is within
/// 1e-9 of an integer in 1..N.
double antiderivative_G(std::span<const double> coefficients, double shape, double lambda);

/// Throws InfeasibleBeta unless zeros are finite, in [0, 1] and ascending.
void check_feasible_zeros(std::span<const double> zeros);

/// k lm^k times the integral of l^-k c(l) over [a, b] with lm <= a <= b,
/// where c has the given descending coefficients. Stable for integer k.
double weighted_segment_integral(std::span<const double> coefficients, const ParetoModel &model, double a, double b);

/// Design objective: the integral over [lm, 1] of |f(l) h(l)| evaluated as a
/// signed sum over the segments between consecutive zeros.
double epsilon_tilde(std::span<const double> zeros, const ParetoModel &model);

/// Gradient of epsilon_tilde with respect to the zeros.
std::vector<double> epsilon_tilde_gradient(std::span<const double> zeros, const ParetoModel &model);

/// Optimal single zero for order 2: lm (2 / (1 + lm^(k-1)))^(1/(k-1)).
double closed_form_beta1(const ParetoModel &model);
FilterSpec closed_form_second_order(const ParetoModel &model);
/// Order-2 design when only a mean estimate is available: zero at the mean.
FilterSpec closed_form_second_order_from_mean(double mean_estimate);
/// Ratio between the Pareto mean and the exact order-2 zero.
double closed_form_mean_ratio(const ParetoModel &model);

/// All N-1 zeros at the noise mean.
FilterSpec design_type1(const ParetoModel &model, std::size_t order);
FilterSpec design_type1(double mean_estimate, std::size_t order);

struct PgdOptions {
    double initial_step = 1.0;
    double shrink = 0.5;
    double armijo = 1e-4;
    double relative_tolerance = 1e-12;
    double gradient_tolerance = 1e-10;
    int max_iterations = 10000;
    /// Starting zeros. Defaults to N-1 points spread evenly over
    /// [mean/2, 3 mean/2].
    std::optional<std::vector<double>> init;
};

struct Type2Result {
    FilterSpec filter = FilterSpec::vd(1);
    double objective = 0.0;  // epsilon_tilde of the returned zeros
    int iterations = 0;
    bool converged = false;
    /// True when the all-at-mean design scored lower and was returned.
    bool used_type1 = false;
};

/// Projected gradient descent on epsilon_tilde normalized by its value at
/// zero, with Armijo backtracking and a clamp-then-sort projection.
Type2Result design_type2(const ParetoModel &model, std::size_t order, const PgdOptions &options = {});

/// sum over noise eigenvalues of |h(l)|.
double empirical_objective(std::span<const double> noise, std::span<const double> zeros);

/// Zeros minimizing empirical_objective on the exact spectrum. Each zero can
/// be moved to a weighted median of the noise eigenvalues without increasing
/// the objective, so an optimum exists with every zero on an eigenvalue; the
/// search enumerates those placements when there are at most 200000, and
/// otherwise runs multi-start coordinate descent.
FilterSpec design_oracle_optimal(const SpectrumSummary &spectrum, std::size_t order);

}  // namespace permfilter
