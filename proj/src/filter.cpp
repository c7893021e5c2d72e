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


#include "permfilter/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "permfilter/error.hpp"

namespace permfilter {

namespace {

constexpr double kClipFloor = -1e-10;
constexpr double kImagTolerance = 1e-8;
constexpr double kPoleGuard = 1e-9;
constexpr int kRootIterations = 200;
constexpr double kClusterRadius = 1e-4;
constexpr double kMaxEnumeration = 2e5;

using CVec = std::vector<std::complex<double>>;

std::complex<double> eval_poly(std::span<const double> c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (double cj : c) {
        acc = acc * z + cj;
    }
    return acc;
}

// Durand-Kerner on a monic polynomial with nonzero constant term.
CVec durand_kerner(std::span<const double> c) {
    const std::size_t degree = c.size() - 1;
    double radius = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j) {
        radius = std::max(radius, std::pow(std::abs(c[j]), 1.0 / static_cast<double>(j)));
    }
    radius = 2.0 * std::max(radius, 1e-3);
    CVec z(degree);
    const std::complex<double> seed(0.4, 0.9);
    std::complex<double> w = 1.0;
    for (std::size_t i = 0; i < degree; ++i) {
        w *= seed;
        z[i] = radius * w / std::abs(w) * (0.5 + 0.5 * static_cast<double>(i + 1) / static_cast<double>(degree));
    }
    for (int it = 0; it < kRootIterations; ++it) {
        double biggest = 0.0;
        for (std::size_t i = 0; i < degree; ++i) {
            std::complex<double> denom = 1.0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            if (denom == std::complex<double>(0.0)) {
                denom = 1e-300;
            }
            const std::complex<double> step = eval_poly(c, z[i]) / denom;
            z[i] -= step;
            biggest = std::max(biggest, std::abs(step) / std::max(1.0, std::abs(z[i])));
        }
        if (biggest < 1e-16) {
            break;
        }
    }
    return z;
}

// Taylor coefficients p^(j)(x)/j! for j < count, by repeated synthetic
// division. With `magnitude`, every coefficient and x enter by absolute value,
// which bounds the rounding error of the signed evaluation.
std::vector<double> taylor_at(std::span<const double> c, double x, std::size_t count, bool magnitude) {
    std::vector<double> work(c.begin(), c.end());
    if (magnitude) {
        for (double &w : work) {
            w = std::abs(w);
        }
        x = std::abs(x);
    }
    std::vector<double> out;
    for (std::size_t j = 0; j < count && !work.empty(); ++j) {
        for (std::size_t i = 1; i < work.size(); ++i) {
            work[i] += work[i - 1] * x;
        }
        out.push_back(work.back());
        work.pop_back();
    }
    return out;
}

// Groups roots closer than kClusterRadius. A group of m roots is replaced by
// its mean when the polynomial and its first m-2 derivatives vanish there to
// within rounding, i.e. when the group is numerically one repeated root; a
// pair of distinct close roots keeps a value visibly above the noise floor.
CVec merge_repeated(const CVec &roots, std::span<const double> c) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(roots[i] - roots[j]) < kClusterRadius * std::max(1.0, std::abs(roots[i]))) {
                parent[find(i)] = find(j);
            }
        }
    }
    CVec out(roots);
    const double noise = 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(c.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) != i) {
            continue;
        }
        std::vector<std::size_t> members;
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (find(j) == i) {
                members.push_back(j);
                sum += roots[j];
            }
        }
        if (members.size() < 2) {
            continue;
        }
        const double center = (sum / static_cast<double>(members.size())).real();
        const std::size_t checks = members.size() - 1;
        const std::vector<double> value = taylor_at(c, center, checks, false);
        const std::vector<double> bound = taylor_at(c, center, checks, true);
        bool repeated = true;
        for (std::size_t j = 0; j < checks; ++j) {
            repeated = repeated && std::abs(value[j]) <= noise * bound[j];
        }
        if (repeated) {
            for (std::size_t j : members) {
                out[j] = center;
            }
        }
    }
    return out;
}

void check_model(const ParetoModel &model) {
    model.validate();
}

// Segment bounds lm, zeros..., 1 clamped into [lm, 1].
std::vector<double> segment_bounds(std::span<const double> zeros, double scale) {
    std::vector<double> bounds;
    bounds.reserve(zeros.size() + 2);
    bounds.push_back(scale);
    for (double z : zeros) {
        bounds.push_back(std::clamp(z, scale, 1.0));
    }
    bounds.push_back(1.0);
    return bounds;
}

// Signed segment sum of a polynomial integrand. The top segment counts +1
// and the sign alternates downward, following the sign of prod (l - beta).
double signed_integral(std::span<const double> coefficients, std::span<const double> zeros, const ParetoModel &model) {
    const std::vector<double> bounds = segment_bounds(zeros, model.scale);
    const std::size_t segments = bounds.size() - 1;
    double total = 0.0;
    for (std::size_t idx = 0; idx < segments; ++idx) {
        const double lo = bounds[idx];
        const double hi = bounds[idx + 1];
        if (!(hi > lo)) {
            continue;
        }
        const bool negative = ((segments - 1 - idx) % 2) == 1;
        const double part = weighted_segment_integral(coefficients, model, lo, hi);
        total += negative ? -part : part;
    }
    return total;
}

std::vector<double> project(std::vector<double> zeros) {
    for (double &z : zeros) {
        z = std::clamp(z, 0.0, 1.0);
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

}  // namespace

std::vector<double> alpha_from_beta(std::span<const double> zeros) {
    std::vector<double> alpha{1.0};
    for (double beta : zeros) {
        if (!std::isfinite(beta)) {
            fail(ErrorCode::InvalidArgument, "zeros must be finite");
        }
        alpha.push_back(0.0);
        for (std::size_t j = alpha.size() - 1; j > 0; --j) {
            alpha[j] -= beta * alpha[j - 1];
        }
    }
    return alpha;
}

std::vector<double> beta_from_alpha(std::span<const double> coefficients) {
    if (coefficients.empty()) {
        fail(ErrorCode::InvalidArgument, "coefficient vector is empty");
    }
    if (std::abs(coefficients[0] - 1.0) > 1e-12) {
        fail(ErrorCode::InvalidArgument, "coefficient vector must be monic");
    }
    for (double c : coefficients) {
        if (!std::isfinite(c)) {
            fail(ErrorCode::InvalidArgument, "coefficients must be finite");
        }
    }
    // Exact zero roots first: trailing zero coefficients.
    std::size_t trailing = 0;
    std::size_t end = coefficients.size();
    while (end > 1 && coefficients[end - 1] == 0.0) {
        --end;
        ++trailing;
    }
    std::vector<double> roots(trailing, 0.0);
    const std::span<const double> reduced = coefficients.subspan(0, end);
    if (reduced.size() > 1) {
        const CVec found = merge_repeated(durand_kerner(reduced), reduced);
        for (const auto &r : found) {
            if (std::abs(r.imag()) > kImagTolerance) {
                fail(ErrorCode::ComplexRoots, "polynomial has roots off the real axis");
            }
            roots.push_back(r.real());
        }
    }
    for (double &r : roots) {
        if (r < kClipFloor) {
            fail(ErrorCode::InfeasibleBeta, "polynomial has a negative root " + std::to_string(r));
        }
        r = std::max(r, 0.0);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double polynomial_response(std::span<const double> coefficients, double lambda) {
    double acc = 0.0;
    for (double c : coefficients) {
        acc = acc * lambda + c;
    }
    return acc * lambda;
}

FilterSpec FilterSpec::from_zeros(std::vector<double> zeros) {
    for (double z : zeros) {
        if (!std::isfinite(z) || z < 0.0) {
            fail(ErrorCode::InfeasibleBeta, "filter zeros must be finite and nonnegative");
        }
    }
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> alpha = alpha_from_beta(zeros);
    return FilterSpec(std::move(zeros), std::move(alpha));
}

FilterSpec FilterSpec::from_coefficients(std::vector<double> coefficients) {
    std::vector<double> zeros = beta_from_alpha(coefficients);
    coefficients[0] = 1.0;
    return FilterSpec(std::move(zeros), std::move(coefficients));
}

FilterSpec FilterSpec::vd(std::size_t order) {
    if (order < 1) {
        fail(ErrorCode::InvalidArgument, "filter order must be >= 1");
    }
    std::vector<double> alpha(order, 0.0);
    alpha[0] = 1.0;
    return FilterSpec(std::vector<double>(order - 1, 0.0), std::move(alpha));
}

double FilterSpec::response(double lambda) const {
    double acc = lambda;
    for (double z : zeros_) {
        acc *= lambda - z;
    }
    return acc;
}

double FilterSpec::response_from_coefficients(double lambda) const {
    return polynomial_response(coefficients_, lambda);
}

double antiderivative_G(std::span<const double> coefficients, double shape, double lambda) {
    const std::size_t order = coefficients.size();
    if (order == 0) {
        fail(ErrorCode::InvalidArgument, "coefficient vector is empty");
    }
    for (std::size_t n = 1; n <= order; ++n) {
        if (std::abs(shape - static_cast<double>(n)) < kPoleGuard) {
            fail(ErrorCode::ShapeAtPole, "shape " + std::to_string(shape) + " hits the pole at " + std::to_string(n));
        }
    }
    if (!(lambda > 0.0)) {
        fail(ErrorCode::InvalidArgument, "antiderivative needs a positive argument");
    }
    double total = 0.0;
    for (std::size_t j = 0; j < order; ++j) {
        const double d = static_cast<double>(order - j) - shape;
        total += coefficients[j] * std::pow(lambda, d) / d;
    }
    return total;
}

void check_feasible_zeros(std::span<const double> zeros) {
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (!std::isfinite(zeros[i]) || zeros[i] < 0.0 || zeros[i] > 1.0) {
            fail(ErrorCode::InfeasibleBeta, "zero " + std::to_string(i) + " lies outside [0, 1]");
        }
        if (i > 0 && zeros[i] < zeros[i - 1]) {
            fail(ErrorCode::InfeasibleBeta, "zeros must be ascending");
        }
    }
}

double weighted_segment_integral(std::span<const double> coefficients, const ParetoModel &model, double a, double b) {
    if (!(a >= model.scale) || !(b >= a)) {
        fail(ErrorCode::InvalidArgument, "segment must satisfy scale <= a <= b");
    }
    if (b == a) {
        return 0.0;
    }
    // k lm^k int_a^b l^(e-1) dl = k a^e (lm/a)^k expm1(d ln(b/a)) / d with
    // d = e - k. The d = 0 case is the logarithm, so integer shapes are safe.
    const double k = model.shape;
    const double log_ratio = std::log(b / a);
    const double tail = std::pow(model.scale / a, k);
    const std::size_t degree_plus_one = coefficients.size();
    double total = 0.0;
    for (std::size_t j = 0; j < degree_plus_one; ++j) {
        const double e = static_cast<double>(degree_plus_one - j);
        const double d = e - k;
        const double integral = d == 0.0 ? log_ratio : std::expm1(d * log_ratio) / d;
        total += coefficients[j] * std::pow(a, e) * integral;
    }
    return k * tail * total;
}

double epsilon_tilde(std::span<const double> zeros, const ParetoModel &model) {
    check_model(model);
    check_feasible_zeros(zeros);
    return signed_integral(alpha_from_beta(zeros), zeros, model);
}

std::vector<double> epsilon_tilde_gradient(std::span<const double> zeros, const ParetoModel &model) {
    check_model(model);
    check_feasible_zeros(zeros);
    std::vector<double> grad(zeros.size());
    std::vector<double> others;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        others.assign(zeros.begin(), zeros.end());
        others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
        grad[i] = -signed_integral(alpha_from_beta(others), zeros, model);
    }
    return grad;
}

double closed_form_beta1(const ParetoModel &model) {
    check_model(model);
    const double km1 = model.shape - 1.0;
    return model.scale * std::pow(2.0 / (1.0 + std::pow(model.scale, km1)), 1.0 / km1);
}

FilterSpec closed_form_second_order(const ParetoModel &model) {
    return FilterSpec::from_zeros({closed_form_beta1(model)});
}

FilterSpec closed_form_second_order_from_mean(double mean_estimate) {
    return design_type1(mean_estimate, 2);
}

double closed_form_mean_ratio(const ParetoModel &model) {
    return model.mean() / closed_form_beta1(model);
}

FilterSpec design_type1(const ParetoModel &model, std::size_t order) {
    check_model(model);
    return design_type1(model.mean(), order);
}

FilterSpec design_type1(double mean_estimate, std::size_t order) {
    if (order < 1) {
        fail(ErrorCode::InvalidArgument, "filter order must be >= 1");
    }
    if (!std::isfinite(mean_estimate) || mean_estimate < 0.0) {
        fail(ErrorCode::InvalidArgument, "mean estimate must be finite and nonnegative");
    }
    return FilterSpec::from_zeros(std::vector<double>(order - 1, std::min(mean_estimate, 1.0)));
}

namespace {

struct PgdRun {
    std::vector<double> zeros;
    double value = 0.0;  // normalized objective
    int iterations = 0;
    bool converged = false;
};

// One projected gradient descent run on the normalized objective. Each zero
// is measured in units of max(zero, lm), which equalizes the very different
// curvatures of zeros near the scale and zeros far out in the tail.
PgdRun run_pgd(const ParetoModel &model, double reference, std::vector<double> zeros, const PgdOptions &options,
               int budget) {
    const auto objective = [&](std::span<const double> z) { return epsilon_tilde(z, model) / reference; };
    const std::size_t count = zeros.size();
    PgdRun run;
    zeros = project(std::move(zeros));
    double value = objective(zeros);
    std::vector<double> trial(count);
    std::vector<double> metric(count);
    int it = 0;
    for (; it < budget; ++it) {
        std::vector<double> grad = epsilon_tilde_gradient(zeros, model);
        double pg = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            grad[i] /= reference;
            const double unit = std::max(zeros[i], model.scale);
            metric[i] = unit * unit;
            const double moved = std::clamp(zeros[i] - metric[i] * grad[i], 0.0, 1.0);
            pg += (moved - zeros[i]) * (moved - zeros[i]) / metric[i];
        }
        if (std::sqrt(pg) < options.gradient_tolerance) {
            run.converged = true;
            break;
        }
        double step = options.initial_step;
        bool accepted = false;
        double next_value = value;
        while (step > 1e-30) {
            for (std::size_t i = 0; i < count; ++i) {
                trial[i] = zeros[i] - step * metric[i] * grad[i];
            }
            trial = project(trial);
            double slope = 0.0;
            for (std::size_t i = 0; i < count; ++i) {
                slope += grad[i] * (trial[i] - zeros[i]);
            }
            next_value = objective(trial);
            if (next_value <= value + options.armijo * slope) {
                accepted = true;
                break;
            }
            step *= options.shrink;
        }
        if (!accepted) {
            // No representable descent step remains.
            run.converged = true;
            break;
        }
        const double change = std::abs(value - next_value) / std::max(std::abs(value), 1e-300);
        zeros = trial;
        value = next_value;
        if (change < options.relative_tolerance) {
            run.converged = true;
            ++it;
            break;
        }
    }
    run.zeros = std::move(zeros);
    run.value = value;
    run.iterations = it;
    return run;
}

// Index of the first pair of (nearly) coincident zeros, or npos.
std::size_t find_tie(std::span<const double> zeros, double scale) {
    for (std::size_t i = 0; i + 1 < zeros.size(); ++i) {
        const double unit = std::max(zeros[i + 1], scale);
        if (zeros[i + 1] - zeros[i] <= 1e-6 * unit) {
            return i;
        }
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

Type2Result design_type2(const ParetoModel &model, std::size_t order, const PgdOptions &options) {
    check_model(model);
    if (order < 2) {
        fail(ErrorCode::InvalidArgument, "PGD design needs order >= 2");
    }
    const std::size_t count = order - 1;
    const double mean = model.mean();
    const double reference = epsilon_tilde(std::vector<double>(count, 0.0), model);

    std::vector<double> zeros;
    if (options.init) {
        if (options.init->size() != count) {
            fail(ErrorCode::DimensionMismatch, "initial zeros must have order-1 entries");
        }
        zeros = *options.init;
        for (double z : zeros) {
            if (!std::isfinite(z)) {
                fail(ErrorCode::InfeasibleBeta, "initial zeros must be finite");
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const double t = count == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(count - 1);
            zeros.push_back(mean * (0.5 + t));
        }
    }

    // Coinciding zeros make the zero-to-coefficient map singular, and the
    // descent can stall there at a point that is stationary but not optimal.
    // Such a pair is split apart and the descent restarted; the split is kept
    // only if it lowers the objective.
    int budget = options.max_iterations;
    PgdRun best = run_pgd(model, reference, std::move(zeros), options, budget);
    budget -= best.iterations;
    int total_iterations = best.iterations;
    for (std::size_t attempt = 0; attempt < 2 * count && budget > 0; ++attempt) {
        const std::size_t tie = find_tie(best.zeros, model.scale);
        if (tie == static_cast<std::size_t>(-1)) {
            break;
        }
        std::vector<double> split = best.zeros;
        const double centre = split[tie];
        const double gap = 0.25 * std::max(centre, model.scale);
        split[tie] = std::max(centre - gap, 0.0);
        split[tie + 1] = std::min(centre + gap, 1.0);
        PgdRun retry = run_pgd(model, reference, std::move(split), options, budget);
        budget -= retry.iterations;
        total_iterations += retry.iterations;
        if (!(retry.value < best.value)) {
            break;
        }
        best = std::move(retry);
    }

    Type2Result result;
    result.iterations = total_iterations;
    result.converged = best.converged;
    const FilterSpec type1 = design_type1(model, order);
    const double type1_value = epsilon_tilde(type1.zeros(), model) / reference;
    if (type1_value < best.value) {
        result.filter = type1;
        result.objective = type1_value * reference;
        result.used_type1 = true;
    } else {
        result.filter = FilterSpec::from_zeros(best.zeros);
        result.objective = best.value * reference;
    }
    return result;
}

double empirical_objective(std::span<const double> noise, std::span<const double> zeros) {
    double total = 0.0;
    for (double lambda : noise) {
        double h = lambda;
        for (double z : zeros) {
            h *= lambda - z;
        }
        total += std::abs(h);
    }
    return total;
}

namespace {

// Lower weighted median of `values` (ascending) under nonnegative weights.
double weighted_median(std::span<const double> values, std::span<const double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        return values.front();
    }
    double running = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        running += weights[i];
        if (running >= 0.5 * total) {
            return values[i];
        }
    }
    return values.back();
}

std::vector<double> coordinate_descent(std::span<const double> noise, std::span<const double> candidates,
                                       std::vector<double> zeros) {
    std::vector<double> weights(noise.size());
    std::vector<double> cand_weights(candidates.size());
    for (int sweep = 0; sweep < 200; ++sweep) {
        bool changed = false;
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            std::fill(cand_weights.begin(), cand_weights.end(), 0.0);
            for (std::size_t i = 0; i < noise.size(); ++i) {
                double w = noise[i];
                for (std::size_t n = 0; n < zeros.size(); ++n) {
                    if (n != j) {
                        w *= std::abs(noise[i] - zeros[n]);
                    }
                }
                const auto pos = std::lower_bound(candidates.begin(), candidates.end(), noise[i]);
                if (pos != candidates.end() && *pos == noise[i]) {
                    cand_weights[static_cast<std::size_t>(pos - candidates.begin())] += w;
                }
                weights[i] = w;
            }
            const double best = weighted_median(candidates, cand_weights);
            if (best != zeros[j] &&
                empirical_objective(noise, [&] {
                    std::vector<double> t = zeros;
                    t[j] = best;
                    return t;
                }()) < empirical_objective(noise, zeros)) {
                zeros[j] = best;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

}  // namespace

FilterSpec design_oracle_optimal(const SpectrumSummary &spectrum, std::size_t order) {
    if (order < 1) {
        fail(ErrorCode::InvalidArgument, "filter order must be >= 1");
    }
    const std::size_t count = order - 1;
    if (count == 0) {
        return FilterSpec::vd(1);
    }
    std::vector<double> candidates;
    for (double v : spectrum.noise) {
        if (v > 0.0) {
            candidates.push_back(std::min(v, 1.0));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) {
        return FilterSpec::vd(order);
    }
    const std::span<const double> noise = spectrum.noise;
    const std::size_t m = candidates.size();

    // Number of nondecreasing index tuples: C(m + count - 1, count).
    double combos = 1.0;
    for (std::size_t i = 1; i <= count; ++i) {
        combos = combos * static_cast<double>(m + count - i) / static_cast<double>(i);
    }

    std::vector<double> best;
    double best_value = std::numeric_limits<double>::infinity();
    const auto consider = [&](const std::vector<double> &zeros) {
        const double v = empirical_objective(noise, zeros);
        if (v < best_value || (v == best_value && zeros < best)) {
            best_value = v;
            best = zeros;
        }
    };

    if (combos <= kMaxEnumeration) {
        std::vector<std::size_t> idx(count, 0);
        std::vector<double> zeros(count);
        while (true) {
            for (std::size_t i = 0; i < count; ++i) {
                zeros[i] = candidates[idx[i]];
            }
            consider(zeros);
            // Advance to the next nondecreasing tuple.
            std::size_t pos = count;
            while (pos > 0 && idx[pos - 1] == m - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            const std::size_t next = idx[pos - 1] + 1;
            for (std::size_t i = pos - 1; i < count; ++i) {
                idx[i] = next;
            }
        }
    } else {
        std::vector<std::vector<double>> starts;
        starts.push_back(std::vector<double>(count, candidates.front()));
        starts.push_back(std::vector<double>(count, candidates[m / 2]));
        std::vector<double> spread(count);
        for (std::size_t i = 0; i < count; ++i) {
            spread[i] = candidates[(i + 1) * (m - 1) / (count + 1)];
        }
        starts.push_back(spread);
        for (double q : {0.1, 0.25, 0.5, 0.75, 0.9}) {
            starts.push_back(std::vector<double>(count, candidates[static_cast<std::size_t>(q * (m - 1))]));
        }
        for (auto &s : starts) {
            consider(coordinate_descent(noise, candidates, s));
        }
    }
    return FilterSpec::from_zeros(best);
}

}  // namespace permfilter
