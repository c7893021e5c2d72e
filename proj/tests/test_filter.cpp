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


#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

#include "permfilter/error.hpp"
#include "permfilter/filter.hpp"
#include "permfilter/rng.hpp"
#include "permfilter/state.hpp"

using namespace permfilter;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(0);
}

std::vector<double> random_zeros(Rng &rng, std::size_t count, double lo, double hi) {
    std::vector<double> z(count);
    for (auto &v : z) {
        v = rng.uniform(lo, hi);
    }
    std::sort(z.begin(), z.end());
    return z;
}

// Integral of f(l) |h(l)| over [scale, 1], split at the zeros so every
// piece is smooth.
double quadrature_objective(std::span<const double> zeros, const ParetoModel &model) {
    const FilterSpec f = FilterSpec::from_zeros(std::vector<double>(zeros.begin(), zeros.end()));
    auto integrand = [&](double l) { return model.density(l) * std::abs(f.response(l)); };
    std::vector<double> cuts{model.scale};
    for (double z : zeros) {
        if (z > model.scale && z < 1.0) {
            cuts.push_back(z);
        }
    }
    cuts.push_back(1.0);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, cuts[i], cuts[i + 1], 15,
                                                                                 1e-14);
    }
    return total;
}

}  // namespace

TEST(AlphaBeta, Examples) {
    EXPECT_EQ(alpha_from_beta(std::vector<double>{}), std::vector<double>{1.0});
    EXPECT_EQ(alpha_from_beta(std::vector<double>{0.0, 0.0}), (std::vector<double>{1.0, 0.0, 0.0}));
    const auto a = alpha_from_beta(std::vector<double>{0.1, 0.2});
    EXPECT_NEAR(a[0], 1.0, 0.0);
    EXPECT_NEAR(a[1], -0.3, 1e-16);
    EXPECT_NEAR(a[2], 0.02, 1e-17);
    const auto b = beta_from_alpha(std::vector<double>{1.0, -0.3, 0.02});
    ASSERT_EQ(b.size(), 2u);
    EXPECT_NEAR(b[0], 0.1, 1e-12);
    EXPECT_NEAR(b[1], 0.2, 1e-12);
    EXPECT_TRUE(beta_from_alpha(std::vector<double>{1.0}).empty());
    EXPECT_EQ(code_of([] { beta_from_alpha(std::vector<double>{1.0, 0.0, 1.0}); }), ErrorCode::ComplexRoots);
    EXPECT_EQ(code_of([] { beta_from_alpha(std::vector<double>{1.0, 0.5}); }), ErrorCode::InfeasibleBeta);
}

// Property: the two representations are mutually inverse, ties included.
TEST(AlphaBeta, RoundTrip) {
    Rng rng(1);
    for (int t = 0; t < 300; ++t) {
        const std::size_t count = 1 + t % 5;
        std::vector<double> z = random_zeros(rng, count, 0.0, 0.5);
        if (t % 7 == 0) {
            z.back() = z.front();
            std::sort(z.begin(), z.end());
        }
        if (t % 11 == 0) {
            z.front() = 0.0;
        }
        const auto back = beta_from_alpha(alpha_from_beta(z));
        ASSERT_EQ(back.size(), z.size());
        for (std::size_t i = 0; i < z.size(); ++i) {
            EXPECT_NEAR(back[i], z[i], 1e-8) << "trial " << t;
        }
    }
}

TEST(FilterSpecTest, ConstructionAndResponse) {
    const FilterSpec f = FilterSpec::from_zeros({0.15, 0.05});
    EXPECT_EQ(f.order(), 3u);
    EXPECT_EQ(f.zeros()[0], 0.05);
    EXPECT_NEAR(f.response(0.8), 0.39, 1e-15);
    EXPECT_NEAR(f.response_from_coefficients(0.8), 0.39, 1e-15);
    EXPECT_EQ(f.response(0.0), 0.0);
    const FilterSpec vd = FilterSpec::vd(4);
    EXPECT_NEAR(vd.response(0.3), std::pow(0.3, 4), 1e-16);
    EXPECT_EQ(code_of([] { FilterSpec::from_zeros({-0.1}); }), ErrorCode::InfeasibleBeta);
    const FilterSpec g = FilterSpec::from_coefficients({1.0, -0.3, 0.02});
    EXPECT_NEAR(g.zeros()[1], 0.2, 1e-12);
    EXPECT_THROW(FilterSpec::from_coefficients({2.0, 0.0}), Error);
}

// Property: product and coefficient forms agree on [0, 1].
TEST(FilterSpecTest, ResponseFormsAgree) {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const FilterSpec f = FilterSpec::from_zeros(random_zeros(rng, 1 + t % 5, 0.0, 1.0));
        for (double l = 0.0; l <= 1.0; l += 0.05) {
            EXPECT_NEAR(f.response(l), f.response_from_coefficients(l), 1e-12);
        }
    }
}

// Slope of |h| on a log-log scale: 30 dB/decade past the largest zero and
// 20 dB/decade between well-separated zeros.
TEST(FilterSpecTest, SlopeProperty) {
    const FilterSpec f = FilterSpec::from_zeros({1e-6, 1e-5});
    const double above = std::log10(f.response(1e-2)) - std::log10(f.response(1e-3));
    EXPECT_NEAR(above, 3.0, 0.05);
    const FilterSpec g = FilterSpec::from_zeros({1e-8, 1e-2});
    const double between = std::log10(std::abs(g.response(1e-5))) - std::log10(std::abs(g.response(1e-6)));
    EXPECT_NEAR(between, 2.0, 0.1);
}

TEST(Antiderivative, PowerRuleAndPole) {
    const std::vector<double> one{1.0};
    EXPECT_NEAR(antiderivative_G(one, 3.5, 0.3), std::pow(0.3, -2.5) / -2.5, 1e-12);
    EXPECT_EQ(code_of([&] { antiderivative_G(one, 1.0, 0.3); }), ErrorCode::ShapeAtPole);
    const std::vector<double> two = alpha_from_beta(std::vector<double>{0.1});
    EXPECT_EQ(code_of([&] { antiderivative_G(two, 2.0 + 1e-10, 0.3); }), ErrorCode::ShapeAtPole);
}

TEST(Antiderivative, DerivativeMatchesIntegrand) {
    const std::vector<double> a = alpha_from_beta(std::vector<double>{0.1});
    const double h = 1e-5;
    const double fd = (antiderivative_G(a, 3.5, 0.3 + h) - antiderivative_G(a, 3.5, 0.3 - h)) / (2 * h);
    EXPECT_NEAR(fd, std::pow(0.3, -3.5) * (0.3 - 0.1), 1e-6 * std::abs(fd));
}

TEST(EpsilonTilde, VdExample) {
    const ParetoModel m{3.0, 0.01};
    EXPECT_NEAR(epsilon_tilde(std::vector<double>{0.0}, m), 2.97e-4, 1e-15);
}

TEST(EpsilonTilde, VdEqualsTruncatedMoment) {
    for (double k : {2.7, 4.0 + 1e-3, 6.5}) {
        const ParetoModel m{k, 0.02};
        for (std::size_t n = 2; n <= 5; ++n) {
            // integral of k lm^k l^(n-k-1) over [lm, 1]
            const double expected = k * std::pow(0.02, k) * (1.0 - std::pow(0.02, n - k)) / (static_cast<double>(n) - k);
            EXPECT_NEAR(epsilon_tilde(std::vector<double>(n - 1, 0.0), m) / expected, 1.0, 1e-12);
        }
    }
}

// Property: the closed form matches adaptive quadrature of |G|.
TEST(EpsilonTilde, MatchesQuadrature) {
    Rng rng(3);
    for (int t = 0; t < 60; ++t) {
        const ParetoModel m{rng.uniform(2.5, 8.0), rng.uniform(1e-3, 0.05)};
        const auto z = random_zeros(rng, 1 + t % 4, 0.0, 4 * m.scale);
        const double closed = epsilon_tilde(z, m);
        EXPECT_NEAR(closed / quadrature_objective(z, m), 1.0, 1e-9) << "trial " << t;
    }
}

TEST(EpsilonTilde, RejectsInfeasibleZeros) {
    const ParetoModel m{3.0, 0.01};
    EXPECT_EQ(code_of([&] { epsilon_tilde(std::vector<double>{0.2, 0.1}, m); }), ErrorCode::InfeasibleBeta);
    EXPECT_EQ(code_of([&] { epsilon_tilde(std::vector<double>{-0.1}, m); }), ErrorCode::InfeasibleBeta);
    EXPECT_EQ(code_of([&] { epsilon_tilde(std::vector<double>{1.5}, m); }), ErrorCode::InfeasibleBeta);
}

TEST(Gradient, MatchesFiniteDifferences) {
    const ParetoModel m{3.0, 0.01};
    const std::vector<double> z{0.02, 0.05};
    const auto g = epsilon_tilde_gradient(z, m);
    for (std::size_t i = 0; i < z.size(); ++i) {
        auto up = z, down = z;
        up[i] += 1e-6;
        down[i] -= 1e-6;
        const double fd = (epsilon_tilde(up, m) - epsilon_tilde(down, m)) / 2e-6;
        EXPECT_NEAR(g[i], fd, 1e-5 * std::abs(fd));
    }
}

TEST(Gradient, PushesZerosUpFromScale) {
    const ParetoModel m{3.0, 0.01};
    const auto g = epsilon_tilde_gradient(std::vector<double>{0.01, 0.01}, m);
    EXPECT_LT(g[0], 0.0);
    EXPECT_LT(g[1], 0.0);
}

TEST(ClosedForm, Examples) {
    const ParetoModel m{3.0, 0.01};
    EXPECT_NEAR(closed_form_beta1(m), 0.014141428569978354, 1e-15);
    EXPECT_NEAR(closed_form_second_order(m).zeros()[0], closed_form_beta1(m), 0.0);
    EXPECT_LT(std::abs(epsilon_tilde_gradient(closed_form_second_order(m).zeros(), m)[0]), 1e-8);
    EXPECT_EQ(closed_form_second_order_from_mean(0.02).zeros()[0], 0.02);
    const double worst = 1.0 / (1.0 - std::log(2.0));
    EXPECT_NEAR(closed_form_mean_ratio(ParetoModel{worst, 1e-3}), 1.062, 1e-3);
    // At k -> 2 the ratio tends to 1 + lm.
    EXPECT_NEAR(closed_form_mean_ratio(ParetoModel{2.0 + 1e-9, 1e-3}), 1.001, 1e-8);
}

TEST(ClosedForm, MinimizesObjectiveOnGrid) {
    const ParetoModel m{3.0, 0.01};
    const double best = epsilon_tilde(closed_form_second_order(m).zeros(), m);
    for (double b = m.scale; b <= 1.0; b += 1e-4) {
        EXPECT_GE(epsilon_tilde(std::vector<double>{b}, m), best - 1e-18);
    }
}

TEST(Type1, Placement) {
    const FilterSpec f = design_type1(ParetoModel{3.0, 0.01}, 4);
    for (double z : f.zeros()) {
        EXPECT_NEAR(z, 0.015, 1e-15);
    }
    const FilterSpec pure = design_type1(0.0, 3);
    EXPECT_EQ(pure.zeros()[0], 0.0);
    EXPECT_EQ(pure.zeros()[1], 0.0);
}

TEST(Type2, SecondOrderMatchesClosedForm) {
    for (double k : {2.5, 3.0, 4.7, 9.0}) {
        const ParetoModel m{k, 0.01};
        const Type2Result r = design_type2(m, 2);
        EXPECT_NEAR(r.filter.zeros()[0], closed_form_beta1(m), 1e-6) << "k " << k;
    }
}

TEST(Type2, InitializationIndependent) {
    const ParetoModel m{4.0, 0.01};
    Rng rng(4);
    std::vector<double> objectives;
    for (int t = 0; t < 10; ++t) {
        PgdOptions opt;
        opt.init = random_zeros(rng, 3, 0.0, 0.1);
        objectives.push_back(design_type2(m, 4, opt).objective);
    }
    const auto [lo, hi] = std::minmax_element(objectives.begin(), objectives.end());
    EXPECT_LE((*hi - *lo) / *lo, 1e-9);
}

TEST(Type2, NeverWorseThanType1) {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const ParetoModel m{rng.uniform(2.5, 10.0), rng.uniform(1e-3, 0.05)};
        const std::size_t n = 2 + t % 4;
        const double type1 = epsilon_tilde(design_type1(m, n).zeros(), m);
        EXPECT_LE(design_type2(m, n).objective, type1 + 1e-12);
    }
}

TEST(Type2, StationaryStartStopsQuickly) {
    const ParetoModel m{3.0, 0.01};
    PgdOptions opt;
    opt.init = std::vector<double>{closed_form_beta1(m)};
    EXPECT_LE(design_type2(m, 2, opt).iterations, 2);
}

TEST(Oracle, SingleAtomIsAnnihilated) {
    const SpectrumSummary s = SpectrumSummary::from_eigenvalues({0.7, 0.1, 0.1, 0.1});
    const FilterSpec f = design_oracle_optimal(s, 2);
    EXPECT_NEAR(f.zeros()[0], 0.1, 1e-15);
}

TEST(Oracle, ThreeEigenvalueExample) {
    const SpectrumSummary s = SpectrumSummary::from_eigenvalues({0.8, 0.15, 0.05, 0.0});
    const FilterSpec f = design_oracle_optimal(s, 3);
    EXPECT_NEAR(f.zeros()[0], 0.05, 1e-15);
    EXPECT_NEAR(f.zeros()[1], 0.15, 1e-15);
    EXPECT_EQ(empirical_objective(s.noise, f.zeros()), 0.0);
}

// Property: the oracle beats every structured design and a random search
// on its own objective.
TEST(Oracle, DominatesOtherDesigns) {
    Rng rng(6);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> eig(16);
        eig[0] = 0.6 + 0.3 * rng.uniform();
        double rest = 0.0;
        for (std::size_t i = 1; i < eig.size(); ++i) {
            eig[i] = rng.uniform();
            rest += eig[i];
        }
        for (std::size_t i = 1; i < eig.size(); ++i) {
            eig[i] *= (1.0 - eig[0]) / rest;
        }
        const SpectrumSummary s = SpectrumSummary::from_eigenvalues(eig);
        const std::size_t n = 2 + t % 3;
        const double oracle = empirical_objective(s.noise, design_oracle_optimal(s, n).zeros());
        EXPECT_LE(oracle, empirical_objective(s.noise, design_type1(s.mu, n).zeros()) * (1 + 1e-12));
        EXPECT_LE(oracle, empirical_objective(s.noise, FilterSpec::vd(n).zeros()) * (1 + 1e-12));
        for (int r = 0; r < 200; ++r) {
            const auto z = random_zeros(rng, n - 1, 0.0, 2.0 * s.mu);
            EXPECT_LE(oracle, empirical_objective(s.noise, z) * (1 + 1e-12));
        }
    }
}
