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


// Exercises the shared library through its C interface only.

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "permfilter/permfilter.h"

namespace {

pf_state *three_level() {
    const double p[4] = {0.8, 0.15, 0.05, 0.0};
    pf_state *s = nullptr;
    EXPECT_EQ(pf_state_from_diagonal(p, 4, &s), PF_OK);
    return s;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STRNE(pf_version(), "");
    EXPECT_STREQ(pf_status_name(PF_OK), "Ok");
    EXPECT_STREQ(pf_status_name(PF_ERR_DEGENERATE_DENOMINATOR), "DegenerateDenominator");
}

TEST(CApi, StateAndMitigation) {
    pf_state *s = three_level();
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(pf_state_dim(s), 4u);

    size_t count = 0;
    EXPECT_EQ(pf_state_eigenvalues(s, nullptr, 0, &count), PF_OK);
    EXPECT_EQ(count, 4u);
    double ev[4];
    EXPECT_EQ(pf_state_eigenvalues(s, ev, 4, &count), PF_OK);
    EXPECT_NEAR(ev[0], 0.8, 1e-14);
    EXPECT_NEAR(ev[3], 0.0, 1e-14);
    double small[2];
    EXPECT_EQ(pf_state_eigenvalues(s, small, 2, &count), PF_ERR_INVALID_ARGUMENT);
    EXPECT_STRNE(pf_last_error(), "");

    const char *paulis[] = {"ZZ"};
    const double weights[] = {1.0};
    double y = 0.0;
    EXPECT_EQ(pf_vd_output(s, paulis, weights, 1, 2, &y), PF_OK);
    EXPECT_NEAR(y, 0.9248120300751882, 1e-14);

    const double zeros[] = {0.1, 0.2};
    pf_filter *f = nullptr;
    ASSERT_EQ(pf_filter_from_zeros(zeros, 2, &f), PF_OK);
    EXPECT_EQ(pf_filter_order(f), 3u);
    EXPECT_EQ(pf_filter_output(s, paulis, weights, 1, f, &y), PF_OK);
    EXPECT_NEAR(y, 1.0, 1e-12);
    double metric = 0.0;
    EXPECT_EQ(pf_empirical_metric(s, f, &metric), PF_OK);
    EXPECT_NEAR(metric, 7.5e-4, 1e-15);
    double var = 0.0;
    EXPECT_EQ(pf_filter_variance(s, "ZZ", f, &var), PF_OK);
    EXPECT_NEAR(var, 7.723763463718821, 1e-11);
    double overhead = 0.0;
    EXPECT_EQ(pf_sampling_overhead(s, paulis, weights, 1, f, &overhead), PF_OK);
    EXPECT_GT(overhead, 0.0);

    double coeffs[3];
    EXPECT_EQ(pf_filter_coefficients(f, coeffs, 3, &count), PF_OK);
    EXPECT_EQ(count, 3u);
    EXPECT_NEAR(coeffs[1], -0.3, 1e-15);
    EXPECT_NEAR(coeffs[2], 0.02, 1e-15);
    pf_filter *g = nullptr;
    EXPECT_EQ(pf_filter_from_coefficients(coeffs, 3, &g), PF_OK);
    double z[2];
    EXPECT_EQ(pf_filter_zeros(g, z, 2, &count), PF_OK);
    EXPECT_NEAR(z[0], 0.1, 1e-10);
    EXPECT_NEAR(z[1], 0.2, 1e-10);

    pf_filter_free(g);
    pf_filter_free(f);
    pf_state_free(s);
}

TEST(CApi, ErrorCodesAndMessages) {
    pf_state *s = nullptr;
    const double not_normalized[2] = {0.7, 0.7};
    EXPECT_EQ(pf_state_from_diagonal(not_normalized, 2, &s), PF_ERR_INVALID_STATE);
    EXPECT_EQ(s, nullptr);
    EXPECT_STRNE(pf_last_error(), "");
    const double three[3] = {0.5, 0.25, 0.25};
    EXPECT_EQ(pf_state_from_diagonal(three, 3, &s), PF_ERR_DIMENSION_MISMATCH);

    pf_filter *f = nullptr;
    const double negative[] = {-0.5};
    EXPECT_EQ(pf_filter_from_zeros(negative, 1, &f), PF_ERR_INFEASIBLE_BETA);
    const double complex_roots[] = {1.0, 0.0, 1.0};
    EXPECT_EQ(pf_filter_from_coefficients(complex_roots, 3, &f), PF_ERR_COMPLEX_ROOTS);

    const double pure[2] = {1.0, 0.0};
    ASSERT_EQ(pf_state_from_diagonal(pure, 2, &s), PF_OK);
    ASSERT_EQ(pf_filter_vd(2, &f), PF_OK);
    const char *paulis[] = {"Z"};
    const double weights[] = {1.0};
    double out = 0.0;
    EXPECT_EQ(pf_sampling_overhead(s, paulis, weights, 1, f, &out), PF_ERR_DEGENERATE_DENOMINATOR);
    const char *wrong[] = {"ZZ"};
    EXPECT_EQ(pf_vd_output(s, wrong, weights, 1, 2, &out), PF_ERR_DIMENSION_MISMATCH);
    const char *garbage[] = {"Q"};
    EXPECT_EQ(pf_vd_output(s, garbage, weights, 1, 2, &out), PF_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pf_vd_output(nullptr, paulis, weights, 1, 2, &out), PF_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pf_epsilon_tilde(f, 2.0, 0.01, &out), PF_ERR_INVALID_ARGUMENT);
    pf_filter_free(f);
    pf_state_free(s);
    pf_state_free(nullptr);
    pf_filter_free(nullptr);
}

TEST(CApi, Designs) {
    pf_filter *f = nullptr;
    double objective = 0.0;
    ASSERT_EQ(pf_filter_type2(5.0, 0.01, 3, &f, &objective), PF_OK);
    pf_filter *t1 = nullptr;
    ASSERT_EQ(pf_filter_type1(0.0125, 3, &t1), PF_OK);
    double obj1 = 0.0;
    EXPECT_EQ(pf_epsilon_tilde(t1, 5.0, 0.01, &obj1), PF_OK);
    EXPECT_LE(objective, obj1 + 1e-15);
    pf_filter *cf = nullptr;
    ASSERT_EQ(pf_filter_closed_form(5.0, 0.01, &cf), PF_OK);
    EXPECT_EQ(pf_filter_order(cf), 2u);
    double r = 0.0;
    EXPECT_EQ(pf_filter_response(cf, 0.0, &r), PF_OK);
    EXPECT_EQ(r, 0.0);

    pf_state *s = nullptr;
    ASSERT_EQ(pf_state_simulate_stages(3, 4, 7, 0.001, 0.01, &s), PF_OK);
    pf_spectrum spec;
    EXPECT_EQ(pf_state_spectrum(s, &spec), PF_OK);
    EXPECT_GT(spec.lambda1, 0.5);
    pf_pareto fit;
    EXPECT_EQ(pf_state_fit_pareto(s, 3, &fit), PF_OK);
    EXPECT_GT(fit.shape, 2.0);
    pf_filter *oracle = nullptr;
    ASSERT_EQ(pf_filter_oracle(s, 3, &oracle), PF_OK);
    double m_oracle = 0.0, m_t1 = 0.0;
    pf_filter *t1s = nullptr;
    ASSERT_EQ(pf_filter_type1(fit.mean_estimate, 3, &t1s), PF_OK);
    EXPECT_EQ(pf_empirical_metric(s, oracle, &m_oracle), PF_OK);
    EXPECT_EQ(pf_empirical_metric(s, t1s, &m_t1), PF_OK);
    EXPECT_LE(m_oracle, m_t1 + 1e-15);

    pf_filter_free(t1s);
    pf_filter_free(oracle);
    pf_state_free(s);
    pf_filter_free(cf);
    pf_filter_free(t1);
    pf_filter_free(f);
}

TEST(CApi, ExperimentRoundTrip) {
    pf_config *cfg = nullptr;
    ASSERT_EQ(pf_config_parse(R"({"experiment": "spectra", "num_qubits": 2, "stages": [3], "p2": [0.02],
                                  "orders": [3], "num_instances": 2, "seed": 4})",
                              &cfg),
              PF_OK);
    EXPECT_STREQ(pf_config_format(cfg), "csv");
    EXPECT_EQ(pf_config_set_format(cfg, "json"), PF_OK);
    EXPECT_STREQ(pf_config_format(cfg), "json");
    EXPECT_EQ(pf_config_set_format(cfg, "xml"), PF_ERR_CONFIG);
    EXPECT_EQ(pf_config_set_output(cfg, "out.json"), PF_OK);
    EXPECT_STREQ(pf_config_output(cfg), "out.json");
    EXPECT_EQ(pf_config_set_threads(cfg, 0), PF_ERR_CONFIG);
    EXPECT_EQ(pf_config_set_threads(cfg, 2), PF_OK);

    pf_table *t = nullptr;
    ASSERT_EQ(pf_run_experiment(cfg, &t), PF_OK);
    EXPECT_GT(pf_table_row_count(t), 0u);
    EXPECT_EQ(pf_table_error_count(t), 0u);
    pf_row row;
    EXPECT_EQ(pf_table_row(t, 0, &row), PF_OK);
    EXPECT_STREQ(row.experiment, "spectra");
    EXPECT_EQ(row.seed, 4u);
    EXPECT_EQ(pf_table_row(t, pf_table_row_count(t), &row), PF_ERR_INVALID_ARGUMENT);
    const char *text = nullptr;
    EXPECT_EQ(pf_table_emit(t, "csv", &text), PF_OK);
    EXPECT_EQ(std::string(text).rfind("experiment,point_params,seed,method,metric,value", 0), 0u);
    EXPECT_EQ(pf_table_summary(t, &text), PF_OK);
    EXPECT_NE(std::string(text).find("spectrum"), std::string::npos);
    EXPECT_EQ(pf_table_write(t, "/nonexistent-dir/x.csv", "csv"), PF_ERR_IO);
    EXPECT_NE(std::string(pf_last_error()).find("/nonexistent-dir/x.csv"), std::string::npos);

    pf_config *bad = nullptr;
    EXPECT_EQ(pf_config_parse(R"({"experiment": "spectra", "stages": []})", &bad), PF_ERR_CONFIG);
    EXPECT_EQ(pf_config_load("/nonexistent/cfg.json", &bad), PF_ERR_IO);

    pf_table_free(t);
    pf_config_free(cfg);
}
