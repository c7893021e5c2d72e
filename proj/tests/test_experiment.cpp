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

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "permfilter/circuit.hpp"
#include "permfilter/error.hpp"
#include "permfilter/experiment.hpp"

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

ExperimentConfig small_stages() {
    return parse_config(R"({
        "experiment": "metric-vs-stages", "num_qubits": 3, "stages": [2, 4],
        "p2": [0.01], "orders": [2, 3], "num_instances": 3, "seed": 5
    })");
}

double value_of(const ResultTable &t, const std::string &method, const std::string &metric, std::uint64_t seed) {
    for (const auto &r : t.rows) {
        if (r.method == method && r.metric == metric && r.seed == seed) {
            return r.value;
        }
    }
    return std::nan("");
}

}  // namespace

TEST(Config, ParsesFields) {
    const ExperimentConfig cfg = parse_config(R"({
        "experiment": "qaoa-mud", "stages": [10, 30], "expected_errors": [0.7],
        "mud": {"users": 3, "receivers": 5, "snr_db": 10}, "orders": [3], "num_instances": 4,
        "seed": 9, "threads": 2, "format": "json", "output": "x.json"
    })");
    EXPECT_EQ(cfg.experiment, ExperimentKind::qaoa_mud);
    EXPECT_EQ(cfg.stages, (std::vector<std::size_t>{10, 30}));
    EXPECT_EQ(cfg.mud.users, 3u);
    EXPECT_EQ(cfg.mud.receivers, 5u);
    EXPECT_EQ(cfg.mud.snr_db, 10.0);
    EXPECT_EQ(cfg.orders, (std::vector<std::size_t>{3}));
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_EQ(cfg.threads, 2u);
    EXPECT_EQ(cfg.format, TableFormat::json);
    EXPECT_EQ(cfg.output, "x.json");
}

TEST(Config, ObservableTerms) {
    const ExperimentConfig cfg = parse_config(R"({
        "experiment": "fixed-expected-errors", "num_qubits": 2, "stages": [1], "expected_errors": [0.1],
        "observable": [{"weight": 0.5, "pauli": "ZZ"}, {"weight": -1, "pauli": "XI"}]
    })");
    ASSERT_EQ(cfg.observable.size(), 2u);
    EXPECT_EQ(cfg.observable[1].string.to_string(), "XI");
    EXPECT_EQ(cfg.observable[1].weight, -1.0);
}

TEST(Config, RejectsBadInput) {
    const char *bad[] = {
        R"({"experiment": "spectra", "stages": [], "p2": [0.01]})",
        R"({"experiment": "spectra", "stages": [3], "p2": [1.5]})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "orders": [1]})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "orders": [9]})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "num_qubits": 0})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "num_instances": 0})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "bogus": 1})",
        R"({"experiment": "nonsense", "stages": [3], "p2": [0.01]})",
        R"({"stages": [3], "p2": [0.01]})",
        R"({"experiment": "fixed-expected-errors", "stages": [3]})",
        R"({"experiment": "fixed-expected-errors", "stages": [3], "expected_errors": [-1]})",
        R"({"experiment": "qaoa-mud", "stages": [3], "expected_errors": [0.1], "mud": {"users": 11}})",
        R"({"experiment": "qaoa-mud", "stages": [3], "expected_errors": [0.1], "mud": {"color": 1}})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "num_qubits": 2,
            "observable": [{"weight": 1, "pauli": "ZZZ"}]})",
        R"({"experiment": "spectra", "stages": [3], "p2": [0.01], "format": "xml"})",
        R"({"experiment": "spectra", "stages": "three", "p2": [0.01]})",
        R"(not json)",
    };
    for (const char *text : bad) {
        EXPECT_EQ(code_of([&] { parse_config(text); }), ErrorCode::Config) << text;
    }
    EXPECT_EQ(code_of([] { load_config("/nonexistent/config.json"); }), ErrorCode::Io);
}

TEST(Experiment, DeterministicAcrossRunsAndThreads) {
    ExperimentConfig cfg = small_stages();
    const ResultTable a = run_experiment(cfg);
    const ResultTable b = run_experiment(cfg);
    cfg.threads = 3;
    const ResultTable c = run_experiment(cfg);
    EXPECT_TRUE(same_table(a, b));
    EXPECT_TRUE(same_table(a, c));
    EXPECT_EQ(a.error_count(), 0u);
}

TEST(Experiment, RowOrderAndSeeds) {
    const ResultTable t = run_experiment(small_stages());
    ASSERT_FALSE(t.rows.empty());
    EXPECT_EQ(t.rows.front().point_params, "nq=3;stages=2;p2=0.01");
    EXPECT_EQ(t.rows.back().point_params, "nq=3;stages=4;p2=0.01");
    std::set<std::uint64_t> seeds;
    for (const auto &r : t.rows) {
        seeds.insert(r.seed);
        EXPECT_EQ(r.experiment, "metric-vs-stages");
    }
    EXPECT_EQ(seeds, (std::set<std::uint64_t>{5, 6, 7}));
    std::set<std::string> methods;
    for (const auto &r : t.rows) {
        methods.insert(r.method);
    }
    for (const char *m : {"vd(2)", "type1(2)", "closed_form(2)", "oracle(2)", "vd(3)", "type1(3)", "type2(3)",
                          "oracle(3)", "spectrum", "circuit"}) {
        EXPECT_TRUE(methods.count(m)) << m;
    }
}

TEST(Experiment, MoreInstancesExtendThePrefix) {
    ExperimentConfig cfg = parse_config(R"({
        "experiment": "spectra", "num_qubits": 2, "stages": [3], "p2": [0.02], "orders": [3],
        "num_instances": 10, "seed": 100
    })");
    const ResultTable ten = run_experiment(cfg);
    cfg.num_instances = 20;
    const ResultTable twenty = run_experiment(cfg);
    ASSERT_GT(twenty.rows.size(), ten.rows.size());
    for (std::size_t i = 0; i < ten.rows.size(); ++i) {
        EXPECT_TRUE(same_row(ten.rows[i], twenty.rows[i])) << i;
    }
}

TEST(Experiment, SpectraRows) {
    const ResultTable t = run_experiment(parse_config(R"({
        "experiment": "spectra", "num_qubits": 2, "stages": [3], "p2": [0.02], "orders": [3],
        "num_instances": 1, "seed": 1
    })"));
    double total = 0.0;
    double previous = 2.0;
    for (int i = 0; i < 4; ++i) {
        const double e = value_of(t, "spectrum", "eigenvalue_" + std::to_string(i), 1);
        ASSERT_FALSE(std::isnan(e));
        EXPECT_LE(e, previous);
        previous = e;
        total += e;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_GT(value_of(t, "spectrum", "pareto_shape", 1), 2.0);
    EXPECT_GT(value_of(t, "spectrum", "pareto_scale", 1), 0.0);
    EXPECT_EQ(value_of(t, "circuit", "state_valid", 1), 1.0);
}

TEST(Experiment, FixedExpectedErrorsCalibration) {
    const ResultTable t = run_experiment(parse_config(R"({
        "experiment": "fixed-expected-errors", "num_qubits": 3, "stages": [2, 6], "expected_errors": [0.7],
        "orders": [2], "num_instances": 2, "seed": 3
    })"));
    int seen = 0;
    for (const auto &r : t.rows) {
        if (r.method == "circuit" && r.metric == "expected_errors") {
            EXPECT_NEAR(r.value, 0.7, 1e-12);
            ++seen;
        }
    }
    EXPECT_EQ(seen, 4);
    EXPECT_FALSE(std::isnan(value_of(t, "vd(2)", "overhead_factor", 3)));
}

TEST(Experiment, PureStatesBecomeErrorRows) {
    const ResultTable t = run_experiment(parse_config(R"({
        "experiment": "fixed-expected-errors", "num_qubits": 2, "stages": [2], "expected_errors": [0],
        "orders": [2], "num_instances": 1, "seed": 1
    })"));
    EXPECT_GT(t.error_count(), 0u);
    for (const auto &r : t.rows) {
        if (r.is_error()) {
            EXPECT_EQ(r.metric.substr(0, 6), "error:");
            EXPECT_GT(r.value, 0.0);
        }
    }
}

TEST(Experiment, QaoaMudRows) {
    const ResultTable t = run_experiment(parse_config(R"({
        "experiment": "qaoa-mud", "stages": [4], "expected_errors": [0.3],
        "mud": {"users": 3, "receivers": 3, "snr_db": 13}, "orders": [2], "num_instances": 2, "seed": 21
    })"));
    EXPECT_EQ(t.error_count(), 0u);
    EXPECT_EQ(value_of(t, "problem", "ml_matches_argmax", 21), 1.0);
    EXPECT_FALSE(std::isnan(value_of(t, "raw", "eps_u", 22)));
    EXPECT_FALSE(std::isnan(value_of(t, "vd(2)", "eps_u", 22)));
}
