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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permfilter/pauli.hpp"
#include "permfilter/result_table.hpp"

namespace permfilter {

enum class ExperimentKind {
    spectra,
    metric_vs_stages,
    metric_vs_p,
    ratio_vs_bandwidth,
    fixed_expected_errors,
    qaoa_mud,
};

std::string_view experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

struct MudSettings {
    std::size_t users = 4;
    std::size_t receivers = 4;
    double snr_db = 13.0;
};

/// One sweep. Grid axes are `stages` crossed with `p2`, or with
/// `expected_errors` for fixed-expected-errors and qaoa-mud (p2 is then
/// calibrated per point).
struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::spectra;
    std::size_t num_qubits = 4;
    std::vector<std::size_t> stages;
    std::vector<double> p2;
    double p1_ratio = 0.1;
    std::vector<std::size_t> orders{2, 3};
    std::vector<double> expected_errors;
    std::size_t num_instances = 10;
    std::uint64_t seed = 0;
    MudSettings mud;
    /// Observable used for estimation errors and sampling overhead on the
    /// random-stage circuits. Empty means the sum of Z on every qubit.
    std::vector<PauliTerm> observable;
    std::size_t threads = 1;
    std::string output;
    TableFormat format = TableFormat::csv;

    /// Throws Config on an inconsistent or out-of-range configuration.
    void validate() const;
};

/// Parses a JSON document. Unknown keys are rejected. Throws Config.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string &path);

/// Runs every (grid point, instance) pair. Instance i of every point uses
/// seed `cfg.seed + i`, and rows come out in (point, instance) order for any
/// thread count. Failed evaluations become "error:<Kind>" rows.
ResultTable run_experiment(const ExperimentConfig &cfg);

}  // namespace permfilter
