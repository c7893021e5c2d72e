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


// Batch runner: reads a JSON experiment description, runs the sweep and
// writes the result table.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 when some instances
// recorded failures (the table is still written).

#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "permfilter/permfilter.h"

namespace {

int report(const char *stage, pf_status status) {
    std::fprintf(stderr, "permfilter: %s failed (%s): %s\n", stage, pf_status_name(status), pf_last_error());
    return 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Permutation-filter error mitigation experiments"};
    std::string config_path;
    std::string output;
    std::string format;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    bool summary = false;
    app.add_option("--config", config_path, "experiment configuration (JSON)")->required();
    app.add_option("--output", output, "result file; '-' or unset with no config output writes to stdout");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    auto *seed_opt = app.add_option("--seed", seed, "base seed, overrides the configuration");
    app.add_option("--threads", threads, "worker threads for instances")->check(CLI::PositiveNumber);
    app.add_flag("--summary", summary, "print median/mean per group to stderr");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    pf_config *config = nullptr;
    pf_status status = pf_config_load(config_path.c_str(), &config);
    if (status != PF_OK) {
        return report("loading configuration", status);
    }
    if (*seed_opt) {
        pf_config_set_seed(config, seed);
    }
    if (threads > 0) {
        pf_config_set_threads(config, threads);
    }
    if (!output.empty()) {
        pf_config_set_output(config, output.c_str());
    }
    if (!format.empty()) {
        pf_config_set_format(config, format.c_str());
    }

    pf_table *table = nullptr;
    status = pf_run_experiment(config, &table);
    if (status != PF_OK) {
        pf_config_free(config);
        return report("running experiment", status);
    }

    int exit_code = 0;
    const std::string target = pf_config_output(config);
    if (target.empty() || target == "-") {
        const char *text = nullptr;
        status = pf_table_emit(table, pf_config_format(config), &text);
        if (status == PF_OK) {
            std::fputs(text, stdout);
        }
    } else {
        status = pf_table_write(table, target.c_str(), pf_config_format(config));
    }
    if (status != PF_OK) {
        exit_code = report("writing results", status);
    } else {
        const std::size_t errors = pf_table_error_count(table);
        if (summary) {
            const char *text = nullptr;
            if (pf_table_summary(table, &text) == PF_OK) {
                std::fputs(text, stderr);
            }
        }
        std::fprintf(stderr, "permfilter: %zu rows, %zu failed evaluations\n", pf_table_row_count(table), errors);
        exit_code = errors > 0 ? 2 : 0;
    }
    pf_table_free(table);
    pf_config_free(config);
    return exit_code;
}
