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
#include <string>
#include <string_view>
#include <vector>

namespace permfilter {

/// One (grid point, instance, method, metric) record.
struct ResultRow {
    std::string experiment;
    std::string point_params;  // "key=value;key=value", no commas
    std::uint64_t seed = 0;
    std::string method;
    std::string metric;  // "error:<Kind>" marks a failed evaluation
    double value = 0.0;

    bool is_error() const noexcept {
        return metric.rfind("error:", 0) == 0;
    }
};

/// Field-wise equality that treats two NaN values as equal.
bool same_row(const ResultRow &a, const ResultRow &b) noexcept;

struct ResultTable {
    std::vector<ResultRow> rows;

    std::size_t error_count() const noexcept;
};

bool same_table(const ResultTable &a, const ResultTable &b) noexcept;

/// Median and mean of one (experiment, point, method, metric) group across
/// instances. Error rows and NaN values are skipped.
struct Aggregate {
    std::string experiment;
    std::string point_params;
    std::string method;
    std::string metric;
    std::size_t count = 0;
    double median = 0.0;
    double mean = 0.0;
};

/// Groups in order of first appearance.
std::vector<Aggregate> aggregate(const ResultTable &table);

double median_of(std::vector<double> values);

enum class TableFormat { csv, json };

TableFormat parse_table_format(std::string_view name);
std::string_view table_format_name(TableFormat format);

/// Serializes with 17 significant digits. Throws EmptyTable on an empty table.
std::string emit(const ResultTable &table, TableFormat format);
/// Writes emit(table, format) to path. Throws Io with the path on failure.
void emit_to_file(const ResultTable &table, TableFormat format, const std::string &path);

/// Inverse of emit. Throws Parse on malformed input.
ResultTable parse_table(std::string_view text, TableFormat format);

/// Fixed-width text listing of the aggregates, one line per group.
std::string format_aggregates(const std::vector<Aggregate> &groups);

}  // namespace permfilter
