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


#include "permfilter/result_table.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "permfilter/error.hpp"

namespace permfilter {

namespace {

constexpr std::string_view kCsvHeader = "experiment,point_params,seed,method,metric,value";

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view text) {
    if (text == "nan") {
        return std::nan("");
    }
    std::string s(text);
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
        fail(ErrorCode::Parse, "not a number: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_u64(std::string_view text) {
    std::string s(text);
    errno = 0;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s[0] == '-' || end != s.c_str() + s.size() || errno == ERANGE) {
        fail(ErrorCode::Parse, "not an unsigned seed: '" + s + "'");
    }
    return v;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + '"';
}

// Splits one CSV record starting at pos; advances pos past the line break.
std::vector<std::string> read_csv_record(std::string_view text, std::size_t &pos) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    while (pos < text.size()) {
        const char c = text[pos++];
        if (quoted) {
            if (c == '"') {
                if (pos < text.size() && text[pos] == '"') {
                    fields.back() += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) {
        fail(ErrorCode::Parse, "unterminated quoted CSV field");
    }
    return fields;
}

std::string json_string(const std::string &s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\r':
                out += "\\r";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out + '"';
}

std::string json_number(double v) {
    if (std::isnan(v)) {
        return "null";
    }
    if (std::isinf(v)) {
        return v > 0 ? "\"inf\"" : "\"-inf\"";
    }
    return format_double(v);
}

bool same_value(double a, double b) noexcept {
    return (std::isnan(a) && std::isnan(b)) || a == b;
}

std::string emit_csv(const ResultTable &table) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto &r : table.rows) {
        out += csv_field(r.experiment) + ',' + csv_field(r.point_params) + ',' + std::to_string(r.seed) + ',' +
               csv_field(r.method) + ',' + csv_field(r.metric) + ',' + format_double(r.value) + '\n';
    }
    return out;
}

std::string emit_json(const ResultTable &table) {
    std::string out = "{\n  \"columns\": [\"experiment\", \"point_params\", \"seed\", \"method\", \"metric\", \"value\"],\n"
                      "  \"rows\": [\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto &r = table.rows[i];
        out += "    {\"experiment\": " + json_string(r.experiment) + ", \"point_params\": " +
               json_string(r.point_params) + ", \"seed\": " + std::to_string(r.seed) +
               ", \"method\": " + json_string(r.method) + ", \"metric\": " + json_string(r.metric) +
               ", \"value\": " + json_number(r.value) + "}";
        out += i + 1 < table.rows.size() ? ",\n" : "\n";
    }
    return out + "  ]\n}\n";
}

ResultTable parse_csv(std::string_view text) {
    std::size_t pos = 0;
    const auto header = read_csv_record(text, pos);
    std::string joined;
    for (std::size_t i = 0; i < header.size(); ++i) {
        joined += (i ? "," : "") + header[i];
    }
    if (joined != kCsvHeader) {
        fail(ErrorCode::Parse, "unexpected CSV header '" + joined + "'");
    }
    ResultTable table;
    while (pos < text.size()) {
        const auto f = read_csv_record(text, pos);
        if (f.size() == 1 && f[0].empty()) {
            continue;
        }
        if (f.size() != 6) {
            fail(ErrorCode::Parse, "CSV record with " + std::to_string(f.size()) + " fields, expected 6");
        }
        table.rows.push_back(ResultRow{f[0], f[1], parse_u64(f[2]), f[3], f[4], parse_double(f[5])});
    }
    return table;
}

ResultTable parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::Parse, std::string("malformed JSON table: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
        fail(ErrorCode::Parse, "JSON table needs a \"rows\" array");
    }
    ResultTable table;
    try {
        for (const auto &r : doc["rows"]) {
            ResultRow row;
            row.experiment = r.at("experiment").get<std::string>();
            row.point_params = r.at("point_params").get<std::string>();
            row.seed = r.at("seed").get<std::uint64_t>();
            row.method = r.at("method").get<std::string>();
            row.metric = r.at("metric").get<std::string>();
            const auto &v = r.at("value");
            if (v.is_null()) {
                row.value = std::nan("");
            } else if (v.is_string()) {
                row.value = parse_double(v.get<std::string>());
            } else {
                row.value = v.get<double>();
            }
            table.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::Parse, std::string("bad JSON row: ") + e.what());
    }
    return table;
}

}  // namespace

bool same_row(const ResultRow &a, const ResultRow &b) noexcept {
    return a.experiment == b.experiment && a.point_params == b.point_params && a.seed == b.seed &&
           a.method == b.method && a.metric == b.metric && same_value(a.value, b.value);
}

std::size_t ResultTable::error_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ResultRow &r) { return r.is_error(); }));
}

bool same_table(const ResultTable &a, const ResultTable &b) noexcept {
    return a.rows.size() == b.rows.size() && std::equal(a.rows.begin(), a.rows.end(), b.rows.begin(), same_row);
}

double median_of(std::vector<double> values) {
    if (values.empty()) {
        return std::nan("");
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<Aggregate> aggregate(const ResultTable &table) {
    using Key = std::tuple<std::string, std::string, std::string, std::string>;
    std::map<Key, std::size_t> index;
    std::vector<Aggregate> groups;
    std::vector<std::vector<double>> samples;
    for (const auto &r : table.rows) {
        if (r.is_error() || std::isnan(r.value)) {
            continue;
        }
        Key key{r.experiment, r.point_params, r.method, r.metric};
        auto [it, inserted] = index.emplace(key, groups.size());
        if (inserted) {
            groups.push_back(Aggregate{r.experiment, r.point_params, r.method, r.metric});
            samples.emplace_back();
        }
        samples[it->second].push_back(r.value);
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &s = samples[g];
        double sum = 0.0;
        for (double v : s) {
            sum += v;
        }
        groups[g].count = s.size();
        groups[g].mean = sum / static_cast<double>(s.size());
        groups[g].median = median_of(s);
    }
    return groups;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "json") {
        return TableFormat::json;
    }
    fail(ErrorCode::Config, "unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string_view table_format_name(TableFormat format) {
    return format == TableFormat::csv ? "csv" : "json";
}

std::string emit(const ResultTable &table, TableFormat format) {
    if (table.rows.empty()) {
        fail(ErrorCode::EmptyTable, "refusing to emit a table without rows");
    }
    return format == TableFormat::csv ? emit_csv(table) : emit_json(table);
}

void emit_to_file(const ResultTable &table, TableFormat format, const std::string &path) {
    const std::string text = emit(table, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        fail(ErrorCode::Io, "failed while writing '" + path + "'");
    }
}

ResultTable parse_table(std::string_view text, TableFormat format) {
    return format == TableFormat::csv ? parse_csv(text) : parse_json(text);
}

std::string format_aggregates(const std::vector<Aggregate> &groups) {
    std::ostringstream out;
    char line[512];
    std::snprintf(line, sizeof line, "%-22s %-34s %-16s %-24s %5s %14s %14s\n", "experiment", "point", "method",
                  "metric", "n", "median", "mean");
    out << line;
    for (const auto &g : groups) {
        std::snprintf(line, sizeof line, "%-22s %-34s %-16s %-24s %5zu %14.6g %14.6g\n", g.experiment.c_str(),
                      g.point_params.c_str(), g.method.c_str(), g.metric.c_str(), g.count, g.median, g.mean);
        out << line;
    }
    return out.str();
}

}  // namespace permfilter
