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


#include "permfilter/permfilter.h"

#include <algorithm>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "permfilter/circuit.hpp"
#include "permfilter/error.hpp"
#include "permfilter/experiment.hpp"
#include "permfilter/filter.hpp"
#include "permfilter/mitigation.hpp"
#include "permfilter/spectral.hpp"
#include "permfilter/state.hpp"

using namespace permfilter;

struct pf_state {
    DensityMatrix rho;
};

struct pf_filter {
    FilterSpec filter;
};

struct pf_config {
    ExperimentConfig cfg;
    std::string format_name;
};

struct pf_table {
    ResultTable table;
    std::string buffer;
};

namespace {

thread_local std::string last_error;

pf_status record(pf_status status, const std::string &message) {
    last_error = message;
    return status;
}

// Runs body and converts exceptions into status codes.
template <typename F>
pf_status guard(F &&body) {
    try {
        body();
        last_error.clear();
        return PF_OK;
    } catch (const Error &e) {
        return record(static_cast<pf_status>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return record(PF_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return record(PF_ERR_INTERNAL, e.what());
    } catch (...) {
        return record(PF_ERR_INTERNAL, "unknown failure");
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        fail(ErrorCode::InvalidArgument, what);
    }
}

Observable make_observable(const char *const *paulis, const double *weights, std::size_t num_terms) {
    require(paulis != nullptr && weights != nullptr && num_terms > 0, "observable needs at least one term");
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i < num_terms; ++i) {
        require(paulis[i] != nullptr, "null Pauli string");
        terms.push_back(PauliTerm{weights[i], PauliString::parse(paulis[i])});
    }
    return Observable(std::move(terms));
}

// Reports the size through count; a null buffer with zero capacity is a
// size query.
void copy_out(std::span<const double> values, double *out, std::size_t capacity, std::size_t *count) {
    if (count != nullptr) {
        *count = values.size();
    }
    if (out == nullptr && capacity == 0) {
        return;
    }
    require(out != nullptr && capacity >= values.size(), "output buffer too small");
    std::copy(values.begin(), values.end(), out);
}

pf_status new_filter(FilterSpec f, pf_filter **out) {
    *out = new pf_filter{std::move(f)};
    return PF_OK;
}

}  // namespace

extern "C" {

const char *pf_version(void) {
    return "0.1.0";
}

const char *pf_status_name(pf_status status) {
    if (status == PF_OK) {
        return "Ok";
    }
    if (status == PF_ERR_INTERNAL) {
        return "Internal";
    }
    if (status >= 1 && status <= 16) {
        return error_code_name(static_cast<ErrorCode>(status)).data();
    }
    return "Unknown";
}

const char *pf_last_error(void) {
    return last_error.c_str();
}

pf_status pf_state_from_matrix(const double *re_im, size_t dim, pf_state **out) {
    return guard([&] {
        require(re_im != nullptr && out != nullptr && dim > 0, "null argument");
        ComplexMatrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                const std::size_t k = 2 * (r * dim + c);
                m(r, c) = Complex(re_im[k], re_im[k + 1]);
            }
        }
        *out = new pf_state{DensityMatrix::from_matrix(std::move(m))};
    });
}

pf_status pf_state_from_diagonal(const double *probabilities, size_t dim, pf_state **out) {
    return guard([&] {
        require(probabilities != nullptr && out != nullptr && dim > 0, "null argument");
        *out = new pf_state{DensityMatrix::diagonal(std::span<const double>(probabilities, dim))};
    });
}

pf_status pf_state_simulate_stages(size_t num_qubits, size_t stages, uint64_t seed, double p1, double p2,
                                   pf_state **out) {
    return guard([&] {
        require(out != nullptr, "null output");
        *out = new pf_state{run_noisy(build_stage_circuit(num_qubits, stages, seed, NoiseModel{p1, p2}))};
    });
}

void pf_state_free(pf_state *state) {
    delete state;
}

size_t pf_state_dim(const pf_state *state) {
    return state == nullptr ? 0 : state->rho.dim();
}

pf_status pf_state_eigenvalues(const pf_state *state, double *out, size_t capacity, size_t *count) {
    return guard([&] {
        require(state != nullptr, "null state");
        copy_out(spectrum_summary(state->rho).eigenvalues, out, capacity, count);
    });
}

pf_status pf_state_spectrum(const pf_state *state, pf_spectrum *out) {
    return guard([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const SpectrumSummary s = spectrum_summary(state->rho);
        *out = pf_spectrum{s.lambda1, s.mu, s.bandwidth, s.rel_bandwidth};
    });
}

pf_status pf_state_fit_pareto(const pf_state *state, size_t order, pf_pareto *out) {
    return guard([&] {
        require(state != nullptr && out != nullptr, "null argument");
        const ParetoFit fit = fit_pareto(moments_from_state(state->rho, order));
        *out = pf_pareto{fit.model.shape, fit.model.scale, fit.mean_estimate, fit.lambda1_estimate,
                         fit.status == FitStatus::narrow_clamped ? 1 : 0};
    });
}

pf_status pf_filter_from_zeros(const double *zeros, size_t count, pf_filter **out) {
    return guard([&] {
        require(out != nullptr && (zeros != nullptr || count == 0), "null argument");
        new_filter(FilterSpec::from_zeros(std::vector<double>(zeros, zeros + count)), out);
    });
}

pf_status pf_filter_from_coefficients(const double *coefficients, size_t count, pf_filter **out) {
    return guard([&] {
        require(out != nullptr && coefficients != nullptr && count > 0, "null argument");
        new_filter(FilterSpec::from_coefficients(std::vector<double>(coefficients, coefficients + count)), out);
    });
}

pf_status pf_filter_vd(size_t order, pf_filter **out) {
    return guard([&] {
        require(out != nullptr && order >= 1, "order must be >= 1");
        new_filter(FilterSpec::vd(order), out);
    });
}

pf_status pf_filter_type1(double mean, size_t order, pf_filter **out) {
    return guard([&] {
        require(out != nullptr, "null output");
        new_filter(design_type1(mean, order), out);
    });
}

pf_status pf_filter_type2(double shape, double scale, size_t order, pf_filter **out, double *objective) {
    return guard([&] {
        require(out != nullptr, "null output");
        Type2Result r = design_type2(ParetoModel{shape, scale}, order);
        if (objective != nullptr) {
            *objective = r.objective;
        }
        new_filter(std::move(r.filter), out);
    });
}

pf_status pf_filter_closed_form(double shape, double scale, pf_filter **out) {
    return guard([&] {
        require(out != nullptr, "null output");
        new_filter(closed_form_second_order(ParetoModel{shape, scale}), out);
    });
}

pf_status pf_filter_oracle(const pf_state *state, size_t order, pf_filter **out) {
    return guard([&] {
        require(state != nullptr && out != nullptr, "null argument");
        new_filter(design_oracle_optimal(spectrum_summary(state->rho), order), out);
    });
}

void pf_filter_free(pf_filter *filter) {
    delete filter;
}

size_t pf_filter_order(const pf_filter *filter) {
    return filter == nullptr ? 0 : filter->filter.order();
}

pf_status pf_filter_zeros(const pf_filter *filter, double *out, size_t capacity, size_t *count) {
    return guard([&] {
        require(filter != nullptr, "null filter");
        copy_out(filter->filter.zeros(), out, capacity, count);
    });
}

pf_status pf_filter_coefficients(const pf_filter *filter, double *out, size_t capacity, size_t *count) {
    return guard([&] {
        require(filter != nullptr, "null filter");
        copy_out(filter->filter.coefficients(), out, capacity, count);
    });
}

pf_status pf_filter_response(const pf_filter *filter, double lambda, double *out) {
    return guard([&] {
        require(filter != nullptr && out != nullptr, "null argument");
        *out = filter->filter.response(lambda);
    });
}

pf_status pf_epsilon_tilde(const pf_filter *filter, double shape, double scale, double *out) {
    return guard([&] {
        require(filter != nullptr && out != nullptr, "null argument");
        *out = epsilon_tilde(filter->filter.zeros(), ParetoModel{shape, scale});
    });
}

pf_status pf_vd_output(const pf_state *state, const char *const *paulis, const double *weights, size_t num_terms,
                       size_t order, double *out) {
    return guard([&] {
        require(state != nullptr && out != nullptr, "null argument");
        *out = vd_output(state->rho, make_observable(paulis, weights, num_terms), static_cast<int>(order)).value;
    });
}

pf_status pf_filter_output(const pf_state *state, const char *const *paulis, const double *weights,
                           size_t num_terms, const pf_filter *filter, double *out) {
    return guard([&] {
        require(state != nullptr && filter != nullptr && out != nullptr, "null argument");
        *out = filter_output(state->rho, make_observable(paulis, weights, num_terms), filter->filter).value;
    });
}

pf_status pf_empirical_metric(const pf_state *state, const pf_filter *filter, double *out) {
    return guard([&] {
        require(state != nullptr && filter != nullptr && out != nullptr, "null argument");
        *out = empirical_design_metric(spectrum_summary(state->rho), filter->filter);
    });
}

pf_status pf_filter_variance(const pf_state *state, const char *pauli, const pf_filter *filter, double *out) {
    return guard([&] {
        require(state != nullptr && pauli != nullptr && filter != nullptr && out != nullptr, "null argument");
        *out = filter_variance(state->rho, PauliString::parse(pauli), filter->filter);
    });
}

pf_status pf_sampling_overhead(const pf_state *state, const char *const *paulis, const double *weights,
                               size_t num_terms, const pf_filter *filter, double *out) {
    return guard([&] {
        require(state != nullptr && filter != nullptr && out != nullptr, "null argument");
        *out = sampling_overhead_factor(state->rho, make_observable(paulis, weights, num_terms), filter->filter);
    });
}

pf_status pf_config_parse(const char *json, pf_config **out) {
    return guard([&] {
        require(json != nullptr && out != nullptr, "null argument");
        ExperimentConfig cfg = parse_config(json);
        const std::string format(table_format_name(cfg.format));
        *out = new pf_config{std::move(cfg), format};
    });
}

pf_status pf_config_load(const char *path, pf_config **out) {
    return guard([&] {
        require(path != nullptr && out != nullptr, "null argument");
        ExperimentConfig cfg = load_config(path);
        const std::string format(table_format_name(cfg.format));
        *out = new pf_config{std::move(cfg), format};
    });
}

void pf_config_free(pf_config *config) {
    delete config;
}

pf_status pf_config_set_seed(pf_config *config, uint64_t seed) {
    return guard([&] {
        require(config != nullptr, "null config");
        config->cfg.seed = seed;
    });
}

pf_status pf_config_set_threads(pf_config *config, size_t threads) {
    return guard([&] {
        require(config != nullptr, "null config");
        if (threads == 0) {
            fail(ErrorCode::Config, "threads must be >= 1");
        }
        config->cfg.threads = threads;
    });
}

pf_status pf_config_set_output(pf_config *config, const char *path) {
    return guard([&] {
        require(config != nullptr && path != nullptr, "null argument");
        config->cfg.output = path;
    });
}

pf_status pf_config_set_format(pf_config *config, const char *format) {
    return guard([&] {
        require(config != nullptr && format != nullptr, "null argument");
        config->cfg.format = parse_table_format(format);
        config->format_name = table_format_name(config->cfg.format);
    });
}

const char *pf_config_output(const pf_config *config) {
    return config == nullptr ? "" : config->cfg.output.c_str();
}

const char *pf_config_format(const pf_config *config) {
    return config == nullptr ? "" : config->format_name.c_str();
}

pf_status pf_run_experiment(const pf_config *config, pf_table **out) {
    return guard([&] {
        require(config != nullptr && out != nullptr, "null argument");
        *out = new pf_table{run_experiment(config->cfg), {}};
    });
}

void pf_table_free(pf_table *table) {
    delete table;
}

size_t pf_table_row_count(const pf_table *table) {
    return table == nullptr ? 0 : table->table.rows.size();
}

size_t pf_table_error_count(const pf_table *table) {
    return table == nullptr ? 0 : table->table.error_count();
}

pf_status pf_table_row(const pf_table *table, size_t index, pf_row *out) {
    if (table == nullptr || out == nullptr) {
        return record(PF_ERR_INVALID_ARGUMENT, "null argument");
    }
    if (index >= table->table.rows.size()) {
        return record(PF_ERR_INVALID_ARGUMENT, "row index out of range");
    }
    const ResultRow &r = table->table.rows[index];
    *out = pf_row{r.experiment.c_str(), r.point_params.c_str(), r.seed, r.method.c_str(), r.metric.c_str(), r.value};
    return PF_OK;
}

pf_status pf_table_write(const pf_table *table, const char *path, const char *format) {
    return guard([&] {
        require(table != nullptr && path != nullptr && format != nullptr, "null argument");
        emit_to_file(table->table, parse_table_format(format), path);
    });
}

pf_status pf_table_emit(pf_table *table, const char *format, const char **text) {
    return guard([&] {
        require(table != nullptr && format != nullptr && text != nullptr, "null argument");
        table->buffer = emit(table->table, parse_table_format(format));
        *text = table->buffer.c_str();
    });
}

pf_status pf_table_summary(pf_table *table, const char **text) {
    return guard([&] {
        require(table != nullptr && text != nullptr, "null argument");
        table->buffer = format_aggregates(aggregate(table->table));
        *text = table->buffer.c_str();
    });
}

}  // extern "C"
