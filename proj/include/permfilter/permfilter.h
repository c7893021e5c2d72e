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


/* C interface to the permfilter library. All functions report failures
 * through a pf_status code; pf_last_error() returns the message of the most
 * recent failure on the calling thread. Objects are opaque and released with
 * the matching *_free function, which accepts NULL. */

#ifndef PERMFILTER_PERMFILTER_H
#define PERMFILTER_PERMFILTER_H

#include <stddef.h>
#include <stdint.h>

#if defined(PERMFILTER_BUILDING_LIBRARY)
#define PF_API __attribute__((visibility("default")))
#else
#define PF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
    PF_OK = 0,
    PF_ERR_INVALID_ARGUMENT = 1,
    PF_ERR_DIMENSION_MISMATCH = 2,
    PF_ERR_NOT_HERMITIAN = 3,
    PF_ERR_INVALID_STATE = 4,
    PF_ERR_NEGATIVE_EIGENVALUE = 5,
    PF_ERR_DEGENERATE_SPECTRUM = 6,
    PF_ERR_HYPOTHESIS_VIOLATED = 7,
    PF_ERR_BOUND_VACUOUS = 8,
    PF_ERR_SHAPE_AT_POLE = 9,
    PF_ERR_COMPLEX_ROOTS = 10,
    PF_ERR_INFEASIBLE_BETA = 11,
    PF_ERR_DEGENERATE_DENOMINATOR = 12,
    PF_ERR_EMPTY_TABLE = 13,
    PF_ERR_IO = 14,
    PF_ERR_CONFIG = 15,
    PF_ERR_PARSE = 16,
    PF_ERR_INTERNAL = 100
} pf_status;

typedef struct pf_state pf_state;
typedef struct pf_filter pf_filter;
typedef struct pf_config pf_config;
typedef struct pf_table pf_table;

typedef struct pf_spectrum {
    double lambda1;
    double mu;
    double bandwidth;
    double rel_bandwidth;
} pf_spectrum;

typedef struct pf_pareto {
    double shape;
    double scale;
    double mean_estimate;
    double lambda1_estimate;
    int clamped; /* 1 when the fit hit the shape cap */
} pf_pareto;

/* Borrowed view of one result row; strings live as long as the table. */
typedef struct pf_row {
    const char *experiment;
    const char *point_params;
    uint64_t seed;
    const char *method;
    const char *metric;
    double value;
} pf_row;

PF_API const char *pf_version(void);
PF_API const char *pf_status_name(pf_status status);
/* Message of the last failure on this thread, "" if none. */
PF_API const char *pf_last_error(void);

/* ---- states ---------------------------------------------------------- */

/* Row-major dim x dim complex matrix as interleaved (re, im) pairs. */
PF_API pf_status pf_state_from_matrix(const double *re_im, size_t dim, pf_state **out);
PF_API pf_status pf_state_from_diagonal(const double *probabilities, size_t dim, pf_state **out);
/* Noisy random-stage circuit applied to |0...0>. */
PF_API pf_status pf_state_simulate_stages(size_t num_qubits, size_t stages, uint64_t seed, double p1, double p2,
                                          pf_state **out);
PF_API void pf_state_free(pf_state *state);
PF_API size_t pf_state_dim(const pf_state *state);
/* Descending eigenvalues; *count receives the dimension. */
PF_API pf_status pf_state_eigenvalues(const pf_state *state, double *out, size_t capacity, size_t *count);
PF_API pf_status pf_state_spectrum(const pf_state *state, pf_spectrum *out);
PF_API pf_status pf_state_fit_pareto(const pf_state *state, size_t order, pf_pareto *out);

/* ---- filters --------------------------------------------------------- */

PF_API pf_status pf_filter_from_zeros(const double *zeros, size_t count, pf_filter **out);
PF_API pf_status pf_filter_from_coefficients(const double *coefficients, size_t count, pf_filter **out);
PF_API pf_status pf_filter_vd(size_t order, pf_filter **out);
PF_API pf_status pf_filter_type1(double mean, size_t order, pf_filter **out);
/* objective may be NULL. */
PF_API pf_status pf_filter_type2(double shape, double scale, size_t order, pf_filter **out, double *objective);
PF_API pf_status pf_filter_closed_form(double shape, double scale, pf_filter **out);
PF_API pf_status pf_filter_oracle(const pf_state *state, size_t order, pf_filter **out);
PF_API void pf_filter_free(pf_filter *filter);
PF_API size_t pf_filter_order(const pf_filter *filter);
PF_API pf_status pf_filter_zeros(const pf_filter *filter, double *out, size_t capacity, size_t *count);
PF_API pf_status pf_filter_coefficients(const pf_filter *filter, double *out, size_t capacity, size_t *count);
PF_API pf_status pf_filter_response(const pf_filter *filter, double lambda, double *out);
PF_API pf_status pf_epsilon_tilde(const pf_filter *filter, double shape, double scale, double *out);

/* ---- mitigation ------------------------------------------------------ */
/* Observables are given as parallel arrays of Pauli strings ("XIZ") and
 * real weights. */

PF_API pf_status pf_vd_output(const pf_state *state, const char *const *paulis, const double *weights,
                              size_t num_terms, size_t order, double *out);
PF_API pf_status pf_filter_output(const pf_state *state, const char *const *paulis, const double *weights,
                                  size_t num_terms, const pf_filter *filter, double *out);
PF_API pf_status pf_empirical_metric(const pf_state *state, const pf_filter *filter, double *out);
PF_API pf_status pf_filter_variance(const pf_state *state, const char *pauli, const pf_filter *filter, double *out);
PF_API pf_status pf_sampling_overhead(const pf_state *state, const char *const *paulis, const double *weights,
                                      size_t num_terms, const pf_filter *filter, double *out);

/* ---- experiments ----------------------------------------------------- */

PF_API pf_status pf_config_parse(const char *json, pf_config **out);
PF_API pf_status pf_config_load(const char *path, pf_config **out);
PF_API void pf_config_free(pf_config *config);
PF_API pf_status pf_config_set_seed(pf_config *config, uint64_t seed);
PF_API pf_status pf_config_set_threads(pf_config *config, size_t threads);
PF_API pf_status pf_config_set_output(pf_config *config, const char *path);
/* "csv" or "json". */
PF_API pf_status pf_config_set_format(pf_config *config, const char *format);
/* Borrowed; "" when unset. */
PF_API const char *pf_config_output(const pf_config *config);
PF_API const char *pf_config_format(const pf_config *config);

PF_API pf_status pf_run_experiment(const pf_config *config, pf_table **out);
PF_API void pf_table_free(pf_table *table);
PF_API size_t pf_table_row_count(const pf_table *table);
PF_API size_t pf_table_error_count(const pf_table *table);
PF_API pf_status pf_table_row(const pf_table *table, size_t index, pf_row *out);
PF_API pf_status pf_table_write(const pf_table *table, const char *path, const char *format);
/* Serialized table in a buffer owned by the table, valid until the next
 * call on it. */
PF_API pf_status pf_table_emit(pf_table *table, const char *format, const char **text);
/* Median/mean listing; same ownership as pf_table_emit. */
PF_API pf_status pf_table_summary(pf_table *table, const char **text);

#ifdef __cplusplus
}
#endif

#endif /* PERMFILTER_PERMFILTER_H */
