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


#include "permfilter/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "permfilter/circuit.hpp"
#include "permfilter/error.hpp"
#include "permfilter/filter.hpp"
#include "permfilter/mitigation.hpp"
#include "permfilter/mud.hpp"
#include "permfilter/spectral.hpp"
#include "permfilter/state.hpp"

namespace permfilter {

namespace {

constexpr std::size_t kMaxQubits = 10;
constexpr std::size_t kMaxOrder = 8;
constexpr std::size_t kMaxMudUsers = 10;

struct Point {
    std::size_t stages = 0;
    double p2 = 0.0;
    double expected_errors = 0.0;
    bool calibrated = false;  // p2 derived from expected_errors
    std::string params;
};

bool uses_error_grid(ExperimentKind kind) {
    return kind == ExperimentKind::fixed_expected_errors || kind == ExperimentKind::qaoa_mud;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<Point> build_grid(const ExperimentConfig &cfg) {
    const std::size_t nq = cfg.experiment == ExperimentKind::qaoa_mud ? cfg.mud.users : cfg.num_qubits;
    std::vector<Point> grid;
    for (std::size_t stages : cfg.stages) {
        if (uses_error_grid(cfg.experiment)) {
            for (double e : cfg.expected_errors) {
                Point p;
                p.stages = stages;
                p.expected_errors = e;
                p.calibrated = true;
                p.params = "nq=" + std::to_string(nq) + ";stages=" + std::to_string(stages) + ";E=" + fmt(e);
                grid.push_back(std::move(p));
            }
        } else {
            for (double p2 : cfg.p2) {
                Point p;
                p.stages = stages;
                p.p2 = p2;
                p.params = "nq=" + std::to_string(nq) + ";stages=" + std::to_string(stages) + ";p2=" + fmt(p2);
                grid.push_back(std::move(p));
            }
        }
    }
    return grid;
}

/// Collects the rows of one instance.
class RowSink {
   public:
    RowSink(std::string_view experiment, const std::string &params, std::uint64_t seed)
        : experiment_(experiment), params_(params), seed_(seed) {
    }

    void add(const std::string &method, const std::string &metric, double value) {
        rows_.push_back(ResultRow{experiment_, params_, seed_, method, metric, value});
    }

    /// Runs body; a library failure becomes one error row for `method`.
    /// Returns false when body threw.
    bool guarded(const std::string &method, const std::function<void()> &body) {
        try {
            body();
            return true;
        } catch (const Error &e) {
            add(method, "error:" + std::string(error_code_name(e.code())), static_cast<double>(e.code()));
        } catch (const std::exception &) {
            add(method, "error:Internal", std::nan(""));
        }
        return false;
    }

    /// Adds a bound that is allowed to be inapplicable; those are skipped.
    void add_bound(const std::string &method, const std::string &metric, const std::function<double()> &eval) {
        try {
            add(method, metric, eval());
        } catch (const Error &e) {
            if (e.code() != ErrorCode::HypothesisViolated && e.code() != ErrorCode::BoundVacuous) {
                throw;
            }
        }
    }

    std::vector<ResultRow> take() {
        return std::move(rows_);
    }

   private:
    std::string experiment_;
    std::string params_;
    std::uint64_t seed_;
    std::vector<ResultRow> rows_;
};

struct Design {
    std::string method;
    FilterSpec filter;
};

std::string tagged(const char *name, std::size_t order) {
    return std::string(name) + "(" + std::to_string(order) + ")";
}

double noise_mean_estimate(const MomentVector &m) {
    const double lambda1 = estimate_lambda1(m);
    return (1.0 - lambda1) / static_cast<double>((std::size_t{1} << m.num_qubits) - 1);
}

// Designs available at one order. Moments are limited to that order, as a
// hardware run of the order-N circuit would provide. Order 2 cannot identify
// the Pareto model, so every model-free design falls back to the mean.
std::vector<Design> design_filters(const DensityMatrix &rho, const SpectrumSummary &spectrum, std::size_t order,
                                   RowSink &sink) {
    std::vector<Design> out;
    out.push_back(Design{tagged("vd", order), FilterSpec::vd(order)});
    const MomentVector moments = moments_from_state(rho, order);
    if (order == 2) {
        sink.guarded(tagged("type1", 2), [&] {
            out.push_back(Design{tagged("type1", 2), design_type1(noise_mean_estimate(moments), 2)});
        });
        sink.guarded(tagged("closed_form", 2), [&] {
            out.push_back(
                Design{tagged("closed_form", 2), closed_form_second_order_from_mean(noise_mean_estimate(moments))});
        });
    } else {
        std::optional<ParetoFit> fit;
        sink.guarded(tagged("type1", order), [&] {
            fit = fit_pareto(moments);
            out.push_back(Design{tagged("type1", order), design_type1(fit->mean_estimate, order)});
        });
        if (fit) {
            sink.guarded(tagged("type2", order), [&] {
                out.push_back(Design{tagged("type2", order), design_type2(fit->model, order).filter});
            });
        }
    }
    sink.guarded(tagged("oracle", order), [&] {
        out.push_back(Design{tagged("oracle", order), design_oracle_optimal(spectrum, order)});
    });
    return out;
}

void add_zeros(RowSink &sink, const Design &d) {
    const auto zeros = d.filter.zeros();
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        sink.add(d.method, "zero_" + std::to_string(i), zeros[i]);
    }
}

void add_design_metrics(RowSink &sink, const Design &d, const SpectrumSummary &spectrum,
                        const std::optional<ParetoModel> &reference) {
    sink.guarded(d.method, [&] {
        const double vd_metric = empirical_design_metric(spectrum, FilterSpec::vd(d.filter.order()));
        const double metric = empirical_design_metric(spectrum, d.filter);
        sink.add(d.method, "eps_tilde_empirical", metric);
        if (vd_metric > 0.0 && spectrum.mu >= kPureMeanThreshold) {
            sink.add(d.method, "ratio_empirical", metric / vd_metric);
        }
        sink.add(d.method, "dominant_response", d.filter.response(spectrum.lambda1));
    });
    if (reference) {
        sink.guarded(d.method, [&] {
            const double value = epsilon_tilde(d.filter.zeros(), *reference);
            const double ratio = error_ratio(*reference, d.filter);
            sink.add(d.method, "eps_tilde_model", value);
            sink.add(d.method, "ratio_model", ratio);
        });
    }
}

void add_spectrum_rows(RowSink &sink, const SpectrumSummary &s) {
    sink.add("spectrum", "lambda1", s.lambda1);
    sink.add("spectrum", "mu", s.mu);
    sink.add("spectrum", "bandwidth", s.bandwidth);
    sink.add("spectrum", "rel_bandwidth", s.rel_bandwidth);
}

// Reference Pareto model from the highest order in the config (at least 3),
// used to score every design on the same model objective.
std::optional<ParetoModel> reference_fit(const DensityMatrix &rho, std::size_t max_order, RowSink &sink) {
    std::optional<ParetoModel> model;
    sink.guarded("spectrum", [&] {
        const ParetoFit fit = fit_pareto(moments_from_state(rho, std::max<std::size_t>(3, max_order)));
        sink.add("spectrum", "pareto_shape", fit.model.shape);
        sink.add("spectrum", "pareto_scale", fit.model.scale);
        sink.add("spectrum", "fit_clamped", fit.status == FitStatus::narrow_clamped ? 1.0 : 0.0);
        sink.add("spectrum", "lambda1_estimate", fit.lambda1_estimate);
        sink.add("spectrum", "mean_estimate", fit.mean_estimate);
        model = fit.model;
    });
    return model;
}

Observable default_observable(std::size_t nq) {
    Observable obs(nq);
    for (std::size_t q = 0; q < nq; ++q) {
        obs.add(1.0, PauliString::single(nq, q, Pauli::Z));
    }
    return obs;
}

struct Simulation {
    DensityMatrix noisy = DensityMatrix::maximally_mixed(1);
    double ideal_value = 0.0;  // identity-free observable on the noiseless state
};

void run_stage_instance(const ExperimentConfig &cfg, const Point &point, std::uint64_t seed, const Observable &obs,
                        RowSink &sink) {
    const double p2 = point.calibrated ? calibrate_p2_for(point.expected_errors, cfg.num_qubits, point.stages,
                                                          cfg.p1_ratio)
                                       : point.p2;
    const NoiseModel noise{cfg.p1_ratio * p2, p2};
    const CircuitSpec circuit = build_stage_circuit(cfg.num_qubits, point.stages, seed, noise);
    const DensityMatrix rho = run_noisy(circuit);
    sink.add("circuit", "p1", noise.p1);
    sink.add("circuit", "p2", noise.p2);
    sink.add("circuit", "expected_errors", expected_errors(circuit));
    sink.add("circuit", "state_valid", rho.validity().ok(1e-9) ? 1.0 : 0.0);

    const SpectralDecomposition decomp(rho);
    const SpectrumSummary spectrum = decomp.summary();
    add_spectrum_rows(sink, spectrum);
    const std::size_t max_order = *std::max_element(cfg.orders.begin(), cfg.orders.end());
    const std::optional<ParetoModel> reference = reference_fit(rho, max_order, sink);

    if (cfg.experiment == ExperimentKind::spectra) {
        for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
            sink.add("spectrum", "eigenvalue_" + std::to_string(i), spectrum.eigenvalues[i]);
        }
        sink.add_bound("spectrum", "prop4_bound", [&] {
            return prop4_bound(noise.p1 / 3.0, static_cast<double>(point.stages), cfg.num_qubits);
        });
        return;
    }
    if (cfg.experiment == ExperimentKind::ratio_vs_bandwidth) {
        if (spectrum.rel_bandwidth > 0.0) {
            sink.add("spectrum", "inverse_rel_bandwidth", 1.0 / spectrum.rel_bandwidth);
        }
        sink.add_bound("spectrum", "prop4_bound", [&] {
            return prop4_bound(noise.p1 / 3.0, static_cast<double>(point.stages), cfg.num_qubits);
        });
        for (std::size_t order : cfg.orders) {
            sink.add_bound("bounds", tagged("prop3_bound", order),
                           [&] { return prop3_bound(spectrum.rel_bandwidth, order); });
            sink.add_bound("bounds", tagged("prop2_bound", order), [&] {
                return prop2_bound(spectrum.mu, spectrum.rel_bandwidth, cfg.num_qubits, order);
            });
        }
    }

    const bool with_observable = cfg.experiment == ExperimentKind::fixed_expected_errors;
    double ideal_value = 0.0;
    Observable traceless = obs.without_identity();
    if (with_observable) {
        const DensityMatrix ideal = DensityMatrix::from_pure(run_statevector(circuit));
        ideal_value = expectation(ideal, traceless);
        sink.add("circuit", "ideal_value", ideal_value);
        sink.guarded("raw", [&] {
            const ErrorReport r = estimation_error(decomp, ideal_value, traceless, FilterSpec::vd(1));
            sink.add("raw", "value", r.value);
            sink.add("raw", "eps_u", r.eps_u);
        });
    }
    for (std::size_t order : cfg.orders) {
        for (const Design &d : design_filters(rho, spectrum, order, sink)) {
            add_zeros(sink, d);
            add_design_metrics(sink, d, spectrum, reference);
            if (with_observable) {
                sink.guarded(d.method, [&] {
                    const ErrorReport r = estimation_error(decomp, ideal_value, traceless, d.filter);
                    sink.add(d.method, "value", r.value);
                    sink.add(d.method, "eps_u", r.eps_u);
                });
                sink.guarded(d.method, [&] {
                    sink.add(d.method, "overhead_factor", sampling_overhead_factor(decomp, traceless, d.filter));
                });
            }
        }
    }
}

void run_mud_instance(const ExperimentConfig &cfg, const Point &point, std::uint64_t seed, RowSink &sink) {
    const MudProblem problem = build_mud_problem(cfg.mud.users, cfg.mud.receivers, cfg.mud.snr_db, seed);
    const Observable hamiltonian = mud_phase_hamiltonian(problem);
    const Observable traceless = hamiltonian.without_identity();
    CircuitSpec circuit = build_qaoa_circuit(hamiltonian, linear_schedule(point.stages));
    const double p2 = calibrate_p2_for(point.expected_errors, circuit, cfg.p1_ratio);
    circuit.noise = NoiseModel{cfg.p1_ratio * p2, p2};
    sink.add("circuit", "p1", circuit.noise.p1);
    sink.add("circuit", "p2", circuit.noise.p2);
    sink.add("circuit", "expected_errors", expected_errors(circuit));
    sink.add("problem", "ml_matches_argmax", mud_ml_solution(problem) == mud_hamiltonian_argmax(problem) ? 1.0 : 0.0);

    const DensityMatrix rho = run_noisy(circuit);
    sink.add("circuit", "state_valid", rho.validity().ok(1e-9) ? 1.0 : 0.0);
    const DensityMatrix ideal = DensityMatrix::from_pure(run_statevector(circuit));
    const double ideal_value = expectation(ideal, traceless);
    sink.add("circuit", "ideal_value", ideal_value);

    const SpectralDecomposition decomp(rho);
    const SpectrumSummary spectrum = decomp.summary();
    add_spectrum_rows(sink, spectrum);
    const std::size_t max_order = *std::max_element(cfg.orders.begin(), cfg.orders.end());
    const std::optional<ParetoModel> reference = reference_fit(rho, max_order, sink);

    auto evaluate = [&](const std::string &method, const FilterSpec &filter) {
        sink.guarded(method, [&] {
            const ErrorReport r = estimation_error(decomp, ideal_value, traceless, filter);
            sink.add(method, "value", r.value);
            sink.add(method, "eps_u", r.eps_u);
        });
        sink.guarded(method, [&] {
            sink.add(method, "overhead_factor", sampling_overhead_factor(decomp, traceless, filter));
        });
    };
    evaluate("raw", FilterSpec::vd(1));
    for (std::size_t order : cfg.orders) {
        for (const Design &d : design_filters(rho, spectrum, order, sink)) {
            add_zeros(sink, d);
            add_design_metrics(sink, d, spectrum, reference);
            evaluate(d.method, d.filter);
        }
    }
}

std::vector<ResultRow> run_instance(const ExperimentConfig &cfg, const Point &point, std::uint64_t seed,
                                    const Observable &obs) {
    RowSink sink(experiment_name(cfg.experiment), point.params, seed);
    sink.guarded("instance", [&] {
        if (cfg.experiment == ExperimentKind::qaoa_mud) {
            run_mud_instance(cfg, point, seed, sink);
        } else {
            run_stage_instance(cfg, point, seed, obs, sink);
        }
    });
    return sink.take();
}

// Calls body(i) for i in [0, count) on up to `threads` workers. Results are
// written to per-index slots by the caller, so the output order never
// depends on scheduling.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)> &body) {
    const std::size_t workers = std::min(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                body(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

template <typename T>
std::vector<T> read_list(const nlohmann::json &doc, const char *key) {
    if (!doc.contains(key)) {
        return {};
    }
    const auto &v = doc.at(key);
    if (v.is_array()) {
        return v.get<std::vector<T>>();
    }
    return {v.get<T>()};
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::spectra:
            return "spectra";
        case ExperimentKind::metric_vs_stages:
            return "metric-vs-stages";
        case ExperimentKind::metric_vs_p:
            return "metric-vs-p";
        case ExperimentKind::ratio_vs_bandwidth:
            return "ratio-vs-bandwidth";
        case ExperimentKind::fixed_expected_errors:
            return "fixed-expected-errors";
        case ExperimentKind::qaoa_mud:
            return "qaoa-mud";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (ExperimentKind k :
         {ExperimentKind::spectra, ExperimentKind::metric_vs_stages, ExperimentKind::metric_vs_p,
          ExperimentKind::ratio_vs_bandwidth, ExperimentKind::fixed_expected_errors, ExperimentKind::qaoa_mud}) {
        if (experiment_name(k) == name) {
            return k;
        }
    }
    fail(ErrorCode::Config, "unknown experiment '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    auto bad = [](const std::string &msg) { fail(ErrorCode::Config, msg); };
    if (stages.empty()) {
        bad("stage grid is empty");
    }
    for (std::size_t s : stages) {
        if (s == 0) {
            bad("stage counts must be >= 1");
        }
    }
    if (uses_error_grid(experiment)) {
        if (expected_errors.empty()) {
            bad("expected_errors grid is empty");
        }
        for (double e : expected_errors) {
            if (!(e >= 0.0) || !std::isfinite(e)) {
                bad("expected_errors values must be finite and >= 0");
            }
        }
    } else {
        if (p2.empty()) {
            bad("p2 grid is empty");
        }
        for (double p : p2) {
            if (!(p >= 0.0 && p <= 1.0)) {
                bad("p2 values must lie in [0, 1]");
            }
        }
    }
    if (!(p1_ratio >= 0.0) || !std::isfinite(p1_ratio)) {
        bad("p1_ratio must be finite and >= 0");
    }
    if (orders.empty()) {
        bad("filter order list is empty");
    }
    for (std::size_t n : orders) {
        if (n < 2 || n > kMaxOrder) {
            bad("filter orders must lie in [2, " + std::to_string(kMaxOrder) + "]");
        }
    }
    if (num_instances == 0) {
        bad("num_instances must be >= 1");
    }
    if (threads == 0) {
        bad("threads must be >= 1");
    }
    if (experiment == ExperimentKind::qaoa_mud) {
        if (mud.users == 0 || mud.users > kMaxMudUsers || mud.receivers == 0) {
            bad("MUD needs 1 <= users <= " + std::to_string(kMaxMudUsers) + " and receivers >= 1");
        }
        if (!std::isfinite(mud.snr_db)) {
            bad("snr_db must be finite");
        }
    } else {
        if (num_qubits == 0 || num_qubits > kMaxQubits) {
            bad("num_qubits must lie in [1, " + std::to_string(kMaxQubits) + "]");
        }
        for (const auto &t : observable) {
            if (t.string.num_qubits() != num_qubits) {
                bad("observable term " + t.string.to_string() + " does not act on num_qubits qubits");
            }
        }
    }
}

ExperimentConfig parse_config(std::string_view json_text) {
    static const std::set<std::string> kKeys = {"experiment", "num_qubits", "stages",     "p2",
                                                "p1_ratio",   "orders",     "expected_errors",
                                                "num_instances", "seed",    "mud",        "observable",
                                                "threads",    "output",     "format"};
    ExperimentConfig cfg;
    try {
        const nlohmann::json doc = nlohmann::json::parse(json_text);
        if (!doc.is_object()) {
            fail(ErrorCode::Config, "configuration must be a JSON object");
        }
        for (const auto &item : doc.items()) {
            if (!kKeys.count(item.key())) {
                fail(ErrorCode::Config, "unknown configuration key '" + item.key() + "'");
            }
        }
        if (!doc.contains("experiment")) {
            fail(ErrorCode::Config, "missing 'experiment'");
        }
        cfg.experiment = parse_experiment_kind(doc.at("experiment").get<std::string>());
        cfg.num_qubits = doc.value("num_qubits", cfg.num_qubits);
        cfg.stages = read_list<std::size_t>(doc, "stages");
        cfg.p2 = read_list<double>(doc, "p2");
        cfg.p1_ratio = doc.value("p1_ratio", cfg.p1_ratio);
        if (doc.contains("orders")) {
            cfg.orders = read_list<std::size_t>(doc, "orders");
        }
        cfg.expected_errors = read_list<double>(doc, "expected_errors");
        cfg.num_instances = doc.value("num_instances", cfg.num_instances);
        cfg.seed = doc.value("seed", cfg.seed);
        cfg.threads = doc.value("threads", cfg.threads);
        cfg.output = doc.value("output", cfg.output);
        if (doc.contains("format")) {
            cfg.format = parse_table_format(doc.at("format").get<std::string>());
        }
        if (doc.contains("mud")) {
            const auto &m = doc.at("mud");
            for (const auto &item : m.items()) {
                if (item.key() != "users" && item.key() != "receivers" && item.key() != "snr_db") {
                    fail(ErrorCode::Config, "unknown mud key '" + item.key() + "'");
                }
            }
            cfg.mud.users = m.value("users", cfg.mud.users);
            cfg.mud.receivers = m.value("receivers", cfg.mud.receivers);
            cfg.mud.snr_db = m.value("snr_db", cfg.mud.snr_db);
        }
        if (doc.contains("observable")) {
            for (const auto &t : doc.at("observable")) {
                cfg.observable.push_back(
                    PauliTerm{t.at("weight").get<double>(), PauliString::parse(t.at("pauli").get<std::string>())});
            }
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::Config, std::string("invalid configuration: ") + e.what());
    } catch (const Error &e) {
        if (e.code() == ErrorCode::Config) {
            throw;
        }
        fail(ErrorCode::Config, e.what());
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::Io, "cannot open configuration '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

ResultTable run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    const Observable obs = cfg.experiment == ExperimentKind::qaoa_mud || cfg.observable.empty()
                               ? default_observable(cfg.experiment == ExperimentKind::qaoa_mud ? 1 : cfg.num_qubits)
                               : Observable(cfg.observable);
    ResultTable table;
    for (const Point &point : build_grid(cfg)) {
        std::vector<std::vector<ResultRow>> slots(cfg.num_instances);
        parallel_for(cfg.num_instances, cfg.threads,
                     [&](std::size_t i) { slots[i] = run_instance(cfg, point, cfg.seed + i, obs); });
        for (auto &rows : slots) {
            std::move(rows.begin(), rows.end(), std::back_inserter(table.rows));
        }
    }
    return table;
}

}  // namespace permfilter
