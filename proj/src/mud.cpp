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


#include "permfilter/mud.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "permfilter/error.hpp"
#include "permfilter/rng.hpp"

namespace permfilter {

namespace {

constexpr std::size_t kMaxEnumeratedUsers = 24;

void check_shape(std::size_t users, std::size_t receivers) {
    if (users < 1 || receivers < 1) {
        fail(ErrorCode::InvalidArgument, "detection problem needs at least one user and one receiver");
    }
    if (users > 30) {
        fail(ErrorCode::InvalidArgument, "at most 30 users are supported");
    }
}

std::vector<double> gram(const MudProblem &p) {
    std::vector<double> g(p.users * p.users, 0.0);
    for (std::size_t i = 0; i < p.users; ++i) {
        for (std::size_t j = 0; j < p.users; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < p.receivers; ++r) {
                s += p.h(r, i) * p.h(r, j);
            }
            g[i * p.users + j] = s;
        }
    }
    return g;
}

std::vector<double> matched_filter(const MudProblem &p) {
    std::vector<double> out(p.users, 0.0);
    for (std::size_t i = 0; i < p.users; ++i) {
        for (std::size_t r = 0; r < p.receivers; ++r) {
            out[i] += p.h(r, i) * p.received[r];
        }
    }
    return out;
}

double residual_norm2(const MudProblem &p, const std::vector<int> &x) {
    double s = 0.0;
    for (std::size_t r = 0; r < p.receivers; ++r) {
        double v = p.received[r];
        for (std::size_t i = 0; i < p.users; ++i) {
            v -= p.h(r, i) * x[i];
        }
        s += v * v;
    }
    return s;
}

// Enumerates symbol vectors in lexicographic order with -1 before +1.
template <typename Score>
std::vector<int> best_symbols(const MudProblem &p, Score score) {
    if (p.users > kMaxEnumeratedUsers) {
        fail(ErrorCode::InvalidArgument, "exhaustive search limited to 24 users");
    }
    std::vector<int> best;
    double best_score = -std::numeric_limits<double>::infinity();
    const std::uint64_t count = std::uint64_t{1} << p.users;
    std::vector<int> x(p.users);
    for (std::uint64_t code = 0; code < count; ++code) {
        for (std::size_t i = 0; i < p.users; ++i) {
            x[i] = ((code >> (p.users - 1 - i)) & 1) ? 1 : -1;
        }
        const double s = score(x);
        if (s > best_score) {
            best_score = s;
            best = x;
        }
    }
    return best;
}

}  // namespace

double mud_noise_variance(std::size_t users, std::size_t receivers, double snr_db) {
    check_shape(users, receivers);
    if (!std::isfinite(snr_db)) {
        fail(ErrorCode::InvalidArgument, "SNR must be finite");
    }
    return static_cast<double>(users) / static_cast<double>(receivers) * std::pow(10.0, -snr_db / 10.0);
}

MudProblem build_mud_problem(std::size_t users, std::size_t receivers, double snr_db, std::uint64_t seed) {
    return build_mud_problem_with_variance(users, receivers, mud_noise_variance(users, receivers, snr_db), seed);
}

MudProblem build_mud_problem_with_variance(std::size_t users, std::size_t receivers, double noise_variance,
                                           std::uint64_t seed) {
    check_shape(users, receivers);
    if (!(noise_variance >= 0.0) || !std::isfinite(noise_variance)) {
        fail(ErrorCode::InvalidArgument, "noise variance must be finite and nonnegative");
    }
    MudProblem p;
    p.users = users;
    p.receivers = receivers;
    p.noise_variance = noise_variance;
    Rng channel_rng(derive_seed(seed, "channel"));
    Rng symbol_rng(derive_seed(seed, "symbols"));
    Rng noise_rng(derive_seed(seed, "noise"));
    const double scale = 1.0 / std::sqrt(static_cast<double>(receivers));
    p.channel.resize(users * receivers);
    for (double &h : p.channel) {
        h = scale * channel_rng.normal();
    }
    p.transmitted.resize(users);
    for (int &x : p.transmitted) {
        x = symbol_rng.sign();
    }
    const double sigma = std::sqrt(noise_variance);
    p.received.resize(receivers);
    for (std::size_t r = 0; r < receivers; ++r) {
        double v = 0.0;
        for (std::size_t i = 0; i < users; ++i) {
            v += p.h(r, i) * p.transmitted[i];
        }
        p.received[r] = v + sigma * noise_rng.normal();
    }
    return p;
}

Observable mud_phase_hamiltonian(const MudProblem &p) {
    const std::vector<double> linear = matched_filter(p);
    const std::vector<double> g = gram(p);
    Observable obs(p.users);
    for (std::size_t i = 0; i < p.users; ++i) {
        obs.add(linear[i], PauliString::single(p.users, i, Pauli::Z));
    }
    for (std::size_t i = 0; i < p.users; ++i) {
        for (std::size_t j = i + 1; j < p.users; ++j) {
            obs.add(-g[i * p.users + j], PauliString::pair(p.users, i, Pauli::Z, j, Pauli::Z));
        }
    }
    return obs;
}

double mud_classical_value(const MudProblem &p, const std::vector<int> &symbols) {
    if (symbols.size() != p.users) {
        fail(ErrorCode::DimensionMismatch, "symbol vector length does not match the user count");
    }
    const std::vector<double> linear = matched_filter(p);
    const std::vector<double> g = gram(p);
    double v = 0.0;
    for (std::size_t i = 0; i < p.users; ++i) {
        v += linear[i] * symbols[i];
        for (std::size_t j = i + 1; j < p.users; ++j) {
            v -= g[i * p.users + j] * symbols[i] * symbols[j];
        }
    }
    return v;
}

std::vector<int> mud_ml_solution(const MudProblem &p) {
    return best_symbols(p, [&](const std::vector<int> &x) { return -residual_norm2(p, x); });
}

std::vector<int> mud_hamiltonian_argmax(const MudProblem &p) {
    const std::vector<double> linear = matched_filter(p);
    const std::vector<double> g = gram(p);
    return best_symbols(p, [&](const std::vector<int> &x) {
        double v = 0.0;
        for (std::size_t i = 0; i < p.users; ++i) {
            v += linear[i] * x[i];
            for (std::size_t j = i + 1; j < p.users; ++j) {
                v -= g[i * p.users + j] * x[i] * x[j];
            }
        }
        return v;
    });
}

std::vector<int> symbols_from_index(std::uint64_t index, std::size_t users) {
    std::vector<int> x(users);
    for (std::size_t i = 0; i < users; ++i) {
        // Bit value 0 is the +1 eigenstate of Z.
        x[i] = ((index >> (users - 1 - i)) & 1) ? -1 : 1;
    }
    return x;
}

}  // namespace permfilter
