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
#include <random>
#include <string_view>

namespace permfilter {

/// SplitMix64 finalizer. Used to decorrelate user seeds before they reach
/// the Mersenne Twister and to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for an independent substream identified by a short tag such as
/// "angles" or "channel". Deterministic and platform independent.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) noexcept;

/// Seedable 64-bit generator. The distributions are written out by hand
/// because the standard library leaves their algorithms unspecified, and
/// experiment output must be bit-identical across toolchains.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {
    }

    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal by Box-Muller (one draw per call, no caching).
    double normal();
    /// +1 or -1 with equal probability.
    int sign();

   private:
    std::mt19937_64 engine_;
};

}  // namespace permfilter
