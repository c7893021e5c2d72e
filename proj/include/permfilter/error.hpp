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

#include <stdexcept>
#include <string>
#include <string_view>

namespace permfilter {

/// Failure categories raised by the library. The numeric values are part of
/// the C API (see permfilter.h) and must stay stable.
enum class ErrorCode : int {
    InvalidArgument = 1,
    DimensionMismatch = 2,
    NotHermitian = 3,
    InvalidState = 4,
    NegativeEigenvalue = 5,
    DegenerateSpectrum = 6,
    HypothesisViolated = 7,
    BoundVacuous = 8,
    ShapeAtPole = 9,
    ComplexRoots = 10,
    InfeasibleBeta = 11,
    DegenerateDenominator = 12,
    EmptyTable = 13,
    Io = 14,
    Config = 15,
    Parse = 16,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string &message);

}  // namespace permfilter
