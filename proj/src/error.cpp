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

#include "permfilter/error.hpp"

namespace permfilter {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::NegativeEigenvalue:
            return "NegativeEigenvalue";
        case ErrorCode::DegenerateSpectrum:
            return "DegenerateSpectrum";
        case ErrorCode::HypothesisViolated:
            return "HypothesisViolated";
        case ErrorCode::BoundVacuous:
            return "BoundVacuous";
        case ErrorCode::ShapeAtPole:
            return "ShapeAtPole";
        case ErrorCode::ComplexRoots:
            return "ComplexRoots";
        case ErrorCode::InfeasibleBeta:
            return "InfeasibleBeta";
        case ErrorCode::DegenerateDenominator:
            return "DegenerateDenominator";
        case ErrorCode::EmptyTable:
            return "EmptyTable";
        case ErrorCode::Io:
            return "Io";
        case ErrorCode::Config:
            return "Config";
        case ErrorCode::Parse:
            return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

void fail(ErrorCode code, const std::string &message) {
    throw Error(code, message);
}

}  // namespace permfilter
