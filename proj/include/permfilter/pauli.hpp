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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permfilter/linalg.hpp"

namespace permfilter {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis. Qubit 0 is the leftmost Kronecker
/// factor, i.e. the most significant bit of a basis-state index.
class PauliString {
   public:
    explicit PauliString(std::vector<Pauli> letters);

    /// Parses letters such as "XIZ". Throws InvalidArgument on other characters.
    static PauliString parse(std::string_view text);
    static PauliString identity(std::size_t num_qubits);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, Pauli p);
    static PauliString pair(std::size_t num_qubits, std::size_t q0, Pauli p0, std::size_t q1, Pauli p1);

    std::size_t num_qubits() const noexcept {
        return letters_.size();
    }
    Pauli operator[](std::size_t qubit) const {
        return letters_.at(qubit);
    }
    std::span<const Pauli> letters() const noexcept {
        return letters_;
    }
    /// Count of non-identity letters.
    std::size_t weight() const noexcept;
    bool is_identity() const noexcept {
        return weight() == 0;
    }
    std::string to_string() const;

    // Basis action: P|x> = omega(x) |x ^ flip_mask()> with
    // omega(x) = i^{#Y} (-1)^{popcount(x & sign_mask())}.
    std::uint64_t flip_mask() const noexcept {
        return flip_mask_;
    }
    std::uint64_t sign_mask() const noexcept {
        return sign_mask_;
    }
    Complex phase(std::uint64_t basis_index) const noexcept;

    friend bool operator==(const PauliString &a, const PauliString &b) {
        return a.letters_ == b.letters_;
    }

   private:
    std::vector<Pauli> letters_;
    std::uint64_t flip_mask_ = 0;
    std::uint64_t sign_mask_ = 0;
    Complex y_phase_ = 1.0;
};

/// Dense 2^Nq x 2^Nq matrix of the string.
ComplexMatrix pauli_matrix(const PauliString &s);

struct PauliTerm {
    double weight;
    PauliString string;
};

/// Real-weighted sum of Pauli strings sharing one qubit count.
class Observable {
   public:
    explicit Observable(std::size_t num_qubits);
    explicit Observable(std::vector<PauliTerm> terms);

    /// Single-term convenience, weight 1.
    static Observable from_string(std::string_view letters);

    Observable &add(double weight, PauliString string);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::span<const PauliTerm> terms() const noexcept {
        return terms_;
    }
    /// Copy with every all-identity term dropped.
    Observable without_identity() const;
    /// Sum of the all-identity weights.
    double identity_weight() const;
    ComplexMatrix matrix() const;

   private:
    std::size_t num_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Tr{rho S} for a dense rho using the sparse basis action of S.
Complex trace_with_pauli(const ComplexMatrix &rho, const PauliString &s);

/// <psi|S|psi> where psi is column `column` of `vectors`.
double pauli_expectation_in_column(const ComplexMatrix &vectors, std::size_t column, const PauliString &s);

}  // namespace permfilter
