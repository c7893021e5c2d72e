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

#include "permfilter/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "permfilter/error.hpp"

namespace permfilter {

namespace {

constexpr std::size_t kMaxQubits = 30;

ComplexMatrix single_qubit_matrix(Pauli p) {
    using namespace std::complex_literals;
    switch (p) {
        case Pauli::I:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, 1.0});
        case Pauli::X:
            return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case Pauli::Y:
            return ComplexMatrix(2, {0.0, -1.0i, 1.0i, 0.0});
        case Pauli::Z:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
    }
    return ComplexMatrix(2);
}

}  // namespace

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    const std::size_t n = letters_.size();
    if (n == 0) {
        fail(ErrorCode::InvalidArgument, "Pauli string needs at least one qubit");
    }
    if (n > kMaxQubits) {
        fail(ErrorCode::InvalidArgument, "Pauli string longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    std::size_t num_y = 0;
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        switch (letters_[q]) {
            case Pauli::I:
                break;
            case Pauli::X:
                flip_mask_ |= bit;
                break;
            case Pauli::Y:
                flip_mask_ |= bit;
                sign_mask_ |= bit;
                ++num_y;
                break;
            case Pauli::Z:
                sign_mask_ |= bit;
                break;
        }
    }
    static const Complex kPowers[4] = {1.0, Complex(0.0, 1.0), -1.0, Complex(0.0, -1.0)};
    y_phase_ = kPowers[num_y % 4];
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'I':
                letters.push_back(Pauli::I);
                break;
            case 'X':
                letters.push_back(Pauli::X);
                break;
            case 'Y':
                letters.push_back(Pauli::Y);
                break;
            case 'Z':
                letters.push_back(Pauli::Z);
                break;
            default:
                fail(ErrorCode::InvalidArgument, "unexpected Pauli letter '" + std::string(1, ch) + "'");
        }
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::identity(std::size_t num_qubits) {
    return PauliString(std::vector<Pauli>(num_qubits, Pauli::I));
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        fail(ErrorCode::InvalidArgument, "qubit index out of range");
    }
    std::vector<Pauli> letters(num_qubits, Pauli::I);
    letters[qubit] = p;
    return PauliString(std::move(letters));
}

PauliString PauliString::pair(std::size_t num_qubits, std::size_t q0, Pauli p0, std::size_t q1, Pauli p1) {
    if (q0 >= num_qubits || q1 >= num_qubits || q0 == q1) {
        fail(ErrorCode::InvalidArgument, "pair qubit indices must be distinct and in range");
    }
    std::vector<Pauli> letters(num_qubits, Pauli::I);
    letters[q0] = p0;
    letters[q1] = p1;
    return PauliString(std::move(letters));
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::string PauliString::to_string() const {
    std::string out;
    out.reserve(letters_.size());
    for (Pauli p : letters_) {
        out.push_back("IXYZ"[static_cast<int>(p)]);
    }
    return out;
}

Complex PauliString::phase(std::uint64_t basis_index) const noexcept {
    const bool negative = (std::popcount(basis_index & sign_mask_) & 1) != 0;
    return negative ? -y_phase_ : y_phase_;
}

ComplexMatrix pauli_matrix(const PauliString &s) {
    ComplexMatrix out = single_qubit_matrix(s[0]);
    for (std::size_t q = 1; q < s.num_qubits(); ++q) {
        out = kron(out, single_qubit_matrix(s[q]));
    }
    return out;
}

Observable::Observable(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        fail(ErrorCode::InvalidArgument, "observable needs at least one qubit");
    }
}

Observable::Observable(std::vector<PauliTerm> terms) : num_qubits_(0), terms_() {
    if (terms.empty()) {
        fail(ErrorCode::InvalidArgument, "observable term list is empty");
    }
    num_qubits_ = terms.front().string.num_qubits();
    for (auto &t : terms) {
        add(t.weight, std::move(t.string));
    }
}

Observable Observable::from_string(std::string_view letters) {
    PauliString s = PauliString::parse(letters);
    Observable obs(s.num_qubits());
    obs.add(1.0, std::move(s));
    return obs;
}

Observable &Observable::add(double weight, PauliString string) {
    if (string.num_qubits() != num_qubits_) {
        fail(ErrorCode::DimensionMismatch, "Pauli string has " + std::to_string(string.num_qubits()) +
                                               " qubits, observable has " + std::to_string(num_qubits_));
    }
    if (!std::isfinite(weight)) {
        fail(ErrorCode::InvalidArgument, "observable weights must be finite");
    }
    terms_.push_back(PauliTerm{weight, std::move(string)});
    return *this;
}

Observable Observable::without_identity() const {
    Observable out(num_qubits_);
    for (const auto &t : terms_) {
        if (!t.string.is_identity()) {
            out.add(t.weight, t.string);
        }
    }
    return out;
}

double Observable::identity_weight() const {
    double w = 0.0;
    for (const auto &t : terms_) {
        if (t.string.is_identity()) {
            w += t.weight;
        }
    }
    return w;
}

ComplexMatrix Observable::matrix() const {
    const std::size_t dim = std::size_t{1} << num_qubits_;
    ComplexMatrix out(dim);
    for (const auto &t : terms_) {
        for (std::uint64_t x = 0; x < dim; ++x) {
            out(x ^ t.string.flip_mask(), x) += t.weight * t.string.phase(x);
        }
    }
    return out;
}

Complex trace_with_pauli(const ComplexMatrix &rho, const PauliString &s) {
    const std::size_t dim = std::size_t{1} << s.num_qubits();
    if (rho.dim() != dim) {
        fail(ErrorCode::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                               " does not match a " + std::to_string(s.num_qubits()) +
                                               "-qubit Pauli string");
    }
    // Tr{rho S} = sum_x rho(x, x ^ m) omega(x).
    Complex acc = 0.0;
    const std::uint64_t m = s.flip_mask();
    for (std::uint64_t x = 0; x < dim; ++x) {
        acc += rho(x, x ^ m) * s.phase(x);
    }
    return acc;
}

double pauli_expectation_in_column(const ComplexMatrix &vectors, std::size_t column, const PauliString &s) {
    const std::size_t dim = std::size_t{1} << s.num_qubits();
    if (vectors.dim() != dim) {
        fail(ErrorCode::DimensionMismatch, "eigenvector dimension does not match the Pauli string");
    }
    // <psi|S|psi> = sum_x conj(psi(x ^ m)) omega(x) psi(x).
    Complex acc = 0.0;
    const std::uint64_t m = s.flip_mask();
    for (std::uint64_t x = 0; x < dim; ++x) {
        acc += std::conj(vectors(x ^ m, column)) * s.phase(x) * vectors(x, column);
    }
    return acc.real();
}

}  // namespace permfilter
