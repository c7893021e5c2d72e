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

#include "permfilter/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "permfilter/error.hpp"

namespace permfilter {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        fail(ErrorCode::DimensionMismatch,
             "matrix of dimension " + std::to_string(dim_) + " needs " + std::to_string(dim_ * dim_) +
                 " entries, got " + std::to_string(entries_.size()));
    }
    if (!all_finite()) {
        fail(ErrorCode::InvalidArgument, "matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
    ComplexMatrix m(ket.size());
    for (std::size_t r = 0; r < ket.size(); ++r) {
        for (std::size_t c = 0; c < ket.size(); ++c) {
            m(r, c) = ket[r] * std::conj(ket[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        fail(ErrorCode::DimensionMismatch, "matrix sum of mismatched dimensions");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (other.dim_ != dim_) {
        fail(ErrorCode::DimensionMismatch, "matrix difference of mismatched dimensions");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::DimensionMismatch, "matrix product of mismatched dimensions");
    }
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            const Complex s = a(ra, ca);
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        fail(ErrorCode::DimensionMismatch, "comparison of mismatched dimensions");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is the product
// of a phase on column q (making a(p, q) real) and a real Givens rotation.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / r;  // e^{-i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex upp = c;
    const Complex upq = s;
    const Complex uqp = -s * phase;
    const Complex uqq = c * phase;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }
}

}  // namespace

EigenSystem hermitian_eigs(const ComplexMatrix &m) {
    return hermitian_eigs(m, JacobiOptions{});
}

EigenSystem hermitian_eigs(const ComplexMatrix &m, const JacobiOptions &options) {
    const double asymmetry = m.hermiticity_error();
    if (!(asymmetry <= options.hermitian_tolerance)) {
        fail(ErrorCode::NotHermitian,
             "matrix is not Hermitian (max |A - A^dagger| = " + std::to_string(asymmetry) + ")");
    }
    const std::size_t n = m.dim();
    // Symmetrize so the rotations see an exactly Hermitian input.
    ComplexMatrix a(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = options.off_diagonal_threshold * std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

}  // namespace permfilter
