// Copyright 2026 The hpsynth Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "hpsynth/matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hpsynth {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw std::invalid_argument("Matrix: dimension must be at least 1");
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = Complex(1.0, 0.0);
    }
    return m;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex arc = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += arc * b(k, c);
            }
        }
    }
    return out;
}

Matrix adjoint(const Matrix &a) {
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = std::conj(a(c, r));
        }
    }
    return out;
}

double unitarity_defect(const Matrix &a) {
    const std::size_t n = a.dim();
    // ||A†A - I||_F accumulated column pair by column pair.
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex dot(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                dot += std::conj(a(k, r)) * a(k, c);
            }
            if (r == c) {
                dot -= 1.0;
            }
            sum += std::norm(dot);
        }
    }
    return std::sqrt(sum);
}

double frobenius_distance(const Matrix &a, const Matrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        sum += std::norm(a.entries()[k] - b.entries()[k]);
    }
    return std::sqrt(sum);
}

UnitaryMatrix::UnitaryMatrix(Matrix m)
    : mat_(std::move(m)), defect_(unitarity_defect(mat_)) {
    // A NaN defect (non-finite entries) fails this comparison as well.
    if (!(defect_ <= kUnitaryTolerance)) {
        std::ostringstream msg;
        msg << "UnitaryMatrix: unitarity defect " << defect_
            << " exceeds tolerance " << kUnitaryTolerance;
        throw std::invalid_argument(msg.str());
    }
}

UnitaryMatrix mat_mul(const UnitaryMatrix &a, const UnitaryMatrix &b) {
    return UnitaryMatrix(mat_mul(a.mat(), b.mat()));
}

UnitaryMatrix embed_two_level(std::size_t dim, std::size_t i, std::size_t j,
                              const UnitaryMatrix &block) {
    if (block.dim() != 2) {
        throw std::invalid_argument("embed_two_level: block must be 2x2");
    }
    if (i == j) {
        throw std::invalid_argument("embed_two_level: indices must differ");
    }
    if (j > i || i >= dim) {
        throw std::invalid_argument(
            "embed_two_level: indices must satisfy 0 <= j < i < dim");
    }
    Matrix m = Matrix::identity(dim);
    m(j, j) = block(0, 0);
    m(j, i) = block(0, 1);
    m(i, j) = block(1, 0);
    m(i, i) = block(1, 1);
    return UnitaryMatrix(std::move(m));
}

}  // namespace hpsynth
