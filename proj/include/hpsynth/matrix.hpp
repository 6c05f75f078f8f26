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
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hpsynth {

using Complex = std::complex<double>;

/// Frobenius-norm budget ||A†A - I||_F for certifying a matrix as unitary.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Dense square complex matrix with row-major (row, col) indexing.
class Matrix {
  public:
    explicit Matrix(std::size_t dim);

    static Matrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    /// Row-major storage, dim*dim entries.
    const std::vector<Complex> &entries() const { return entries_; }

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Textbook product. Throws std::invalid_argument on dimension mismatch.
Matrix mat_mul(const Matrix &a, const Matrix &b);

/// Conjugate transpose.
Matrix adjoint(const Matrix &a);

/// ||A†A - I||_F. Zero for exactly unitary input.
double unitarity_defect(const Matrix &a);

/// ||A - B||_F. Throws std::invalid_argument on dimension mismatch.
double frobenius_distance(const Matrix &a, const Matrix &b);

/// A matrix certified unitary when constructed: the defect ||M†M - I||_F is
/// recorded and construction throws std::invalid_argument when it exceeds
/// kUnitaryTolerance. Non-finite entries fail the same check.
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(Matrix m);

    std::size_t dim() const { return mat_.dim(); }
    double defect() const { return defect_; }
    const Matrix &mat() const { return mat_; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return mat_(row, col);
    }

  private:
    Matrix mat_;
    double defect_;
};

/// Product of certified unitaries, re-certified.
UnitaryMatrix mat_mul(const UnitaryMatrix &a, const UnitaryMatrix &b);

/// Identity everywhere except on basis states j < i, which carry the 2x2
/// block in basis order (|j>, |i>): entries (j,j), (j,i), (i,j), (i,i) are
/// written directly, so every other basis vector is fixed exactly.
UnitaryMatrix embed_two_level(std::size_t dim, std::size_t i, std::size_t j,
                              const UnitaryMatrix &block);

}  // namespace hpsynth
