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
#include "hpsynth/random.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hpsynth {

namespace {

Complex column_dot(const Matrix &m, std::size_t a, std::size_t b) {
    Complex dot(0.0, 0.0);
    for (std::size_t r = 0; r < m.dim(); ++r) {
        dot += std::conj(m(r, a)) * m(r, b);
    }
    return dot;
}

double column_norm(const Matrix &m, std::size_t c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        sum += std::norm(m(r, c));
    }
    return std::sqrt(sum);
}

}  // namespace

UnitaryMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Matrix z(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex(re, im);
        }
    }

    // Modified Gram-Schmidt, two orthogonalization passes per column. The
    // triangular factor this produces has a positive real diagonal, so the
    // Haar phase correction conj(r_kk / |r_kk|) is exactly 1.
    for (std::size_t c = 0; c < dim; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                const Complex proj = column_dot(z, prev, c);
                for (std::size_t r = 0; r < dim; ++r) {
                    z(r, c) -= proj * z(r, prev);
                }
            }
        }
        const double norm = column_norm(z, c);
        if (norm == 0.0) {
            throw std::runtime_error(
                "haar_random_unitary: degenerate Gaussian sample");
        }
        const Complex diag(norm, 0.0);
        const Complex phase_fix = std::conj(diag / std::abs(diag));
        for (std::size_t r = 0; r < dim; ++r) {
            z(r, c) = z(r, c) / norm * phase_fix;
        }
    }
    return UnitaryMatrix(std::move(z));
}

}  // namespace hpsynth
