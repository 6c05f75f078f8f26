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
#include "hpsynth/qft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpsynth {

namespace {

// exp(2 pi i k / n) with the quarter turns exact, so the m = 1 matrix equals
// the Hadamard gate entry for entry.
Complex unit_root(std::size_t k, std::size_t n) {
    k %= n;
    if ((4 * k) % n == 0) {
        switch ((4 * k) / n) {
        case 0:
            return Complex(1.0, 0.0);
        case 1:
            return Complex(0.0, 1.0);
        case 2:
            return Complex(-1.0, 0.0);
        default:
            return Complex(0.0, -1.0);
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi *
                               static_cast<double>(k) /
                               static_cast<double>(n));
}

}  // namespace

Matrix build_qft(const QftSpec &spec) {
    if (spec.m == 0 || spec.m > 20) {
        throw std::invalid_argument("build_qft: m must be in [1, 20]");
    }
    const std::size_t dim = std::size_t{1} << spec.m;
    const double scale =
        spec.normalized ? 1.0 / std::sqrt(static_cast<double>(dim)) : 1.0;
    Matrix f(dim);
    for (std::size_t y = 0; y < dim; ++y) {
        for (std::size_t a = 0; a < dim; ++a) {
            f(y, a) = scale * unit_root((a * y) % dim, dim);
        }
    }
    return f;
}

std::vector<StateVector> qft_factored_state(std::size_t a, std::size_t m) {
    if (m == 0 || m > 20) {
        throw std::invalid_argument("qft_factored_state: m must be in [1, 20]");
    }
    if (a >= (std::size_t{1} << m)) {
        throw std::invalid_argument("qft_factored_state: a out of range");
    }
    std::vector<StateVector> factors;
    factors.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const std::size_t denom = std::size_t{1} << k;
        StateVector factor;
        factor.amplitudes = {Complex(kInvSqrt2, 0.0),
                             kInvSqrt2 * unit_root(a % denom, denom)};
        factors.push_back(std::move(factor));
    }
    return factors;
}

}  // namespace hpsynth
