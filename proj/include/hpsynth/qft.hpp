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

#include <cstddef>
#include <vector>

#include "hpsynth/matrix.hpp"
#include "hpsynth/simulate.hpp"

namespace hpsynth {

/// Fourier transform on the integers mod 2^m. When normalized the matrix is
/// unitary (scaled by 2^{-m/2}); otherwise it is the bare root-of-unity
/// table with entry (y, a) = exp(2 pi i a y / 2^m).
struct QftSpec {
    std::size_t m = 1;
    bool normalized = true;
};

Matrix build_qft(const QftSpec &spec);

/// The transform of |a> written as m single-qubit factors, most significant
/// output qubit first: factor k is (|0> + exp(2 pi i (a mod 2^k) / 2^k) |1>)
/// / sqrt 2. Their Kronecker product is column a of the normalized matrix.
std::vector<StateVector> qft_factored_state(std::size_t a, std::size_t m);

}  // namespace hpsynth
