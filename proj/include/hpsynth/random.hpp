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

#include <cstdint>

#include "hpsynth/matrix.hpp"

namespace hpsynth {

/// Haar-distributed random unitary of the given dimension. Fills the matrix
/// with independent standard complex Gaussians, orthonormalizes the columns,
/// and fixes each column's phase by the (positive real) diagonal of the
/// triangular factor. Deterministic for a fixed seed.
UnitaryMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace hpsynth
