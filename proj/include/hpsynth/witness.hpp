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

namespace hpsynth {

/// Evidence that the Hadamard gate alone is not universal: its
/// multiplicative closure is the two-element set {I, H}, which stays far
/// from any nontrivial phase gate.
struct WitnessReport {
    std::size_t closure_size = 0;
    /// min over the closure of the Frobenius distance to P(pi/2).
    double min_distance_p_half_pi = 0.0;
    /// Same for P(pi), reported for comparison.
    double min_distance_p_pi = 0.0;
};

WitnessReport hadamard_group_witness();

}  // namespace hpsynth
