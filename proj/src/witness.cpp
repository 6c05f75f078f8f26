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
#include "hpsynth/witness.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"

namespace hpsynth {

WitnessReport hadamard_group_witness() {
    constexpr double kSameMatrix = 1e-10;
    constexpr std::size_t kClosureCap = 64;

    std::vector<Matrix> closure{gate_matrix(GateKind::H).mat()};
    const auto known = [&](const Matrix &m) {
        return std::any_of(closure.begin(), closure.end(),
                           [&](const Matrix &c) {
                               return frobenius_distance(c, m) < kSameMatrix;
                           });
    };

    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t count = closure.size();
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = 0; b < count; ++b) {
                Matrix product = mat_mul(closure[a], closure[b]);
                if (!known(product)) {
                    closure.push_back(std::move(product));
                    grew = true;
                    if (closure.size() > kClosureCap) {
                        throw std::runtime_error(
                            "hadamard_group_witness: closure did not stay "
                            "finite");
                    }
                }
            }
        }
    }

    const auto min_distance_to = [&](const Matrix &target) {
        double best = frobenius_distance(closure.front(), target);
        for (const auto &c : closure) {
            best = std::min(best, frobenius_distance(c, target));
        }
        return best;
    };

    WitnessReport report;
    report.closure_size = closure.size();
    report.min_distance_p_half_pi = min_distance_to(
        gate_matrix(GateKind::P, std::numbers::pi / 2.0).mat());
    report.min_distance_p_pi =
        min_distance_to(gate_matrix(GateKind::P, std::numbers::pi).mat());
    return report;
}

}  // namespace hpsynth
