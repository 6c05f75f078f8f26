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

#include <cmath>
#include <cstddef>
#include <vector>

#include "hpsynth/matrix.hpp"

namespace hpsynth {

inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// The target gate set: Walsh-Hadamard, phase shift, NOT.
enum class GateKind { H, P, X };

/// 2x2 matrix of a gate kind. H = (1/sqrt 2)[[1,1],[1,-1]],
/// P(theta) = diag(1, e^{i theta}), X = [[0,1],[1,0]].
UnitaryMatrix gate_matrix(GateKind kind, double theta = 0.0);

/// Controlled single-qubit gate: `kind` acts on `target` whenever every
/// qubit in `controls` is |1> (positive controls only). Controls are kept
/// sorted; theta is meaningful for P and stored unreduced.
struct Gate {
    GateKind kind = GateKind::H;
    std::size_t target = 0;
    std::vector<std::size_t> controls;
    double theta = 0.0;

    static Gate h(std::size_t target, std::vector<std::size_t> controls = {});
    static Gate p(double theta, std::size_t target,
                  std::vector<std::size_t> controls = {});
    static Gate x(std::size_t target, std::vector<std::size_t> controls = {});
};

/// Ordered gate list on a fixed number of qubits. List order is ket
/// application order: gates()[0] acts first on states.
class Circuit {
  public:
    explicit Circuit(std::size_t qubit_count);
    Circuit(std::size_t qubit_count, std::vector<Gate> gates);

    std::size_t qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return std::size_t{1} << qubit_count_; }
    const std::vector<Gate> &gates() const { return gates_; }

    /// Validates the gate's indices against qubit_count before storing it.
    void append(Gate gate);

    /// Appends another circuit's gates; qubit counts must match.
    void extend(const Circuit &other);

  private:
    std::size_t qubit_count_;
    std::vector<Gate> gates_;
};

struct GateStats {
    std::size_t h_gates = 0;
    std::size_t p_gates = 0;
    std::size_t x_gates = 0;
    std::size_t total = 0;
    std::size_t max_controls = 0;

    bool operator==(const GateStats &) const = default;
};

GateStats gate_stats(const Circuit &circuit);

}  // namespace hpsynth
