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

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"

namespace hpsynth {

/// Amplitudes over the 2^n computational basis states.
struct StateVector {
    std::vector<Complex> amplitudes;

    double norm() const;
};

/// |index> on qubit_count qubits.
StateVector basis_state(std::size_t qubit_count, std::size_t index);

// Basis convention used throughout: qubit 0 is the MOST significant bit of
// the basis index, so qubit k of index m is (m >> (n - 1 - k)) & 1.

/// Full 2^n x 2^n unitary of the circuit: G_k ... G_2 G_1 where G_1 is the
/// first listed gate. Controlled X is simulated as exact row routing, so
/// permutation circuits produce exact 0/1 entries.
UnitaryMatrix circuit_unitary(const Circuit &circuit);

/// Applies the circuit gate by gate without materializing the full matrix.
/// Equals circuit_unitary(circuit) times the input state.
StateVector apply_circuit(const Circuit &circuit, const StateVector &input);

}  // namespace hpsynth
