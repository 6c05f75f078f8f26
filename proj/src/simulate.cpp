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
#include "hpsynth/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hpsynth {

namespace {

struct GateMasks {
    std::size_t target = 0;
    std::size_t controls = 0;
};

GateMasks masks_for(const Gate &gate, std::size_t qubit_count) {
    GateMasks m;
    m.target = std::size_t{1} << (qubit_count - 1 - gate.target);
    for (const auto c : gate.controls) {
        m.controls |= std::size_t{1} << (qubit_count - 1 - c);
    }
    return m;
}

void apply_gate_to_state(const Gate &gate, std::size_t qubit_count,
                         std::vector<Complex> &amp) {
    const auto [tmask, cmask] = masks_for(gate, qubit_count);
    const std::size_t dim = amp.size();
    switch (gate.kind) {
    case GateKind::X:
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) == 0 && (m & cmask) == cmask) {
                std::swap(amp[m], amp[m | tmask]);
            }
        }
        break;
    case GateKind::P: {
        const Complex phase = std::polar(1.0, gate.theta);
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) != 0 && (m & cmask) == cmask) {
                amp[m] *= phase;
            }
        }
        break;
    }
    case GateKind::H:
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) == 0 && (m & cmask) == cmask) {
                const Complex a0 = amp[m];
                const Complex a1 = amp[m | tmask];
                amp[m] = kInvSqrt2 * (a0 + a1);
                amp[m | tmask] = kInvSqrt2 * (a0 - a1);
            }
        }
        break;
    }
}

// Left-multiplies the accumulated matrix by the gate: mixes row pairs.
void apply_gate_to_rows(const Gate &gate, std::size_t qubit_count, Matrix &u) {
    const auto [tmask, cmask] = masks_for(gate, qubit_count);
    const std::size_t dim = u.dim();
    switch (gate.kind) {
    case GateKind::X:
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) == 0 && (m & cmask) == cmask) {
                for (std::size_t col = 0; col < dim; ++col) {
                    std::swap(u(m, col), u(m | tmask, col));
                }
            }
        }
        break;
    case GateKind::P: {
        const Complex phase = std::polar(1.0, gate.theta);
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) != 0 && (m & cmask) == cmask) {
                for (std::size_t col = 0; col < dim; ++col) {
                    u(m, col) *= phase;
                }
            }
        }
        break;
    }
    case GateKind::H:
        for (std::size_t m = 0; m < dim; ++m) {
            if ((m & tmask) == 0 && (m & cmask) == cmask) {
                for (std::size_t col = 0; col < dim; ++col) {
                    const Complex a0 = u(m, col);
                    const Complex a1 = u(m | tmask, col);
                    u(m, col) = kInvSqrt2 * (a0 + a1);
                    u(m | tmask, col) = kInvSqrt2 * (a0 - a1);
                }
            }
        }
        break;
    }
}

}  // namespace

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

StateVector basis_state(std::size_t qubit_count, std::size_t index) {
    const std::size_t dim = std::size_t{1} << qubit_count;
    if (index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    StateVector s;
    s.amplitudes.assign(dim, Complex(0.0, 0.0));
    s.amplitudes[index] = Complex(1.0, 0.0);
    return s;
}

UnitaryMatrix circuit_unitary(const Circuit &circuit) {
    Matrix u = Matrix::identity(circuit.dim());
    for (const auto &gate : circuit.gates()) {
        apply_gate_to_rows(gate, circuit.qubit_count(), u);
    }
    return UnitaryMatrix(std::move(u));
}

StateVector apply_circuit(const Circuit &circuit, const StateVector &input) {
    if (input.amplitudes.size() != circuit.dim()) {
        throw std::invalid_argument("apply_circuit: dimension mismatch");
    }
    StateVector out = input;
    for (const auto &gate : circuit.gates()) {
        apply_gate_to_state(gate, circuit.qubit_count(), out.amplitudes);
    }
    return out;
}

}  // namespace hpsynth
