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
#include "hpsynth/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hpsynth {

UnitaryMatrix gate_matrix(GateKind kind, double theta) {
    Matrix m(2);
    switch (kind) {
    case GateKind::H:
        m(0, 0) = kInvSqrt2;
        m(0, 1) = kInvSqrt2;
        m(1, 0) = kInvSqrt2;
        m(1, 1) = -kInvSqrt2;
        break;
    case GateKind::P:
        if (!std::isfinite(theta)) {
            throw std::invalid_argument("gate_matrix: theta must be finite");
        }
        m(0, 0) = 1.0;
        m(1, 1) = std::polar(1.0, theta);
        break;
    case GateKind::X:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    }
    return UnitaryMatrix(std::move(m));
}

namespace {

Gate make_gate(GateKind kind, std::size_t target,
               std::vector<std::size_t> controls, double theta) {
    std::sort(controls.begin(), controls.end());
    if (std::adjacent_find(controls.begin(), controls.end()) !=
        controls.end()) {
        throw std::invalid_argument("Gate: duplicate control qubit");
    }
    if (std::binary_search(controls.begin(), controls.end(), target)) {
        throw std::invalid_argument("Gate: target cannot also be a control");
    }
    if (kind == GateKind::P && !std::isfinite(theta)) {
        throw std::invalid_argument("Gate: theta must be finite");
    }
    return Gate{kind, target, std::move(controls), theta};
}

}  // namespace

Gate Gate::h(std::size_t target, std::vector<std::size_t> controls) {
    return make_gate(GateKind::H, target, std::move(controls), 0.0);
}

Gate Gate::p(double theta, std::size_t target,
             std::vector<std::size_t> controls) {
    return make_gate(GateKind::P, target, std::move(controls), theta);
}

Gate Gate::x(std::size_t target, std::vector<std::size_t> controls) {
    return make_gate(GateKind::X, target, std::move(controls), 0.0);
}

Circuit::Circuit(std::size_t qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count == 0 || qubit_count > 24) {
        throw std::invalid_argument("Circuit: qubit count must be in [1, 24]");
    }
}

Circuit::Circuit(std::size_t qubit_count, std::vector<Gate> gates)
    : Circuit(qubit_count) {
    gates_.reserve(gates.size());
    for (auto &g : gates) {
        append(std::move(g));
    }
}

void Circuit::append(Gate gate) {
    if (gate.target >= qubit_count_) {
        throw std::invalid_argument("Circuit: gate target out of range");
    }
    for (const auto c : gate.controls) {
        if (c >= qubit_count_) {
            throw std::invalid_argument("Circuit: gate control out of range");
        }
        if (c == gate.target) {
            throw std::invalid_argument(
                "Circuit: gate target cannot also be a control");
        }
    }
    gates_.push_back(std::move(gate));
}

void Circuit::extend(const Circuit &other) {
    if (other.qubit_count_ != qubit_count_) {
        throw std::invalid_argument("Circuit: qubit count mismatch in extend");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

GateStats gate_stats(const Circuit &circuit) {
    GateStats stats;
    for (const auto &g : circuit.gates()) {
        switch (g.kind) {
        case GateKind::H:
            ++stats.h_gates;
            break;
        case GateKind::P:
            ++stats.p_gates;
            break;
        case GateKind::X:
            ++stats.x_gates;
            break;
        }
        stats.max_controls = std::max(stats.max_controls, g.controls.size());
    }
    stats.total = circuit.gates().size();
    return stats;
}

}  // namespace hpsynth
