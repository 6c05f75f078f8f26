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
#include "hpsynth/u2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpsynth {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateEntry = 1e-12;

Matrix phase_diag(double top, double bottom) {
    Matrix m(2);
    m(0, 0) = std::polar(1.0, top);
    m(1, 1) = std::polar(1.0, bottom);
    return m;
}

}  // namespace

UnitaryMatrix compose_euler(const EulerAngles &angles) {
    const Matrix scalar = phase_diag(angles.delta, angles.delta);
    const Matrix left = phase_diag(angles.alpha / 2.0, -angles.alpha / 2.0);
    Matrix rotation(2);
    rotation(0, 0) = std::cos(angles.omega);
    rotation(0, 1) = std::sin(angles.omega);
    rotation(1, 0) = -std::sin(angles.omega);
    rotation(1, 1) = std::cos(angles.omega);
    const Matrix right = phase_diag(angles.beta / 2.0, -angles.beta / 2.0);
    return UnitaryMatrix(
        mat_mul(mat_mul(scalar, left), mat_mul(rotation, right)));
}

EulerAngles euler_decompose(const UnitaryMatrix &a) {
    if (a.dim() != 2) {
        throw std::invalid_argument("euler_decompose: matrix must be 2x2");
    }
    const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double delta = std::arg(det) / 2.0;

    // Reduce to determinant 1; the top row then carries all four angles.
    const Complex unphase = std::polar(1.0, -delta);
    const Complex top_left = unphase * a(0, 0);
    const Complex top_right = unphase * a(0, 1);

    const double omega = std::atan2(std::abs(top_right), std::abs(top_left));
    const double half_sum =
        std::abs(top_left) > kDegenerateEntry ? std::arg(top_left) : 0.0;
    const double half_diff =
        std::abs(top_right) > kDegenerateEntry ? std::arg(top_right) : 0.0;

    EulerAngles angles;
    angles.delta = delta;
    angles.alpha = half_sum + half_diff;
    angles.omega = omega;
    angles.beta = half_sum - half_diff;
    return angles;
}

HPWord x_word() {
    return {HPGate::h(), HPGate::p(-kPi), HPGate::h()};
}

HPWord torus_word(double omega1, double omega2) {
    HPWord word = x_word();
    word.push_back(HPGate::p(omega1));
    HPWord second = x_word();
    word.insert(word.end(), second.begin(), second.end());
    word.push_back(HPGate::p(omega2));
    return word;
}

HPWord rotation_word(double omega) {
    return {HPGate::p(-kPi / 2.0), HPGate::h(), HPGate::p(-omega),
            HPGate::h(), HPGate::p(-kPi), HPGate::h(),
            HPGate::p(omega), HPGate::h(), HPGate::p(-kPi / 2.0)};
}

HPWord synthesize_u2(const UnitaryMatrix &a) {
    const EulerAngles e = euler_decompose(a);
    // The scalar phase is a torus element, so it rides along with the alpha
    // diagonal instead of costing a torus word of its own.
    HPWord word = torus_word(e.beta / 2.0, -e.beta / 2.0);
    const HPWord rotation = rotation_word(e.omega);
    word.insert(word.end(), rotation.begin(), rotation.end());
    const HPWord alpha_diag = torus_word(e.delta + e.alpha / 2.0,
                                         e.delta - e.alpha / 2.0);
    word.insert(word.end(), alpha_diag.begin(), alpha_diag.end());
    return word;
}

UnitaryMatrix evaluate_hp_word(const HPWord &word) {
    Matrix m = Matrix::identity(2);
    for (const auto &gate : word) {
        if (gate.kind == GateKind::X) {
            throw std::invalid_argument(
                "evaluate_hp_word: words are over H and P only");
        }
        m = mat_mul(gate_matrix(gate.kind, gate.theta).mat(), m);
    }
    return UnitaryMatrix(std::move(m));
}

}  // namespace hpsynth
