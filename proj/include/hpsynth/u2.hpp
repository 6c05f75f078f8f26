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

#include <vector>

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"

namespace hpsynth {

/// Angles of the U(2) factorization
///   A = e^{i delta} diag(e^{i alpha/2}, e^{-i alpha/2}) R(omega)
///       diag(e^{i beta/2}, e^{-i beta/2})
/// with R(w) = [[cos w, sin w], [-sin w, cos w]].
struct EulerAngles {
    double delta = 0.0;
    double alpha = 0.0;
    double omega = 0.0;
    double beta = 0.0;
};

/// Multiplies out the four factors above.
UnitaryMatrix compose_euler(const EulerAngles &angles);

/// Recovers angles with delta in (-pi/2, pi/2] and omega in [0, pi/2]:
/// delta = arg(det A)/2; on A' = e^{-i delta} A, omega = atan2(|b|, |a|) for
/// the top row (a, b), and the half-angle sums come from arg(a) and arg(b)
/// (taken as 0 when the entry magnitude is below 1e-12). compose_euler of
/// the result reproduces A; the angle tuple itself is not unique.
EulerAngles euler_decompose(const UnitaryMatrix &a);

/// One letter of a single-qubit word over {H, P(theta)} only.
struct HPGate {
    GateKind kind = GateKind::H;
    double theta = 0.0;

    static HPGate h() { return HPGate{GateKind::H, 0.0}; }
    static HPGate p(double theta) { return HPGate{GateKind::P, theta}; }
};

/// Word in ket application order: entry 0 acts first on states.
using HPWord = std::vector<HPGate>;

/// [H, P(-pi), H], which evaluates to X.
HPWord x_word();

/// Eight-gate word evaluating to diag(e^{i w1}, e^{i w2}): two expanded X
/// gates interleaved with P(w1), P(w2).
HPWord torus_word(double omega1, double omega2);

/// Nine-gate word evaluating to R(w) = [[cos w, sin w], [-sin w, cos w]]:
/// P(-pi/2) H P(w) X P(-w) H P(-pi/2) as a matrix product (rightmost factor
/// listed first), with the X expanded as H P(-pi) H.
HPWord rotation_word(double omega);

/// Word of exactly 25 gates evaluating to the given 2x2 unitary, built from
/// its Euler angles: a torus word for the beta diagonal, a rotation word,
/// and a torus word carrying the alpha diagonal with the scalar phase
/// e^{i delta} folded in.
HPWord synthesize_u2(const UnitaryMatrix &a);

/// Product of the word's gate matrices, last listed leftmost.
UnitaryMatrix evaluate_hp_word(const HPWord &word);

}  // namespace hpsynth
