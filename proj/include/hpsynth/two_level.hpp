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

namespace hpsynth {

/// Plane (Givens-type) rotation mixing basis states q < p:
///   cos(phi) at (p,p) and (q,q),
///   -e^{-i sigma} sin(phi) at (q,p),
///    e^{+i sigma} sin(phi) at (p,q),
/// identity elsewhere. Determinant is always 1.
struct PlaneRotation {
    std::size_t p = 1;
    std::size_t q = 0;
    double phi = 0.0;
    double sigma = 0.0;
};

/// Materializes the rotation at the given dimension; entries are written,
/// not computed.
UnitaryMatrix plane_rotation_matrix(std::size_t dim, const PlaneRotation &rot);

/// Polar data of the two entries that decide a zeroing step, plus which of
/// the three cases applied (1: top entry already zero; 2: diagonal entry
/// zero; 3: generic).
struct ZeroingCase {
    int case_id = 1;
    double r_top = 0.0;
    double theta_top = 0.0;
    double r_diag = 0.0;
    double theta_diag = 0.0;
};

struct ZeroingSelection {
    ZeroingCase zero_case;
    double phi = 0.0;
    double sigma = 0.0;
};

/// Chooses (phi, sigma) so that left-multiplying by the adjoint of the
/// resulting plane rotation cancels the targeted entry v_top against the
/// diagonal entry v_diag:
///   case 1 (|v_top| < 1e-12):  phi = 0, sigma = 0;
///   case 2 (|v_diag| < 1e-12): phi = pi/2, sigma = 0;
///   case 3: sigma = -theta_top + theta_diag, phi = atan(-r_top / r_diag).
ZeroingSelection select_zeroing(Complex v_top, Complex v_diag);

/// Unit-modulus diagonal left over after the eliminations.
struct DiagonalPhases {
    std::vector<Complex> d;
};

struct PlaneRotationDecomposition {
    std::vector<PlaneRotation> rotations;
    DiagonalPhases phases;
};

/// Triangularizes V by zeroing column N-1 from row N-2 down to row 0, then
/// column N-2, and so on; exactly N(N-1)/2 rotations come back (identity
/// rotations included). Reading the list left to right as leftmost matrix
/// factor first, the product of the rotations times diag(phases) is V.
PlaneRotationDecomposition decompose_plane_rotations(const UnitaryMatrix &v);

/// Splits diag(d_0 .. d_{N-1}) into N-1 factors: the first carries (d_0,
/// d_1) on states 0 and 1, each later factor i carries d_i on state i alone.
/// Their product equals the input diagonal exactly (entries are copied).
std::vector<UnitaryMatrix> factor_diagonal(const DiagonalPhases &phases);

/// A two-level factor: identity off basis states j < i, with the given 2x2
/// action block in basis order (|j>, |i>).
struct TwoLevelFactor {
    std::size_t i;
    std::size_t j;
    UnitaryMatrix block;
};

/// Factors V into N(N-1)/2 two-level unitaries, ordered so the first list
/// entry is the leftmost matrix factor. Factors with j = 0 absorb the
/// diagonal: factor (i, 0) carries rotation-block times diag(1, d_i), and
/// factor (1, 0) carries rotation-block times diag(d_0, d_1).
std::vector<TwoLevelFactor> assemble_two_level(const UnitaryMatrix &v);

/// Product of the factors' embeddings in list order (entry 0 leftmost).
UnitaryMatrix reconstruct_two_level(const std::vector<TwoLevelFactor> &factors,
                                    std::size_t dim);

}  // namespace hpsynth
