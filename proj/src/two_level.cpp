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
#include "hpsynth/two_level.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hpsynth {

namespace {

constexpr double kZeroEntry = 1e-12;

void check_pair(std::size_t dim, std::size_t p, std::size_t q,
                const char *who) {
    if (p == q) {
        throw std::invalid_argument(std::string(who) +
                                    ": indices must differ");
    }
    if (q > p || p >= dim) {
        throw std::invalid_argument(std::string(who) +
                                    ": indices must satisfy 0 <= q < p < dim");
    }
}

// 2x2 action block of a rotation in basis order (|q>, |p>).
Matrix rotation_block(const PlaneRotation &rot) {
    Matrix b(2);
    const double c = std::cos(rot.phi);
    const double s = std::sin(rot.phi);
    b(0, 0) = c;
    b(0, 1) = -std::polar(1.0, -rot.sigma) * s;
    b(1, 0) = std::polar(1.0, rot.sigma) * s;
    b(1, 1) = c;
    return b;
}

}  // namespace

UnitaryMatrix plane_rotation_matrix(std::size_t dim, const PlaneRotation &rot) {
    check_pair(dim, rot.p, rot.q, "plane_rotation_matrix");
    Matrix m = Matrix::identity(dim);
    const Matrix b = rotation_block(rot);
    m(rot.q, rot.q) = b(0, 0);
    m(rot.q, rot.p) = b(0, 1);
    m(rot.p, rot.q) = b(1, 0);
    m(rot.p, rot.p) = b(1, 1);
    return UnitaryMatrix(std::move(m));
}

ZeroingSelection select_zeroing(Complex v_top, Complex v_diag) {
    ZeroingSelection sel;
    sel.zero_case.r_top = std::abs(v_top);
    sel.zero_case.theta_top = std::arg(v_top);
    sel.zero_case.r_diag = std::abs(v_diag);
    sel.zero_case.theta_diag = std::arg(v_diag);
    if (sel.zero_case.r_top < kZeroEntry) {
        sel.zero_case.case_id = 1;
        sel.phi = 0.0;
        sel.sigma = 0.0;
    } else if (sel.zero_case.r_diag < kZeroEntry) {
        sel.zero_case.case_id = 2;
        sel.phi = std::numbers::pi / 2.0;
        sel.sigma = 0.0;
    } else {
        sel.zero_case.case_id = 3;
        sel.sigma = -sel.zero_case.theta_top + sel.zero_case.theta_diag;
        // Principal-branch atan of a nonpositive ratio: phi in (-pi/2, 0].
        sel.phi = std::atan(-sel.zero_case.r_top / sel.zero_case.r_diag);
    }
    return sel;
}

PlaneRotationDecomposition decompose_plane_rotations(const UnitaryMatrix &v) {
    const std::size_t n = v.dim();
    Matrix w = v.mat();

    PlaneRotationDecomposition out;
    out.rotations.reserve(n * (n - 1) / 2);

    // Zero column `col` above the diagonal, bottom row first. Left-applying
    // the adjoint rotation mixes rows `row` and `col`:
    //   row  <-  cos(phi) row + e^{-i sigma} sin(phi) col
    //   col  <- -e^{i sigma} sin(phi) row + cos(phi) col
    // which cancels w(row, col) against the running pivot w(col, col).
    for (std::size_t col = n - 1; col >= 1; --col) {
        for (std::size_t row = col; row-- > 0;) {
            const ZeroingSelection sel =
                select_zeroing(w(row, col), w(col, col));
            out.rotations.push_back(
                PlaneRotation{col, row, sel.phi, sel.sigma});
            if (sel.zero_case.case_id == 1) {
                continue;
            }
            const double c = std::cos(sel.phi);
            const double s = std::sin(sel.phi);
            const Complex e_minus = std::polar(1.0, -sel.sigma) * s;
            const Complex e_plus = std::polar(1.0, sel.sigma) * s;
            for (std::size_t k = 0; k < n; ++k) {
                const Complex top = w(row, k);
                const Complex bottom = w(col, k);
                w(row, k) = c * top + e_minus * bottom;
                w(col, k) = -e_plus * top + c * bottom;
            }
        }
    }

    out.phases.d.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.phases.d.push_back(w(k, k));
    }
    return out;
}

std::vector<UnitaryMatrix> factor_diagonal(const DiagonalPhases &phases) {
    const std::size_t n = phases.d.size();
    if (n < 2) {
        throw std::invalid_argument("factor_diagonal: need at least 2 phases");
    }
    std::vector<UnitaryMatrix> factors;
    factors.reserve(n - 1);

    Matrix first = Matrix::identity(n);
    first(0, 0) = phases.d[0];
    first(1, 1) = phases.d[1];
    factors.emplace_back(std::move(first));

    for (std::size_t i = 2; i < n; ++i) {
        Matrix fi = Matrix::identity(n);
        fi(i, i) = phases.d[i];
        factors.emplace_back(std::move(fi));
    }
    return factors;
}

std::vector<TwoLevelFactor> assemble_two_level(const UnitaryMatrix &v) {
    const std::size_t n = v.dim();
    if (n < 2) {
        throw std::invalid_argument("assemble_two_level: need dim >= 2");
    }
    const PlaneRotationDecomposition dec = decompose_plane_rotations(v);

    // The elimination emits rotations with i descending and j descending
    // within each i -- exactly the left-to-right factor order. Each diagonal
    // phase commutes with every rotation on smaller indices, so it slides
    // left into the (i, 0) factor of its own group.
    std::vector<TwoLevelFactor> factors;
    factors.reserve(dec.rotations.size());
    for (const auto &rot : dec.rotations) {
        Matrix block = rotation_block(rot);
        if (rot.q == 0) {
            const Complex d_low =
                rot.p == 1 ? dec.phases.d[0] : Complex(1.0, 0.0);
            const Complex d_high = dec.phases.d[rot.p];
            block(0, 0) *= d_low;
            block(1, 0) *= d_low;
            block(0, 1) *= d_high;
            block(1, 1) *= d_high;
        }
        factors.push_back(
            TwoLevelFactor{rot.p, rot.q, UnitaryMatrix(std::move(block))});
    }
    return factors;
}

UnitaryMatrix reconstruct_two_level(const std::vector<TwoLevelFactor> &factors,
                                    std::size_t dim) {
    Matrix u = Matrix::identity(dim);
    for (const auto &f : factors) {
        u = mat_mul(u, embed_two_level(dim, f.i, f.j, f.block).mat());
    }
    return UnitaryMatrix(std::move(u));
}

}  // namespace hpsynth
