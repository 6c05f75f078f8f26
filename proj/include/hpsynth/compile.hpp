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
#include <stdexcept>

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"
#include "hpsynth/two_level.hpp"

namespace hpsynth {

struct CompilationResult {
    Circuit circuit;
    /// Frobenius distance between the simulated circuit and the input.
    double reconstruction_error = 0.0;
    GateStats ledger;
    /// Number of two-level factors in the factorization, N(N-1)/2.
    std::size_t factor_count = 0;
};

/// 1e-7 * 2^n: the default reconstruction budget, scaling with the depth the
/// factor count implies.
double default_compile_tolerance(std::size_t qubit_count);

/// Thrown when a compiled circuit misses its input by more than the
/// tolerance; carries the full result so callers can still inspect it.
class VerificationError : public std::runtime_error {
  public:
    VerificationError(CompilationResult result, double tolerance);

    const CompilationResult &result() const { return result_; }
    double measured_error() const { return result_.reconstruction_error; }
    double tolerance() const { return tolerance_; }

  private:
    CompilationResult result_;
    double tolerance_;
};

/// Circuit for a single two-level factor on n qubits: route states (j, i) to
/// the top pair (N-2, N-1), apply the factor's block as a word of fully
/// controlled H/P gates on the last qubit, and route back. Simulates to
/// embed_two_level(2^n, i, j, block).
Circuit compile_two_level(const TwoLevelFactor &factor,
                          std::size_t qubit_count);

/// Full pipeline: factor V into two-level unitaries and emit their circuits
/// in reverse factor order (the leftmost matrix factor acts last on states).
/// Factors whose block is within 1e-12 of the identity emit no gates. The
/// result is verified by simulation; an error above the tolerance throws
/// VerificationError rather than returning a silently bad circuit.
CompilationResult compile_unitary(const UnitaryMatrix &v, double tolerance);
CompilationResult compile_unitary(const UnitaryMatrix &v);

}  // namespace hpsynth
