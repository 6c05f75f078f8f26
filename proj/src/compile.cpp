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
#include "hpsynth/compile.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hpsynth/permutation.hpp"
#include "hpsynth/simulate.hpp"
#include "hpsynth/u2.hpp"

namespace hpsynth {

namespace {

constexpr double kIdentityBlock = 1e-12;

}  // namespace

double default_compile_tolerance(std::size_t qubit_count) {
    return 1e-7 * std::ldexp(1.0, static_cast<int>(qubit_count));
}

VerificationError::VerificationError(CompilationResult result,
                                     double tolerance)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "compiled circuit misses the input by "
              << result.reconstruction_error << " (tolerance " << tolerance
              << ")";
          return msg.str();
      }()),
      result_(std::move(result)),
      tolerance_(tolerance) {}

Circuit compile_two_level(const TwoLevelFactor &factor,
                          std::size_t qubit_count) {
    const std::size_t dim = std::size_t{1} << qubit_count;
    if (factor.i >= dim || factor.j >= factor.i) {
        throw std::invalid_argument(
            "compile_two_level: factor indices out of range");
    }

    const Permutation placement =
        pair_placement_permutation(factor.i, factor.j, dim);
    const Circuit route =
        word_to_circuit(word_for_permutation(placement), qubit_count);

    // Fully controlled lift: target = last qubit, controls = all others.
    // The routed states (j, i) sit on the invariant pair (N-2, N-1), where
    // the lifted word multiplies out blockwise.
    std::vector<std::size_t> controls(qubit_count - 1);
    std::iota(controls.begin(), controls.end(), std::size_t{0});

    Circuit circuit(qubit_count);
    circuit.extend(route);
    for (const auto &letter : synthesize_u2(factor.block)) {
        circuit.append(
            Gate{letter.kind, qubit_count - 1, controls, letter.theta});
    }
    for (auto it = route.gates().rbegin(); it != route.gates().rend(); ++it) {
        circuit.append(*it);
    }
    return circuit;
}

CompilationResult compile_unitary(const UnitaryMatrix &v, double tolerance) {
    const std::size_t dim = v.dim();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument(
            "compile_unitary: dimension must be 2^n with n >= 1");
    }
    const std::size_t qubit_count =
        static_cast<std::size_t>(std::countr_zero(dim));

    const std::vector<TwoLevelFactor> factors = assemble_two_level(v);
    const Matrix identity_block = Matrix::identity(2);

    Circuit circuit(qubit_count);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        if (frobenius_distance(it->block.mat(), identity_block) <
            kIdentityBlock) {
            continue;
        }
        circuit.extend(compile_two_level(*it, qubit_count));
    }

    CompilationResult result{circuit, 0.0, gate_stats(circuit),
                             factors.size()};
    result.reconstruction_error =
        frobenius_distance(circuit_unitary(circuit).mat(), v.mat());
    if (result.reconstruction_error > tolerance) {
        throw VerificationError(std::move(result), tolerance);
    }
    return result;
}

CompilationResult compile_unitary(const UnitaryMatrix &v) {
    const std::size_t dim = v.dim();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument(
            "compile_unitary: dimension must be 2^n with n >= 1");
    }
    return compile_unitary(
        v, default_compile_tolerance(
               static_cast<std::size_t>(std::countr_zero(dim))));
}

}  // namespace hpsynth
