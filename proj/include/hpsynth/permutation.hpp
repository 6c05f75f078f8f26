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

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"

namespace hpsynth {

/// Bijection on {0, ..., N-1}; image()[x] is where x goes.
class Permutation {
  public:
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n_states);

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t x) const { return image_[x]; }
    const std::vector<std::size_t> &image() const { return image_; }

  private:
    std::vector<std::size_t> image_;
};

/// The two permutation generators, as circuit building blocks:
/// Transposition swaps the top two states (N-2, N-1); Increment is the full
/// cycle x -> x+1 mod N; Decrement its inverse.
enum class GenSymbol { Transposition, Increment, Decrement };

/// Symbols in application order: entry 0 acts first.
using GeneratorWord = std::vector<GenSymbol>;

/// Single X on the last qubit controlled by all the others; swaps basis
/// states N-2 and N-1 and fixes the rest.
Circuit transposition_circuit(std::size_t qubit_count);

/// Ripple cascade realizing |x> -> |x+1 mod 2^n> without an ancilla: X on
/// qubit 0 controlled by qubits 1..n-1, then X on qubit 1 controlled by
/// 2..n-1, ..., then an uncontrolled X on qubit n-1.
Circuit increment_circuit(std::size_t qubit_count);

/// Generator word whose symbols, applied in order to the identity
/// arrangement, compose to the given permutation. Each transposition is
/// rewritten through adjacent transpositions, and each adjacent pair (k,
/// k+1) is reached by conjugating the top transposition with the cycle:
/// C^m T C^{-m} swaps (N-2+m, N-1+m) mod N, so m = (k+2) mod N. Adjacent
/// inverse symbol pairs are cancelled as the word is built.
GeneratorWord word_for_permutation(const Permutation &perm);

/// Substitutes each symbol's circuit; Decrement is the reversed increment
/// gate list (every gate is a self-inverse controlled X).
Circuit word_to_circuit(const GeneratorWord &word, std::size_t qubit_count);

/// Permutation pinning state i to N-1 and state j to N-2; the remaining
/// states fill the remaining slots in ascending order, which keeps emitted
/// circuits deterministic.
Permutation pair_placement_permutation(std::size_t i, std::size_t j,
                                       std::size_t n_states);

/// 0/1 matrix with column x carrying a 1 in row perm(x).
UnitaryMatrix permutation_matrix(const Permutation &perm);

}  // namespace hpsynth
