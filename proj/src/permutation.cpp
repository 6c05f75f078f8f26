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
#include "hpsynth/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hpsynth {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)) {
    if (image_.empty()) {
        throw std::invalid_argument("Permutation: empty image");
    }
    std::vector<bool> seen(image_.size(), false);
    for (const auto y : image_) {
        if (y >= image_.size() || seen[y]) {
            throw std::invalid_argument("Permutation: image is not a bijection");
        }
        seen[y] = true;
    }
}

Permutation Permutation::identity(std::size_t n_states) {
    std::vector<std::size_t> image(n_states);
    std::iota(image.begin(), image.end(), std::size_t{0});
    return Permutation(std::move(image));
}

Circuit transposition_circuit(std::size_t qubit_count) {
    Circuit c(qubit_count);
    std::vector<std::size_t> controls(qubit_count - 1);
    std::iota(controls.begin(), controls.end(), std::size_t{0});
    c.append(Gate::x(qubit_count - 1, std::move(controls)));
    return c;
}

Circuit increment_circuit(std::size_t qubit_count) {
    Circuit c(qubit_count);
    for (std::size_t t = 0; t < qubit_count; ++t) {
        std::vector<std::size_t> controls(qubit_count - 1 - t);
        std::iota(controls.begin(), controls.end(), t + 1);
        c.append(Gate::x(t, std::move(controls)));
    }
    return c;
}

namespace {

bool cancels(GenSymbol a, GenSymbol b) {
    return (a == GenSymbol::Increment && b == GenSymbol::Decrement) ||
           (a == GenSymbol::Decrement && b == GenSymbol::Increment) ||
           (a == GenSymbol::Transposition && b == GenSymbol::Transposition);
}

void push_symbol(GeneratorWord &word, GenSymbol s) {
    if (!word.empty() && cancels(word.back(), s)) {
        word.pop_back();
    } else {
        word.push_back(s);
    }
}

// (k, k+1) as C^m T C^{-m} with the decrements applied first.
void emit_adjacent(GeneratorWord &word, std::size_t k, std::size_t n_states) {
    const std::size_t m = (k + 2) % n_states;
    for (std::size_t r = 0; r < m; ++r) {
        push_symbol(word, GenSymbol::Decrement);
    }
    push_symbol(word, GenSymbol::Transposition);
    for (std::size_t r = 0; r < m; ++r) {
        push_symbol(word, GenSymbol::Increment);
    }
}

// (a, b) as the adjacent ladder a, a+1, ..., b-1, b-2, ..., a.
void emit_transposition(GeneratorWord &word, std::size_t a, std::size_t b,
                        std::size_t n_states) {
    if (a > b) {
        std::swap(a, b);
    }
    for (std::size_t k = a; k < b; ++k) {
        emit_adjacent(word, k, n_states);
    }
    for (std::size_t k = b - 1; k-- > a;) {
        emit_adjacent(word, k, n_states);
    }
}

}  // namespace

GeneratorWord word_for_permutation(const Permutation &perm) {
    const std::size_t n = perm.size();
    GeneratorWord word;
    std::vector<bool> visited(n, false);
    // Each cycle (x1 x2 ... xl) is the transposition sequence
    // (x1,x2), (x1,x3), ..., (x1,xl) applied in that order.
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) {
            continue;
        }
        std::vector<std::size_t> cycle{start};
        visited[start] = true;
        for (std::size_t x = perm(start); x != start; x = perm(x)) {
            cycle.push_back(x);
            visited[x] = true;
        }
        for (std::size_t t = 1; t < cycle.size(); ++t) {
            emit_transposition(word, cycle[0], cycle[t], n);
        }
    }
    return word;
}

Circuit word_to_circuit(const GeneratorWord &word, std::size_t qubit_count) {
    Circuit c(qubit_count);
    const Circuit transposition = transposition_circuit(qubit_count);
    const Circuit increment = increment_circuit(qubit_count);
    for (const auto s : word) {
        switch (s) {
        case GenSymbol::Transposition:
            c.extend(transposition);
            break;
        case GenSymbol::Increment:
            c.extend(increment);
            break;
        case GenSymbol::Decrement:
            for (auto it = increment.gates().rbegin();
                 it != increment.gates().rend(); ++it) {
                c.append(*it);
            }
            break;
        }
    }
    return c;
}

Permutation pair_placement_permutation(std::size_t i, std::size_t j,
                                       std::size_t n_states) {
    if (i == j) {
        throw std::invalid_argument(
            "pair_placement_permutation: indices must differ");
    }
    if (j > i || i >= n_states) {
        throw std::invalid_argument(
            "pair_placement_permutation: need 0 <= j < i < n_states");
    }
    std::vector<std::size_t> image(n_states);
    image[i] = n_states - 1;
    image[j] = n_states - 2;
    std::size_t slot = 0;
    for (std::size_t x = 0; x < n_states; ++x) {
        if (x != i && x != j) {
            image[x] = slot++;
        }
    }
    return Permutation(std::move(image));
}

UnitaryMatrix permutation_matrix(const Permutation &perm) {
    Matrix m(perm.size());
    for (std::size_t x = 0; x < perm.size(); ++x) {
        m(perm(x), x) = Complex(1.0, 0.0);
    }
    return UnitaryMatrix(std::move(m));
}

}  // namespace hpsynth
