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
//
// Shared oracles for the test suites. Everything here is independent of the
// implementation paths it checks: permutation words are applied as plain
// index maps, rotations come straight from cos/sin, and Kronecker products
// are written out directly.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"
#include "hpsynth/permutation.hpp"
#include "hpsynth/simulate.hpp"

namespace hpsynth::testing {

inline Matrix rotation_oracle(double omega) {
    Matrix r(2);
    r(0, 0) = std::cos(omega);
    r(0, 1) = std::sin(omega);
    r(1, 0) = -std::sin(omega);
    r(1, 1) = std::cos(omega);
    return r;
}

inline Matrix diag_oracle(const std::vector<Complex> &entries) {
    Matrix d(entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
        d(k, k) = entries[k];
    }
    return d;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.dim() * b.dim());
    for (std::size_t ar = 0; ar < a.dim(); ++ar) {
        for (std::size_t ac = 0; ac < a.dim(); ++ac) {
            for (std::size_t br = 0; br < b.dim(); ++br) {
                for (std::size_t bc = 0; bc < b.dim(); ++bc) {
                    out(ar * b.dim() + br, ac * b.dim() + bc) =
                        a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline std::vector<Complex> kron(const std::vector<Complex> &a,
                                 const std::vector<Complex> &b) {
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

// Applies the word's symbols in order to the identity arrangement.
inline Permutation word_action_oracle(const GeneratorWord &word,
                                      std::size_t n_states) {
    std::vector<std::size_t> image(n_states);
    for (std::size_t x = 0; x < n_states; ++x) {
        image[x] = x;
    }
    for (const auto s : word) {
        for (auto &y : image) {
            switch (s) {
            case GenSymbol::Transposition:
                if (y == n_states - 2) {
                    y = n_states - 1;
                } else if (y == n_states - 1) {
                    y = n_states - 2;
                }
                break;
            case GenSymbol::Increment:
                y = (y + 1) % n_states;
                break;
            case GenSymbol::Decrement:
                y = (y + n_states - 1) % n_states;
                break;
            }
        }
    }
    return Permutation(image);
}

inline Permutation random_permutation(std::size_t n_states,
                                      std::mt19937_64 &rng) {
    std::vector<std::size_t> image(n_states);
    for (std::size_t x = 0; x < n_states; ++x) {
        image[x] = x;
    }
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation(image);
}

inline Circuit random_circuit(std::size_t qubit_count, std::size_t gate_count,
                              std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind_dist(0, 2);
    std::uniform_int_distribution<std::size_t> qubit_dist(0, qubit_count - 1);
    std::uniform_real_distribution<double> angle_dist(-6.5, 6.5);
    std::bernoulli_distribution keep_control(0.3);

    Circuit c(qubit_count);
    for (std::size_t g = 0; g < gate_count; ++g) {
        const std::size_t target = qubit_dist(rng);
        std::vector<std::size_t> controls;
        for (std::size_t q = 0; q < qubit_count; ++q) {
            if (q != target && keep_control(rng)) {
                controls.push_back(q);
            }
        }
        switch (kind_dist(rng)) {
        case 0:
            c.append(Gate::h(target, std::move(controls)));
            break;
        case 1:
            c.append(Gate::p(angle_dist(rng), target, std::move(controls)));
            break;
        default:
            c.append(Gate::x(target, std::move(controls)));
            break;
        }
    }
    return c;
}

}  // namespace hpsynth::testing
