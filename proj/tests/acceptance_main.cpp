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
// Acceptance suite: one check per shipped guarantee, one PASS/FAIL line
// each. Exits nonzero if any check fails.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hpsynth/compile.hpp"
#include "hpsynth/permutation.hpp"
#include "hpsynth/qft.hpp"
#include "hpsynth/random.hpp"
#include "hpsynth/simulate.hpp"
#include "hpsynth/text_io.hpp"
#include "hpsynth/two_level.hpp"
#include "hpsynth/u2.hpp"
#include "hpsynth/witness.hpp"

using namespace hpsynth;
namespace ht = hpsynth::testing;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void report(int index, const std::string &name, bool pass,
            const std::string &detail) {
    std::printf("[%s] %2d. %s (%s)\n", pass ? "PASS" : "FAIL", index,
                name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string &command) {
    CommandResult result;
    FILE *pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    while (std::fgets(buffer, sizeof(buffer), pipe) != nullptr) {
        result.output += buffer;
    }
    const int status = pclose(pipe);
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    return result;
}

bool parse_key(const std::string &output, const std::string &key,
               double &value) {
    const auto pos = output.find(key + "=");
    if (pos == std::string::npos) {
        return false;
    }
    value = std::strtod(output.c_str() + pos + key.size() + 1, nullptr);
    return true;
}

std::string fmt(double value) {
    std::ostringstream ss;
    ss << value;
    return ss.str();
}

void check_not_word_identity() {
    Timer timer;
    const double err = frobenius_distance(evaluate_hp_word(x_word()).mat(),
                                          gate_matrix(GateKind::X).mat());
    report(1, "H P(-pi) H equals X", err <= 1e-12,
           "err " + fmt(err) + " <= 1e-12, " + fmt(timer.seconds()) + "s");
}

void check_torus_words() {
    Timer timer;
    std::mt19937_64 rng(2001);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    double worst = 0.0;
    bool sized = true;
    for (int trial = 0; trial < 100; ++trial) {
        const double w1 = angle(rng);
        const double w2 = angle(rng);
        const HPWord word = torus_word(w1, w2);
        sized = sized && word.size() == 8;
        const Matrix expect = ht::diag_oracle(
            {std::polar(1.0, w1), std::polar(1.0, w2)});
        worst = std::max(worst, frobenius_distance(
                                    evaluate_hp_word(word).mat(), expect));
    }
    report(2, "eight-gate torus words hit diag(e^{iw1}, e^{iw2})",
           sized && worst <= 1e-12,
           "worst " + fmt(worst) + " <= 1e-12, " + fmt(timer.seconds()) + "s");
}

void check_rotation_words() {
    Timer timer;
    std::mt19937_64 rng(2002);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    double worst = 0.0;
    bool sized = true;
    for (int trial = 0; trial < 100; ++trial) {
        const double w = angle(rng);
        const HPWord word = rotation_word(w);
        sized = sized && word.size() == 9;
        worst = std::max(worst,
                         frobenius_distance(evaluate_hp_word(word).mat(),
                                            ht::rotation_oracle(w)));
    }
    report(3, "nine-gate rotation words hit R(w)", sized && worst <= 1e-12,
           "worst " + fmt(worst) + " <= 1e-12, " + fmt(timer.seconds()) + "s");
}

void check_u2_synthesis() {
    Timer timer;
    double worst = 0.0;
    std::size_t longest = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const UnitaryMatrix a = haar_random_unitary(2, 30000 + seed);
        const HPWord word = synthesize_u2(a);
        longest = std::max(longest, word.size());
        worst = std::max(
            worst, frobenius_distance(evaluate_hp_word(word).mat(), a.mat()));
    }
    report(4, "1000 Haar U(2) synthesis round trips",
           worst <= 1e-11 && longest <= 25,
           "worst " + fmt(worst) + " <= 1e-11, longest word " +
               std::to_string(longest) + " <= 25, " + fmt(timer.seconds()) +
               "s");
}

void check_plane_rotation_decomposition() {
    Timer timer;
    double worst_scaled = 0.0;
    bool counts = true;
    for (const std::size_t n : {2u, 4u, 8u, 16u}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const UnitaryMatrix v = haar_random_unitary(n, 40000 + seed);
            const auto dec = decompose_plane_rotations(v);
            counts = counts && dec.rotations.size() == n * (n - 1) / 2;
            Matrix rebuilt = Matrix::identity(n);
            for (const auto &rot : dec.rotations) {
                rebuilt = mat_mul(rebuilt, plane_rotation_matrix(n, rot).mat());
            }
            rebuilt = mat_mul(rebuilt, ht::diag_oracle(dec.phases.d));
            worst_scaled = std::max(
                worst_scaled, frobenius_distance(rebuilt, v.mat()) /
                                  static_cast<double>(n));
        }
    }
    report(5, "plane-rotation elimination: counts and reconstruction",
           counts && worst_scaled <= 1e-9,
           "worst err/N " + fmt(worst_scaled) + " <= 1e-9, " +
               fmt(timer.seconds()) + "s");
}

void check_two_level_assembly() {
    Timer timer;
    double worst_scaled = 0.0;
    bool counts = true;
    bool fixed_exactly = true;
    for (const std::size_t n : {2u, 4u, 8u, 16u}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const UnitaryMatrix v = haar_random_unitary(n, 50000 + seed);
            const auto factors = assemble_two_level(v);
            counts = counts && factors.size() == n * (n - 1) / 2;
            worst_scaled = std::max(
                worst_scaled,
                frobenius_distance(reconstruct_two_level(factors, n).mat(),
                                   v.mat()) /
                    static_cast<double>(n));
            for (const auto &f : factors) {
                const UnitaryMatrix m = embed_two_level(n, f.i, f.j, f.block);
                for (std::size_t col = 0; col < n && fixed_exactly; ++col) {
                    if (col == f.i || col == f.j) {
                        continue;
                    }
                    for (std::size_t row = 0; row < n; ++row) {
                        if (m(row, col) !=
                            Complex(row == col ? 1.0 : 0.0, 0.0)) {
                            fixed_exactly = false;
                            break;
                        }
                    }
                }
            }
        }
    }
    report(6, "two-level factorization: round trip and off-pair identity",
           counts && fixed_exactly && worst_scaled <= 1e-9,
           "worst err/N " + fmt(worst_scaled) + " <= 1e-9, off-pair exact: " +
               (fixed_exactly ? "yes" : "no") + ", " + fmt(timer.seconds()) +
               "s");
}

void check_permutation_realization() {
    Timer timer;
    bool ok = true;
    std::mt19937_64 rng(2007);
    for (const std::size_t n : {2u, 3u, 4u}) {
        const std::size_t dim = std::size_t{1} << n;

        // Every transposition.
        for (std::size_t a = 0; a < dim && ok; ++a) {
            for (std::size_t b = a + 1; b < dim && ok; ++b) {
                std::vector<std::size_t> image(dim);
                std::iota(image.begin(), image.end(), std::size_t{0});
                std::swap(image[a], image[b]);
                const Permutation p(image);
                const UnitaryMatrix u = circuit_unitary(
                    word_to_circuit(word_for_permutation(p), n));
                ok = frobenius_distance(u.mat(),
                                        permutation_matrix(p).mat()) == 0.0;
            }
        }

        // Random permutations.
        for (int trial = 0; trial < 50 && ok; ++trial) {
            const Permutation p = ht::random_permutation(dim, rng);
            const UnitaryMatrix u =
                circuit_unitary(word_to_circuit(word_for_permutation(p), n));
            ok = frobenius_distance(u.mat(), permutation_matrix(p).mat()) ==
                 0.0;
        }

        // Increment circuit, every basis state.
        const Circuit inc = increment_circuit(n);
        for (std::size_t x = 0; x < dim && ok; ++x) {
            const StateVector out = apply_circuit(inc, basis_state(n, x));
            for (std::size_t r = 0; r < dim; ++r) {
                if (out.amplitudes[r] !=
                    Complex(r == (x + 1) % dim ? 1.0 : 0.0, 0.0)) {
                    ok = false;
                    break;
                }
            }
        }
    }
    report(7, "generator words and increments route states exactly", ok,
           std::string("zero tolerance, ") + fmt(timer.seconds()) + "s");
}

void check_full_compiler() {
    Timer timer;
    double worst_scaled = 0.0;
    for (const std::size_t n : {1u, 2u, 3u}) {
        const std::size_t dim = std::size_t{1} << n;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const UnitaryMatrix v = haar_random_unitary(dim, 60000 + seed);
            const CompilationResult res =
                compile_unitary(v, 1e-7 * static_cast<double>(dim));
            worst_scaled = std::max(worst_scaled, res.reconstruction_error /
                                                      (1e-7 * dim));
        }
    }

    // Four-qubit smoke sample.
    Timer smoke_timer;
    const UnitaryMatrix big = haar_random_unitary(16, 987654321);
    const CompilationResult big_res = compile_unitary(big, 1e-6);
    const double smoke_seconds = smoke_timer.seconds();

    report(8, "full compiler round trips at 1..3 qubits plus a 4-qubit smoke",
           worst_scaled <= 1.0 && big_res.reconstruction_error <= 1e-6 &&
               smoke_seconds < 120.0,
           "worst err/budget " + fmt(worst_scaled) + " <= 1, smoke err " +
               fmt(big_res.reconstruction_error) + " <= 1e-6 in " +
               fmt(smoke_seconds) + "s (< 120s), total " +
               fmt(timer.seconds()) + "s");
}

void check_qft() {
    Timer timer;
    double worst = 0.0;
    for (std::size_t m = 1; m <= 4; ++m) {
        const Matrix f = build_qft({m, true});
        const std::size_t dim = std::size_t{1} << m;
        for (std::size_t a = 0; a < dim; ++a) {
            std::vector<Complex> column{Complex(1.0, 0.0)};
            for (const auto &factor : qft_factored_state(a, m)) {
                column = ht::kron(column, factor.amplitudes);
            }
            double err = 0.0;
            for (std::size_t y = 0; y < dim; ++y) {
                err += std::norm(column[y] - f(y, a));
            }
            worst = std::max(worst, std::sqrt(err));
        }
    }

    const Matrix f2 = build_qft({2, true});
    const double compile_err =
        compile_unitary(UnitaryMatrix(f2)).reconstruction_error;

    const Matrix f1 = build_qft({1, true});
    const Matrix h = gate_matrix(GateKind::H).mat();
    const bool exact_h = f1.entries() == h.entries();

    report(9, "transform factorization, compiled transform, exact Hadamard",
           worst <= 1e-12 && compile_err <= 1e-8 && exact_h,
           "worst column err " + fmt(worst) + " <= 1e-12, compiled err " +
               fmt(compile_err) + " <= 1e-8, m=1 equals H exactly: " +
               (exact_h ? "yes" : "no") + ", " + fmt(timer.seconds()) + "s");
}

void check_witness() {
    Timer timer;
    const WitnessReport w = hadamard_group_witness();
    report(10, "Hadamard closure has two elements, far from P(pi/2)",
           w.closure_size == 2 && w.min_distance_p_half_pi > 0.5,
           "size " + std::to_string(w.closure_size) + ", distance " +
               fmt(w.min_distance_p_half_pi) + " > 0.5, " +
               fmt(timer.seconds()) + "s");
}

void check_cli_contract() {
    Timer timer;
    const char *cli = std::getenv("HPSYNTH_CLI");
    if (cli == nullptr) {
        report(11, "CLI compile/verify pipeline", false,
               "HPSYNTH_CLI is not set");
        return;
    }
    const std::string exe = std::string("\"") + cli + "\"";

    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() /
        ("hpsynth_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string matrix_file = (dir / "input.mat").string();
    const std::string circuit_file = (dir / "compiled.circ").string();

    bool ok = true;
    std::string detail;

    const CommandResult random_run = run_command(
        exe + " random --n 2 --seed 42 --out " + matrix_file);
    ok = ok && random_run.exit_code == 0;

    double compile_err = -1.0;
    const CommandResult compile_run = run_command(
        exe + " compile --in " + matrix_file + " --out " + circuit_file);
    ok = ok && compile_run.exit_code == 0 &&
         parse_key(compile_run.output, "reconstruction_error", compile_err);

    double verify_err = -1.0;
    const CommandResult verify_run = run_command(
        exe + " verify --matrix " + matrix_file + " --circuit " +
        circuit_file);
    ok = ok && verify_run.exit_code == 0 &&
         parse_key(verify_run.output, "frobenius_error", verify_err);

    const bool errors_match =
        compile_err >= 0.0 && verify_err >= 0.0 &&
        std::abs(compile_err - verify_err) <= 1e-12;
    ok = ok && errors_match;
    detail += "compile err " + fmt(compile_err) + ", verify err " +
              fmt(verify_err);

    // Fourier-transform pipeline: qft -> compile -> verify at m = 1.
    const std::string qft_file = (dir / "f1.mat").string();
    const std::string qft_circuit = (dir / "f1.circ").string();
    double qft_err = -1.0;
    const CommandResult qft_run =
        run_command(exe + " qft --m 1 --out " + qft_file);
    const CommandResult qft_compile = run_command(
        exe + " compile --in " + qft_file + " --out " + qft_circuit);
    const CommandResult qft_verify =
        run_command(exe + " verify --matrix " + qft_file + " --circuit " +
                    qft_circuit);
    ok = ok && qft_run.exit_code == 0 && qft_compile.exit_code == 0 &&
         qft_verify.exit_code == 0 &&
         parse_key(qft_verify.output, "frobenius_error", qft_err) &&
         qft_err >= 0.0 && qft_err < 1e-12;
    detail += ", qft m=1 verify err " + fmt(qft_err);

    // Generator-word rewriting of the bottom transposition.
    const CommandResult word_run =
        run_command(exe + " perm-word --n 2 --perm 1,0,2,3");
    ok = ok && word_run.exit_code == 0 &&
         word_run.output.find("word=C- C- T C C") != std::string::npos;

    // A malformed matrix: row two is short. Expect exit 2 and a diagnostic
    // naming line 3.
    const std::string bad_file = (dir / "bad.mat").string();
    {
        std::ofstream bad(bad_file);
        bad << "dim 2\n1 0 0 0\n0 0 1\n";
    }
    const CommandResult bad_run =
        run_command(exe + " compile --in " + bad_file + " --out " +
                    (dir / "bad.circ").string());
    const bool diagnosed = bad_run.exit_code == 2 &&
                           bad_run.output.find("line 3") != std::string::npos;
    ok = ok && diagnosed;
    detail += std::string(", malformed file: exit ") +
              std::to_string(bad_run.exit_code) + " naming line 3: " +
              (diagnosed ? "yes" : "no");

    fs::remove_all(dir);
    report(11, "CLI compile/verify pipeline and malformed-input diagnostic",
           ok, detail + ", " + fmt(timer.seconds()) + "s");
}

}  // namespace

int main() {
    check_not_word_identity();
    check_torus_words();
    check_rotation_words();
    check_u2_synthesis();
    check_plane_rotation_decomposition();
    check_two_level_assembly();
    check_permutation_realization();
    check_full_compiler();
    check_qft();
    check_witness();
    check_cli_contract();

    if (g_failures == 0) {
        std::printf("all 11 acceptance checks passed\n");
    } else {
        std::printf("%d acceptance check(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
