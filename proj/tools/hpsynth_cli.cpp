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
// hpsynth: compile unitary matrices into controlled H/P/X circuits and
// verify the results by simulation.
//
// Exit codes: 0 success, 1 verification failure, 2 malformed input.
#include <CLI11.hpp>

#include <bit>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hpsynth/compile.hpp"
#include "hpsynth/permutation.hpp"
#include "hpsynth/qft.hpp"
#include "hpsynth/random.hpp"
#include "hpsynth/simulate.hpp"
#include "hpsynth/text_io.hpp"
#include "hpsynth/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

void print_value(const char *key, double value) {
    std::printf("%s=%.17g\n", key, value);
}

void print_value(const char *key, std::size_t value) {
    std::printf("%s=%zu\n", key, value);
}

void print_stats(const hpsynth::GateStats &stats) {
    print_value("gates_total", stats.total);
    print_value("gates_h", stats.h_gates);
    print_value("gates_p", stats.p_gates);
    print_value("gates_x", stats.x_gates);
    print_value("max_controls", stats.max_controls);
}

// Matrix files fix the dimension; circuits fix the qubit count. Either way
// the default tolerance is 1e-7 * 2^n.
double tolerance_for_dim(std::size_t dim) {
    return 1e-7 * static_cast<double>(dim);
}

std::size_t qubits_for_dim(std::size_t dim, const std::string &what) {
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::runtime_error(what + ": dimension " + std::to_string(dim) +
                                 " is not a power of two (>= 2)");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

int run_compile(const std::string &in_path, const std::string &out_path,
                std::optional<double> tol) {
    const hpsynth::Matrix m = hpsynth::read_matrix_file(in_path);
    const std::size_t qubits = qubits_for_dim(m.dim(), in_path);
    const double tolerance = tol.value_or(tolerance_for_dim(m.dim()));
    const hpsynth::UnitaryMatrix v(m);

    hpsynth::CompilationResult result{hpsynth::Circuit(qubits), 0.0, {}, 0};
    bool passed = true;
    try {
        result = hpsynth::compile_unitary(v, tolerance);
    } catch (const hpsynth::VerificationError &e) {
        result = e.result();
        passed = false;
    }

    hpsynth::write_circuit_file(out_path, result.circuit);
    print_value("dim", m.dim());
    print_value("qubits", qubits);
    print_value("factor_count", result.factor_count);
    print_stats(result.ledger);
    print_value("reconstruction_error", result.reconstruction_error);
    print_value("tolerance", tolerance);
    std::printf("status=%s\n", passed ? "ok" : "verification_failed");
    return passed ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string &matrix_path, const std::string &circuit_path,
               std::optional<double> tol) {
    const hpsynth::Matrix m = hpsynth::read_matrix_file(matrix_path);
    const hpsynth::Circuit c = hpsynth::read_circuit_file(circuit_path);
    if (c.dim() != m.dim()) {
        throw std::runtime_error(
            "matrix dimension " + std::to_string(m.dim()) +
            " does not match circuit dimension " + std::to_string(c.dim()));
    }
    const double tolerance = tol.value_or(tolerance_for_dim(m.dim()));
    const double error =
        hpsynth::frobenius_distance(hpsynth::circuit_unitary(c).mat(), m);
    print_value("frobenius_error", error);
    return error <= tolerance ? kExitOk : kExitVerifyFailed;
}

int run_qft(std::size_t m, bool unnormalized, const std::string &out_path) {
    hpsynth::write_matrix_file(out_path,
                               hpsynth::build_qft({m, !unnormalized}));
    return kExitOk;
}

int run_random(std::size_t qubits, std::uint64_t seed,
               const std::string &out_path) {
    const std::size_t dim = std::size_t{1} << qubits;
    hpsynth::write_matrix_file(out_path,
                               hpsynth::haar_random_unitary(dim, seed).mat());
    return kExitOk;
}

int run_perm_word(std::size_t qubits, const std::string &perm_text) {
    std::vector<std::size_t> image;
    std::istringstream ss(perm_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t consumed = 0;
            const std::size_t value = std::stoull(item, &consumed);
            if (consumed != item.size()) {
                throw std::invalid_argument(item);
            }
            image.push_back(value);
        } catch (const std::exception &) {
            throw std::runtime_error("--perm: '" + item +
                                     "' is not an index");
        }
    }
    const std::size_t dim = std::size_t{1} << qubits;
    if (image.size() != dim) {
        throw std::runtime_error("--perm needs exactly " +
                                 std::to_string(dim) + " images for --n " +
                                 std::to_string(qubits));
    }
    const hpsynth::Permutation perm(image);
    const hpsynth::GeneratorWord word = hpsynth::word_for_permutation(perm);

    std::string rendered;
    for (const auto s : word) {
        if (!rendered.empty()) {
            rendered += ' ';
        }
        switch (s) {
        case hpsynth::GenSymbol::Transposition:
            rendered += 'T';
            break;
        case hpsynth::GenSymbol::Increment:
            rendered += 'C';
            break;
        case hpsynth::GenSymbol::Decrement:
            rendered += "C-";
            break;
        }
    }
    std::printf("word=%s\n", rendered.c_str());
    print_value("symbols", word.size());
    print_value("gate_count",
                hpsynth::word_to_circuit(word, qubits).gates().size());
    return kExitOk;
}

int run_witness() {
    const hpsynth::WitnessReport report = hpsynth::hadamard_group_witness();
    print_value("closure_size", report.closure_size);
    print_value("min_distance_p_half_pi", report.min_distance_p_half_pi);
    print_value("min_distance_p_pi", report.min_distance_p_pi);
    return kExitOk;
}

int run_stats(const std::string &circuit_path) {
    const hpsynth::Circuit c = hpsynth::read_circuit_file(circuit_path);
    print_value("qubits", c.qubit_count());
    print_stats(hpsynth::gate_stats(c));
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Compile unitary matrices into circuits over controlled "
        "Walsh-Hadamard, phase-shift and NOT gates, and verify the "
        "compilations by simulation."};
    app.require_subcommand(1);

    std::string in_path, out_path, matrix_path, circuit_path, perm_text;
    std::size_t m_value = 1;
    std::size_t qubits = 1;
    std::uint64_t seed = 0;
    bool unnormalized = false;
    std::optional<double> tol;

    auto *compile = app.add_subcommand(
        "compile", "Compile a matrix file into a circuit file");
    compile->add_option("--in", in_path, "Input matrix file")->required();
    compile->add_option("--out", out_path, "Output circuit file")->required();
    compile->add_option("--tol", tol,
                        "Reconstruction tolerance (default 1e-7 * 2^n)");

    auto *verify = app.add_subcommand(
        "verify", "Simulate a circuit file and compare against a matrix file");
    verify->add_option("--matrix", matrix_path, "Matrix file")->required();
    verify->add_option("--circuit", circuit_path, "Circuit file")->required();
    verify->add_option("--tol", tol,
                       "Acceptance tolerance (default 1e-7 * 2^n)");

    auto *qft = app.add_subcommand(
        "qft", "Write the Fourier transform matrix on Z_{2^m}");
    qft->add_option("--m", m_value, "Number of qubits")->required();
    qft->add_flag("--unnormalized", unnormalized,
                  "Write the bare root-of-unity table (not unitary)");
    qft->add_option("--out", out_path, "Output matrix file")->required();

    auto *random = app.add_subcommand(
        "random", "Write a Haar-random unitary on n qubits");
    random->add_option("--n", qubits, "Qubit count")->required();
    random->add_option("--seed", seed, "RNG seed")->required();
    random->add_option("--out", out_path, "Output matrix file")->required();

    auto *perm_word = app.add_subcommand(
        "perm-word",
        "Rewrite a basis permutation as a word over the generators "
        "T (top transposition), C (cycle +1) and C- (cycle -1)");
    perm_word->add_option("--n", qubits, "Qubit count")->required();
    perm_word
        ->add_option("--perm", perm_text,
                     "Comma-separated images of 0..2^n-1")
        ->required();

    app.add_subcommand("witness",
                       "Show that the Hadamard gate alone generates only a "
                       "two-element group");

    auto *stats = app.add_subcommand("stats", "Print gate counts of a circuit");
    stats->add_option("--circuit", circuit_path, "Circuit file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (app.got_subcommand(compile)) {
            return run_compile(in_path, out_path, tol);
        }
        if (app.got_subcommand(verify)) {
            return run_verify(matrix_path, circuit_path, tol);
        }
        if (app.got_subcommand(qft)) {
            return run_qft(m_value, unnormalized, out_path);
        }
        if (app.got_subcommand(random)) {
            if (qubits == 0 || qubits > 12) {
                throw std::runtime_error("--n must be in [1, 12]");
            }
            return run_random(qubits, seed, out_path);
        }
        if (app.got_subcommand(perm_word)) {
            if (qubits == 0 || qubits > 12) {
                throw std::runtime_error("--n must be in [1, 12]");
            }
            return run_perm_word(qubits, perm_text);
        }
        if (app.got_subcommand("witness")) {
            return run_witness();
        }
        if (app.got_subcommand(stats)) {
            return run_stats(circuit_path);
        }
    } catch (const hpsynth::ParseError &e) {
        // One line, naming the offending line number.
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
    return kExitBadInput;
}
