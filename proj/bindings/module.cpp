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
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hpsynth/compile.hpp"
#include "hpsynth/permutation.hpp"
#include "hpsynth/qft.hpp"
#include "hpsynth/random.hpp"
#include "hpsynth/simulate.hpp"
#include "hpsynth/text_io.hpp"
#include "hpsynth/two_level.hpp"
#include "hpsynth/u2.hpp"
#include "hpsynth/witness.hpp"

namespace py = pybind11;
using namespace hpsynth;

namespace {

using ComplexArray =
    py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Matrix matrix_from_array(const ComplexArray &array) {
    const auto buf = array.request();
    if (buf.ndim != 2 || buf.shape[0] != buf.shape[1] || buf.shape[0] < 1) {
        throw std::invalid_argument("expected a square 2-D complex array");
    }
    const auto dim = static_cast<std::size_t>(buf.shape[0]);
    Matrix m(dim);
    const auto *data = static_cast<const Complex *>(buf.ptr);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = data[r * dim + c];
        }
    }
    return m;
}

UnitaryMatrix unitary_from_array(const ComplexArray &array) {
    return UnitaryMatrix(matrix_from_array(array));
}

py::array_t<Complex> matrix_to_array(const Matrix &m) {
    const auto dim = static_cast<py::ssize_t>(m.dim());
    py::array_t<Complex> out({dim, dim});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t r = 0; r < dim; ++r) {
        for (py::ssize_t c = 0; c < dim; ++c) {
            view(r, c) = m(static_cast<std::size_t>(r),
                           static_cast<std::size_t>(c));
        }
    }
    return out;
}

py::array_t<Complex> state_to_array(const StateVector &s) {
    py::array_t<Complex> out(static_cast<py::ssize_t>(s.amplitudes.size()));
    auto view = out.mutable_unchecked<1>();
    for (py::ssize_t k = 0; k < out.size(); ++k) {
        view(k) = s.amplitudes[static_cast<std::size_t>(k)];
    }
    return out;
}

StateVector state_from_array(
    const py::array_t<Complex, py::array::c_style | py::array::forcecast>
        &array) {
    const auto buf = array.request();
    if (buf.ndim != 1) {
        throw std::invalid_argument("expected a 1-D complex array");
    }
    StateVector s;
    const auto *data = static_cast<const Complex *>(buf.ptr);
    s.amplitudes.assign(data, data + buf.shape[0]);
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Gate synthesis for n-qubit unitaries over controlled "
        "Walsh-Hadamard, phase-shift and NOT gates, with a statevector "
        "simulator for verification";
    m.attr("__version__") = "0.1.0";

    py::enum_<GateKind>(m, "GateKind")
        .value("H", GateKind::H)
        .value("P", GateKind::P)
        .value("X", GateKind::X);

    py::class_<Gate>(m, "Gate")
        .def_readonly("kind", &Gate::kind)
        .def_readonly("target", &Gate::target)
        .def_readonly("controls", &Gate::controls)
        .def_readonly("theta", &Gate::theta)
        .def_static("h", &Gate::h, py::arg("target"),
                    py::arg("controls") = std::vector<std::size_t>{})
        .def_static("p", &Gate::p, py::arg("theta"), py::arg("target"),
                    py::arg("controls") = std::vector<std::size_t>{})
        .def_static("x", &Gate::x, py::arg("target"),
                    py::arg("controls") = std::vector<std::size_t>{});

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<std::size_t>(), py::arg("qubit_count"))
        .def_property_readonly("qubit_count", &Circuit::qubit_count)
        .def_property_readonly("dim", &Circuit::dim)
        .def_property_readonly("gates", &Circuit::gates)
        .def("append", &Circuit::append, py::arg("gate"))
        .def("extend", &Circuit::extend, py::arg("other"))
        .def("__len__",
             [](const Circuit &c) { return c.gates().size(); });

    py::class_<GateStats>(m, "GateStats")
        .def_readonly("h_gates", &GateStats::h_gates)
        .def_readonly("p_gates", &GateStats::p_gates)
        .def_readonly("x_gates", &GateStats::x_gates)
        .def_readonly("total", &GateStats::total)
        .def_readonly("max_controls", &GateStats::max_controls);

    py::class_<EulerAngles>(m, "EulerAngles")
        .def(py::init([](double delta, double alpha, double omega,
                         double beta) {
                 return EulerAngles{delta, alpha, omega, beta};
             }),
             py::arg("delta"), py::arg("alpha"), py::arg("omega"),
             py::arg("beta"))
        .def_readonly("delta", &EulerAngles::delta)
        .def_readonly("alpha", &EulerAngles::alpha)
        .def_readonly("omega", &EulerAngles::omega)
        .def_readonly("beta", &EulerAngles::beta);

    py::class_<HPGate>(m, "HPGate")
        .def_readonly("kind", &HPGate::kind)
        .def_readonly("theta", &HPGate::theta)
        .def_static("h", &HPGate::h)
        .def_static("p", &HPGate::p, py::arg("theta"));

    py::class_<PlaneRotation>(m, "PlaneRotation")
        .def(py::init([](std::size_t p, std::size_t q, double phi,
                         double sigma) {
                 return PlaneRotation{p, q, phi, sigma};
             }),
             py::arg("p"), py::arg("q"), py::arg("phi"), py::arg("sigma"))
        .def_readonly("p", &PlaneRotation::p)
        .def_readonly("q", &PlaneRotation::q)
        .def_readonly("phi", &PlaneRotation::phi)
        .def_readonly("sigma", &PlaneRotation::sigma);

    py::class_<TwoLevelFactor>(m, "TwoLevelFactor")
        .def_readonly("i", &TwoLevelFactor::i)
        .def_readonly("j", &TwoLevelFactor::j)
        .def_property_readonly("block", [](const TwoLevelFactor &f) {
            return matrix_to_array(f.block.mat());
        });

    py::class_<CompilationResult>(m, "CompilationResult")
        .def_readonly("circuit", &CompilationResult::circuit)
        .def_readonly("reconstruction_error",
                      &CompilationResult::reconstruction_error)
        .def_readonly("ledger", &CompilationResult::ledger)
        .def_readonly("factor_count", &CompilationResult::factor_count);

    py::class_<WitnessReport>(m, "WitnessReport")
        .def_readonly("closure_size", &WitnessReport::closure_size)
        .def_readonly("min_distance_p_half_pi",
                      &WitnessReport::min_distance_p_half_pi)
        .def_readonly("min_distance_p_pi", &WitnessReport::min_distance_p_pi);

    py::enum_<GenSymbol>(m, "GenSymbol")
        .value("Transposition", GenSymbol::Transposition)
        .value("Increment", GenSymbol::Increment)
        .value("Decrement", GenSymbol::Decrement);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<std::size_t>>(), py::arg("image"))
        .def_static("identity", &Permutation::identity, py::arg("n_states"))
        .def_property_readonly("image", &Permutation::image)
        .def("__len__", &Permutation::size)
        .def("__call__", &Permutation::operator(), py::arg("x"));

    // linalg
    m.def(
        "haar_random_unitary",
        [](std::size_t dim, std::uint64_t seed) {
            return matrix_to_array(haar_random_unitary(dim, seed).mat());
        },
        py::arg("dim"), py::arg("seed"));
    m.def(
        "unitarity_defect",
        [](const ComplexArray &a) { return unitarity_defect(matrix_from_array(a)); },
        py::arg("a"));
    m.def(
        "frobenius_distance",
        [](const ComplexArray &a, const ComplexArray &b) {
            return frobenius_distance(matrix_from_array(a),
                                      matrix_from_array(b));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "embed_two_level",
        [](std::size_t dim, std::size_t i, std::size_t j,
           const ComplexArray &block) {
            return matrix_to_array(
                embed_two_level(dim, i, j, unitary_from_array(block)).mat());
        },
        py::arg("dim"), py::arg("i"), py::arg("j"), py::arg("block"));

    // gate model
    m.def(
        "gate_matrix",
        [](GateKind kind, double theta) {
            return matrix_to_array(gate_matrix(kind, theta).mat());
        },
        py::arg("kind"), py::arg("theta") = 0.0);
    m.def(
        "circuit_unitary",
        [](const Circuit &c) {
            return matrix_to_array(circuit_unitary(c).mat());
        },
        py::arg("circuit"));
    m.def(
        "apply_circuit",
        [](const Circuit &c,
           const py::array_t<Complex,
                             py::array::c_style | py::array::forcecast>
               &state) {
            return state_to_array(apply_circuit(c, state_from_array(state)));
        },
        py::arg("circuit"), py::arg("state"));
    m.def("gate_stats", &gate_stats, py::arg("circuit"));

    // 2x2 synthesis
    m.def(
        "compose_euler",
        [](const EulerAngles &e) { return matrix_to_array(compose_euler(e).mat()); },
        py::arg("angles"));
    m.def(
        "euler_decompose",
        [](const ComplexArray &a) {
            return euler_decompose(unitary_from_array(a));
        },
        py::arg("a"));
    m.def("x_word", &x_word);
    m.def("torus_word", &torus_word, py::arg("omega1"), py::arg("omega2"));
    m.def("rotation_word", &rotation_word, py::arg("omega"));
    m.def(
        "synthesize_u2",
        [](const ComplexArray &a) {
            return synthesize_u2(unitary_from_array(a));
        },
        py::arg("a"));
    m.def(
        "evaluate_hp_word",
        [](const HPWord &word) {
            return matrix_to_array(evaluate_hp_word(word).mat());
        },
        py::arg("word"));

    // two-level factorization
    m.def(
        "plane_rotation_matrix",
        [](std::size_t dim, const PlaneRotation &rot) {
            return matrix_to_array(plane_rotation_matrix(dim, rot).mat());
        },
        py::arg("dim"), py::arg("rotation"));
    m.def(
        "decompose_plane_rotations",
        [](const ComplexArray &v) {
            const auto dec = decompose_plane_rotations(unitary_from_array(v));
            return py::make_tuple(dec.rotations, dec.phases.d);
        },
        py::arg("v"),
        "Returns (rotations, diagonal_phases) with the rotations in "
        "left-to-right matrix order");
    m.def(
        "assemble_two_level",
        [](const ComplexArray &v) {
            return assemble_two_level(unitary_from_array(v));
        },
        py::arg("v"));
    m.def(
        "reconstruct_two_level",
        [](const std::vector<TwoLevelFactor> &factors, std::size_t dim) {
            return matrix_to_array(reconstruct_two_level(factors, dim).mat());
        },
        py::arg("factors"), py::arg("dim"));

    // permutations
    m.def("transposition_circuit", &transposition_circuit,
          py::arg("qubit_count"));
    m.def("increment_circuit", &increment_circuit, py::arg("qubit_count"));
    m.def("word_for_permutation", &word_for_permutation, py::arg("perm"));
    m.def("word_to_circuit", &word_to_circuit, py::arg("word"),
          py::arg("qubit_count"));
    m.def("pair_placement_permutation", &pair_placement_permutation,
          py::arg("i"), py::arg("j"), py::arg("n_states"));
    m.def(
        "permutation_matrix",
        [](const Permutation &p) {
            return matrix_to_array(permutation_matrix(p).mat());
        },
        py::arg("perm"));

    // compiler
    m.def("default_compile_tolerance", &default_compile_tolerance,
          py::arg("qubit_count"));
    m.def(
        "compile_two_level",
        [](std::size_t i, std::size_t j, const ComplexArray &block,
           std::size_t qubit_count) {
            return compile_two_level(
                TwoLevelFactor{i, j, unitary_from_array(block)}, qubit_count);
        },
        py::arg("i"), py::arg("j"), py::arg("block"), py::arg("qubit_count"));
    m.def(
        "compile_unitary",
        [](const ComplexArray &v, std::optional<double> tolerance) {
            const UnitaryMatrix u = unitary_from_array(v);
            return tolerance ? compile_unitary(u, *tolerance)
                             : compile_unitary(u);
        },
        py::arg("v"), py::arg("tolerance") = std::nullopt);

    // transforms and the witness
    m.def(
        "build_qft",
        [](std::size_t m_value, bool normalized) {
            return matrix_to_array(build_qft({m_value, normalized}));
        },
        py::arg("m"), py::arg("normalized") = true);
    m.def(
        "qft_factored_state",
        [](std::size_t a, std::size_t m_value) {
            std::vector<py::array_t<Complex>> factors;
            for (const auto &factor : qft_factored_state(a, m_value)) {
                factors.push_back(state_to_array(factor));
            }
            return factors;
        },
        py::arg("a"), py::arg("m"));
    m.def("hadamard_group_witness", &hadamard_group_witness);

    // text formats
    m.def(
        "matrix_to_text",
        [](const ComplexArray &a) {
            return matrix_to_text(matrix_from_array(a));
        },
        py::arg("a"));
    m.def(
        "matrix_from_text",
        [](const std::string &text) {
            return matrix_to_array(matrix_from_text(text));
        },
        py::arg("text"));
    m.def("circuit_to_text", &circuit_to_text, py::arg("circuit"));
    m.def("circuit_from_text", &circuit_from_text, py::arg("text"));

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError",
                                              PyExc_RuntimeError);
}
