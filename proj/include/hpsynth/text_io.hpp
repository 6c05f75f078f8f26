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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hpsynth/circuit.hpp"
#include "hpsynth/matrix.hpp"

namespace hpsynth {

// Matrix files: a `dim N` header, then N rows of 2N floats (re im pairs,
// row-major). Circuit files: a `qubits n` header, then one gate per line in
// application order: `H t=<int> c=<comma-list-or-empty>`, same for X, and
// `P t=... c=... theta=<float>`. Both formats allow blank lines and
// `#`-prefixed comment lines, and serialize floats with 17 significant
// digits so write-then-read is value identical.

/// Parse failure carrying the 1-based offending line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &message);

    std::size_t line() const { return line_; }
    const std::string &message() const { return message_; }

  private:
    std::size_t line_;
    std::string message_;
};

void write_matrix(std::ostream &os, const Matrix &m);
Matrix read_matrix(std::istream &is);

void write_circuit(std::ostream &os, const Circuit &c);
Circuit read_circuit(std::istream &is);

std::string matrix_to_text(const Matrix &m);
Matrix matrix_from_text(const std::string &text);
std::string circuit_to_text(const Circuit &c);
Circuit circuit_from_text(const std::string &text);

void write_matrix_file(const std::string &path, const Matrix &m);
Matrix read_matrix_file(const std::string &path);
void write_circuit_file(const std::string &path, const Circuit &c);
Circuit read_circuit_file(const std::string &path);

}  // namespace hpsynth
