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
#include "hpsynth/text_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace hpsynth {

namespace {

constexpr std::size_t kMaxDim = 4096;

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

bool is_blank_or_comment(const std::string &line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

// Tracks 1-based line numbers and skips blanks and # comments.
class LineReader {
  public:
    explicit LineReader(std::istream &is) : is_(is) {}

    bool next_significant(std::string &line) {
        while (std::getline(is_, line)) {
            ++line_;
            if (!is_blank_or_comment(line)) {
                return true;
            }
        }
        ++line_;  // report EOF at the line where content was expected
        return false;
    }

    std::size_t line() const { return line_; }

  private:
    std::istream &is_;
    std::size_t line_ = 0;
};

std::vector<std::string> split_tokens(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        tokens.push_back(tok);
    }
    return tokens;
}

std::size_t parse_index(const std::string &text, std::size_t line,
                        const std::string &what) {
    std::size_t value = 0;
    std::size_t consumed = 0;
    try {
        value = std::stoull(text, &consumed);
    } catch (const std::exception &) {
        throw ParseError(line, "expected an integer for " + what);
    }
    if (consumed != text.size() || text[0] == '-') {
        throw ParseError(line, "expected an integer for " + what);
    }
    return value;
}

double parse_float(const std::string &text, std::size_t line,
                   const std::string &what) {
    double value = 0.0;
    std::size_t consumed = 0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception &) {
        throw ParseError(line, "expected a number for " + what);
    }
    if (consumed != text.size() || !std::isfinite(value)) {
        throw ParseError(line, "expected a finite number for " + what);
    }
    return value;
}

// "key=value" with a fixed key; returns the value part.
std::string expect_field(const std::vector<std::string> &tokens,
                         std::size_t index, const std::string &key,
                         std::size_t line) {
    if (index >= tokens.size() ||
        tokens[index].compare(0, key.size() + 1, key + "=") != 0) {
        throw ParseError(line, "expected field '" + key + "='");
    }
    return tokens[index].substr(key.size() + 1);
}

std::size_t parse_header(LineReader &reader, const std::string &keyword,
                         std::size_t min_value, std::size_t max_value) {
    std::string line;
    if (!reader.next_significant(line)) {
        throw ParseError(reader.line(), "expected '" + keyword + " N' header");
    }
    const auto tokens = split_tokens(line);
    if (tokens.size() != 2 || tokens[0] != keyword) {
        throw ParseError(reader.line(), "expected '" + keyword + " N' header");
    }
    const std::size_t value = parse_index(tokens[1], reader.line(), keyword);
    if (value < min_value || value > max_value) {
        std::ostringstream msg;
        msg << keyword << " must be in [" << min_value << ", " << max_value
            << "]";
        throw ParseError(reader.line(), msg.str());
    }
    return value;
}

void reject_trailing(LineReader &reader, const char *what) {
    std::string line;
    if (reader.next_significant(line)) {
        throw ParseError(reader.line(),
                         std::string("unexpected content after ") + what);
    }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

void write_matrix(std::ostream &os, const Matrix &m) {
    os << "dim " << m.dim() << "\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        std::string row;
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c != 0) {
                row += ' ';
            }
            row += format_double(m(r, c).real());
            row += ' ';
            row += format_double(m(r, c).imag());
        }
        os << row << "\n";
    }
}

Matrix read_matrix(std::istream &is) {
    LineReader reader(is);
    const std::size_t dim = parse_header(reader, "dim", 1, kMaxDim);

    Matrix m(dim);
    std::string line;
    for (std::size_t r = 0; r < dim; ++r) {
        if (!reader.next_significant(line)) {
            std::ostringstream msg;
            msg << "unexpected end of file: expected matrix row " << r + 1
                << " of " << dim;
            throw ParseError(reader.line(), msg.str());
        }
        const auto tokens = split_tokens(line);
        if (tokens.size() != 2 * dim) {
            std::ostringstream msg;
            msg << "expected " << 2 * dim << " values in matrix row, got "
                << tokens.size();
            throw ParseError(reader.line(), msg.str());
        }
        for (std::size_t c = 0; c < dim; ++c) {
            const double re =
                parse_float(tokens[2 * c], reader.line(), "matrix entry");
            const double im =
                parse_float(tokens[2 * c + 1], reader.line(), "matrix entry");
            m(r, c) = Complex(re, im);
        }
    }
    reject_trailing(reader, "matrix rows");
    return m;
}

void write_circuit(std::ostream &os, const Circuit &c) {
    os << "qubits " << c.qubit_count() << "\n";
    for (const auto &gate : c.gates()) {
        switch (gate.kind) {
        case GateKind::H:
            os << "H";
            break;
        case GateKind::P:
            os << "P";
            break;
        case GateKind::X:
            os << "X";
            break;
        }
        os << " t=" << gate.target << " c=";
        for (std::size_t k = 0; k < gate.controls.size(); ++k) {
            if (k != 0) {
                os << ',';
            }
            os << gate.controls[k];
        }
        if (gate.kind == GateKind::P) {
            os << " theta=" << format_double(gate.theta);
        }
        os << "\n";
    }
}

Circuit read_circuit(std::istream &is) {
    LineReader reader(is);
    const std::size_t qubits = parse_header(reader, "qubits", 1, 24);

    Circuit circuit(qubits);
    std::string line;
    while (reader.next_significant(line)) {
        const auto tokens = split_tokens(line);
        GateKind kind;
        if (tokens[0] == "H") {
            kind = GateKind::H;
        } else if (tokens[0] == "P") {
            kind = GateKind::P;
        } else if (tokens[0] == "X") {
            kind = GateKind::X;
        } else {
            throw ParseError(reader.line(),
                             "unknown gate kind '" + tokens[0] + "'");
        }

        const std::size_t expected_tokens = kind == GateKind::P ? 4u : 3u;
        if (tokens.size() != expected_tokens) {
            throw ParseError(reader.line(), "malformed gate line");
        }

        const std::size_t target = parse_index(
            expect_field(tokens, 1, "t", reader.line()), reader.line(), "t");

        std::vector<std::size_t> controls;
        const std::string clist = expect_field(tokens, 2, "c", reader.line());
        if (!clist.empty()) {
            std::istringstream cs(clist);
            std::string item;
            while (std::getline(cs, item, ',')) {
                controls.push_back(
                    parse_index(item, reader.line(), "control"));
            }
            if (!clist.empty() && clist.back() == ',') {
                throw ParseError(reader.line(), "trailing comma in controls");
            }
        }

        double theta = 0.0;
        if (kind == GateKind::P) {
            theta = parse_float(expect_field(tokens, 3, "theta", reader.line()),
                                reader.line(), "theta");
        }

        try {
            switch (kind) {
            case GateKind::H:
                circuit.append(Gate::h(target, std::move(controls)));
                break;
            case GateKind::P:
                circuit.append(Gate::p(theta, target, std::move(controls)));
                break;
            case GateKind::X:
                circuit.append(Gate::x(target, std::move(controls)));
                break;
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(reader.line(), e.what());
        }
    }
    return circuit;
}

std::string matrix_to_text(const Matrix &m) {
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

Matrix matrix_from_text(const std::string &text) {
    std::istringstream is(text);
    return read_matrix(is);
}

std::string circuit_to_text(const Circuit &c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

Circuit circuit_from_text(const std::string &text) {
    std::istringstream is(text);
    return read_circuit(is);
}

namespace {

void open_or_throw(const std::string &path, std::ifstream &fs) {
    fs.open(path);
    if (!fs) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
}

}  // namespace

void write_matrix_file(const std::string &path, const Matrix &m) {
    std::ofstream fs(path);
    if (!fs) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_matrix(fs, m);
}

Matrix read_matrix_file(const std::string &path) {
    std::ifstream fs;
    open_or_throw(path, fs);
    try {
        return read_matrix(fs);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), "'" + path + "': " + e.message());
    }
}

void write_circuit_file(const std::string &path, const Circuit &c) {
    std::ofstream fs(path);
    if (!fs) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_circuit(fs, c);
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream fs;
    open_or_throw(path, fs);
    try {
        return read_circuit(fs);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), "'" + path + "': " + e.message());
    }
}

}  // namespace hpsynth
