// Copyright 2026 The qperc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qperc/dirac.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace qperc {

namespace {

std::string fmt8(double value) {
  if (value == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", value);
  return buf;
}

// Cursor over the input with 1-based error positions.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance() { ++pos_; }
  std::size_t column() const { return pos_ + 1; }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 0, column());
  }

  double parse_real() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+') ++pos_;  // std::from_chars rejects a leading '+'
    double value = 0.0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      pos_ = start;
      fail("expected a number");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::string parse_ket_bits() {
    expect('|', "'|'");
    std::string bits;
    while (peek() == '0' || peek() == '1') {
      bits.push_back(peek());
      advance();
    }
    if (bits.empty()) fail("expected binary digits inside |...>");
    expect('>', "'>'");
    return bits;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t ket_index(std::string_view bits) {
  std::size_t idx = 0;
  for (char c : bits) idx = (idx << 1) | static_cast<std::size_t>(c - '0');
  return idx;
}

}  // namespace

StateVector basis_ket(std::string_view bits) {
  if (bits.empty()) throw ParseError("empty ket label", 0, 1);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw ParseError("ket label may contain only 0 and 1", 0, i + 1);
    }
  }
  if (bits.size() > kMaxKetWidth) {
    throw DimensionError("ket of " + std::to_string(bits.size()) +
                         " qubits exceeds the supported width of " +
                         std::to_string(kMaxKetWidth));
  }
  StateVector v(std::size_t{1} << bits.size());
  v[ket_index(bits)] = 1.0;
  return v;
}

StateVector parse_state(std::string_view text) {
  Scanner sc(text);
  std::vector<Complex> amps;
  std::size_t width = 0;

  bool first = true;
  while (true) {
    sc.skip_ws();
    if (first && sc.at_end()) sc.fail("expected a state");

    double sign = 1.0;
    if (!first) {
      if (sc.at_end()) break;
      const char c = sc.peek();
      if (c == '+') {
        sc.advance();
      } else if (c == '-') {
        sign = -1.0;
        sc.advance();
      } else {
        sc.fail("expected '+' or '-' between terms");
      }
      sc.skip_ws();
    }

    Complex coeff{1.0, 0.0};
    if (sc.peek() != '|') {
      if (sc.peek() == '(') {
        sc.advance();
        const double re = sc.parse_real();
        sc.skip_ws();
        const char sep = sc.peek();
        if (sep != '+' && sep != '-') sc.fail("expected '+' or '-' inside (re+imi)");
        sc.advance();
        double im = sc.parse_real();
        if (sep == '-') im = -im;
        sc.skip_ws();
        sc.expect('i', "'i'");
        sc.skip_ws();
        sc.expect(')', "')'");
        coeff = Complex{re, im};
      } else {
        coeff = Complex{sc.parse_real(), 0.0};
      }
      sc.skip_ws();
      sc.expect('*', "'*' between coefficient and ket");
      sc.skip_ws();
    }

    const std::size_t ket_col = sc.column();
    const std::string bits = sc.parse_ket_bits();
    if (bits.size() > kMaxKetWidth) {
      throw DimensionError("ket of " + std::to_string(bits.size()) +
                           " qubits exceeds the supported width of " +
                           std::to_string(kMaxKetWidth));
    }
    if (first) {
      width = bits.size();
      amps.assign(std::size_t{1} << width, Complex{0.0, 0.0});
    } else if (bits.size() != width) {
      throw DimensionError("mixed ket widths " + std::to_string(width) + " and " +
                           std::to_string(bits.size()) + " at column " +
                           std::to_string(ket_col));
    }
    amps[ket_index(bits)] += sign * coeff;
    first = false;
  }
  return StateVector(std::move(amps));
}

std::string format_state(const StateVector& v, double tol) {
  std::size_t width = 0;
  std::size_t dim = v.dim();
  while (dim > 1 && (dim & 1) == 0) {
    dim >>= 1;
    ++width;
  }
  if (dim != 1 || width == 0) {
    throw DimensionError("format_state: dim " + std::to_string(v.dim()) +
                         " is not a power of two");
  }

  std::string out;
  for (std::size_t idx = 0; idx < v.dim(); ++idx) {
    const Complex a = v[idx];
    if (std::abs(a) <= tol) continue;

    std::string label = "|";
    for (std::size_t b = width; b-- > 0;) {
      label.push_back((idx >> b) & 1 ? '1' : '0');
    }
    label.push_back('>');

    const bool real_only = std::abs(a.imag()) <= tol;
    if (real_only) {
      const bool negative = a.real() < 0.0;
      const std::string mag = fmt8(std::abs(a.real()));
      std::string term = mag == "1" ? label : mag + "*" + label;
      if (out.empty()) {
        // A leading minus must live inside the coefficient to stay in the
        // grammar, so the first negative term always prints one.
        out = negative ? fmt8(a.real()) + "*" + label : term;
      } else {
        out += negative ? " - " : " + ";
        out += term;
      }
    } else {
      std::string coeff = "(" + fmt8(a.real()) + (a.imag() < 0.0 ? "-" : "+") +
                          fmt8(std::abs(a.imag())) + "i)";
      std::string term = coeff + "*" + label;
      if (!out.empty()) out += " + ";
      out += term;
    }
  }
  return out;
}

StateVector uniform_superposition(std::size_t n_qubits) {
  if (n_qubits == 0) {
    throw PreconditionError("uniform_superposition: need at least one qubit");
  }
  if (n_qubits > kMaxKetWidth) {
    throw DimensionError("uniform_superposition: " + std::to_string(n_qubits) +
                         " qubits exceeds the supported width of " +
                         std::to_string(kMaxKetWidth));
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(std::vector<Complex>(dim, Complex{amp, 0.0}));
}

std::size_t qubit_count(const StateVector& v) {
  std::size_t width = 0;
  std::size_t dim = v.dim();
  while (dim > 1 && (dim & 1) == 0) {
    dim >>= 1;
    ++width;
  }
  if (dim != 1 || width == 0) {
    throw DimensionError("qubit_count: dim " + std::to_string(v.dim()) +
                         " is not a power of two");
  }
  return width;
}

}  // namespace qperc
