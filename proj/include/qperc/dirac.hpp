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

#pragma once

// Dirac-notation text for quantum states.
//
//   state := term (('+'|'-') term)*
//   term  := [coeff '*'] ket
//   coeff := real | '(' real ('+'|'-') real 'i' ')'
//   ket   := '|' bit+ '>'
//
// Whitespace between tokens is insignificant. Bit strings are big-endian:
// the leftmost bit is the most significant index bit, so |01> is basis
// index 1 of dimension 4.

#include <string>
#include <string_view>

#include "qperc/linalg.hpp"

namespace qperc {

/// Widest ket accepted by the text interface (2^24 amplitudes).
inline constexpr std::size_t kMaxKetWidth = 24;

/// Basis ket for a bit string, e.g. "101" -> index 5 of dimension 8.
StateVector basis_ket(std::string_view bits);

/// Parses a superposition. The result is NOT normalized; weight rows are
/// legitimately non-normalized, so callers normalize where they need to.
/// Syntax problems -> ParseError with a 1-based column; kets of differing
/// width -> DimensionError.
StateVector parse_state(std::string_view text);

/// Canonical text for a state: terms with |amplitude| > tol in ascending
/// basis order, coefficients to 8 significant digits, unit coefficients
/// omitted. The zero vector formats as "". Round-trips through parse_state
/// within tol. Non-power-of-two dimension -> DimensionError.
std::string format_state(const StateVector& v, double tol = 1e-12);

/// Equal-amplitude superposition of all 2^n basis states, n >= 1.
StateVector uniform_superposition(std::size_t n_qubits);

/// Number of qubits for v.dim == 2^n; anything else -> DimensionError.
std::size_t qubit_count(const StateVector& v);

}  // namespace qperc
