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

// Dense complex matrices and state vectors, sized for few-qubit work.
// Everything is double precision, row-major, and value-semantic: operations
// are pure functions, so values can be shared across threads freely.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qperc/errors.hpp"

namespace qperc {

using Complex = std::complex<double>;

/// Default tolerance on the unitarity residual. Well above accumulated
/// rotation error at these sizes, far below any genuine violation.
inline constexpr double kDefaultUnitaryTol = 1e-10;

/// Column vector of complex amplitudes. Construction rejects non-finite
/// entries; normalization is checked only where a caller requires it.
class StateVector {
 public:
  StateVector() = default;

  /// Zero vector of the given dimension (dim >= 1).
  explicit StateVector(std::size_t dim);

  /// Takes ownership of the amplitudes; they must all be finite.
  explicit StateVector(std::vector<Complex> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  /// Whether the squared magnitudes sum to 1 within tol.
  bool is_normalized(double tol = 1e-10) const;

 private:
  std::vector<Complex> amps_;
};

/// Dense rectangular complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;

  /// Zero matrix (rows, cols >= 1).
  Matrix(std::size_t rows, std::size_t cols);

  /// Row-major entries; entries.size() must equal rows*cols and every
  /// entry must be finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  /// "3x4", for error messages.
  std::string shape() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

// -- arithmetic ------------------------------------------------------------

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);
Matrix operator*(double s, const Matrix& a);
StateVector operator+(const StateVector& a, const StateVector& b);
StateVector operator-(const StateVector& a, const StateVector& b);
StateVector operator*(Complex s, const StateVector& v);
StateVector operator*(double s, const StateVector& v);

/// Standard complex matrix product. Requires a.cols == b.rows.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix conj_transpose(const Matrix& a);

/// Ket (x) dual-vector product: entry (i,j) = y_i * x_dual_j. The dual must
/// be a single row; no conjugation is applied to it here.
Matrix outer_product(const StateVector& y, const Matrix& x_dual);

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Kronecker product of kets, e.g. |0> (x) |1> = |01>.
StateVector kronecker(const StateVector& a, const StateVector& b);

/// Matrix-vector product. Requires a.cols == v.dim.
StateVector apply(const Matrix& a, const StateVector& v);

/// max(||a'a - I||_F, ||aa' - I||_F). Checking both sides makes every
/// rectangular matrix fail, as it must.
double unitarity_residual(const Matrix& a);

bool is_unitary(const Matrix& a, double tol = kDefaultUnitaryTol);

double frobenius_norm(const Matrix& a);

/// ||a - b||_F. Requires equal shapes.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// Rectangular matrix with the given values on its main diagonal.
Matrix diag_rect(const std::vector<double>& values, std::size_t rows,
                 std::size_t cols);

/// Bra of v: the 1 x dim conjugate transpose.
Matrix dual(const StateVector& v);

/// v as a dim x 1 column matrix.
Matrix to_column(const StateVector& v);

/// <a|b> = sum conj(a_i) * b_i. Requires equal dims.
Complex inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& v);

/// v / ||v||. Zero vector -> DegenerateInputError.
StateVector normalized(const StateVector& v);

}  // namespace qperc
