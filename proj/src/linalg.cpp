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

#include "qperc/linalg.hpp"

#include <cmath>
#include <utility>

namespace qperc {

namespace {

void require_finite(const std::vector<Complex>& values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw PreconditionError(std::string(what) + ": non-finite value at index " +
                              std::to_string(i));
    }
  }
}

}  // namespace

StateVector::StateVector(std::size_t dim) : amps_(dim, Complex{0.0, 0.0}) {
  if (dim == 0) throw PreconditionError("StateVector: dimension must be positive");
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw PreconditionError("StateVector: dimension must be positive");
  require_finite(amps_, "StateVector");
}

bool StateVector::is_normalized(double tol) const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::abs(s - 1.0) <= tol;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw PreconditionError("Matrix: dimensions must be positive");
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw PreconditionError("Matrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw DimensionError("Matrix: " + std::to_string(entries_.size()) +
                         " entries do not fill a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " matrix");
  }
  require_finite(entries_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::string Matrix::shape() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix sum: shapes " + a.shape() + " and " + b.shape() +
                         " differ");
  }
  std::vector<Complex> out(a.entries());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix difference: shapes " + a.shape() + " and " +
                         b.shape() + " differ");
  }
  std::vector<Complex> out(a.entries());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix operator*(Complex s, const Matrix& a) {
  std::vector<Complex> out(a.entries());
  for (Complex& e : out) e *= s;
  return Matrix(a.rows(), a.cols(), std::move(out));
}

Matrix operator*(double s, const Matrix& a) { return Complex{s, 0.0} * a; }

StateVector operator+(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector sum: dims " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + " differ");
  }
  std::vector<Complex> out(a.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return StateVector(std::move(out));
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector difference: dims " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()) + " differ");
  }
  std::vector<Complex> out(a.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return StateVector(std::move(out));
}

StateVector operator*(Complex s, const StateVector& v) {
  std::vector<Complex> out(v.amplitudes());
  for (Complex& e : out) e *= s;
  return StateVector(std::move(out));
}

StateVector operator*(double s, const StateVector& v) {
  return Complex{s, 0.0} * v;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: incompatible shapes " + a.shape() +
                         " and " + b.shape());
  }
  std::vector<Complex> out(a.rows() * b.cols(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out[i * b.cols() + j] += aik * b(k, j);
      }
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(out));
}

Matrix conj_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = std::conj(a(i, j));
    }
  }
  return out;
}

Matrix outer_product(const StateVector& y, const Matrix& x_dual) {
  if (x_dual.rows() != 1) {
    throw DimensionError("outer_product: dual factor must be a single row, got " +
                         x_dual.shape());
  }
  std::vector<Complex> out(y.dim() * x_dual.cols());
  for (std::size_t i = 0; i < y.dim(); ++i) {
    for (std::size_t j = 0; j < x_dual.cols(); ++j) {
      out[i * x_dual.cols() + j] = y[i] * x_dual(0, j);
    }
  }
  return Matrix(y.dim(), x_dual.cols(), std::move(out));
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> out(rows * cols);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out[(i * b.rows() + k) * cols + (j * b.cols() + l)] = a(i, j) * b(k, l);
        }
      }
    }
  }
  return Matrix(rows, cols, std::move(out));
}

StateVector kronecker(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out[i * b.dim() + j] = a[i] * b[j];
    }
  }
  return StateVector(std::move(out));
}

StateVector apply(const Matrix& a, const StateVector& v) {
  if (a.cols() != v.dim()) {
    throw DimensionError("apply: matrix " + a.shape() + " cannot act on a vector of dim " +
                         std::to_string(v.dim()));
  }
  std::vector<Complex> out(a.rows(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[i] += a(i, j) * v[j];
    }
  }
  return StateVector(std::move(out));
}

double unitarity_residual(const Matrix& a) {
  const Matrix adag = conj_transpose(a);
  const double left = frobenius_distance(mat_mul(adag, a), Matrix::identity(a.cols()));
  const double right = frobenius_distance(mat_mul(a, adag), Matrix::identity(a.rows()));
  return std::max(left, right);
}

bool is_unitary(const Matrix& a, double tol) {
  return unitarity_residual(a) <= tol;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const Complex& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: shapes " + a.shape() + " and " +
                         b.shape() + " differ");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    s += std::norm(a.entries()[i] - b.entries()[i]);
  }
  return std::sqrt(s);
}

Matrix diag_rect(const std::vector<double>& values, std::size_t rows,
                 std::size_t cols) {
  const std::size_t k = std::min(rows, cols);
  if (values.size() > k) {
    throw DimensionError("diag_rect: " + std::to_string(values.size()) +
                         " diagonal values do not fit a " + std::to_string(rows) +
                         "x" + std::to_string(cols) + " matrix");
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw PreconditionError("diag_rect: non-finite value at index " +
                              std::to_string(i));
    }
    out(i, i) = values[i];
  }
  return out;
}

Matrix dual(const StateVector& v) {
  Matrix out(1, v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out(0, i) = std::conj(v[i]);
  return out;
}

Matrix to_column(const StateVector& v) {
  Matrix out(v.dim(), 1);
  for (std::size_t i = 0; i < v.dim(); ++i) out(i, 0) = v[i];
  return out;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner_product: dims " + std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()) + " differ");
  }
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const StateVector& v) {
  double s = 0.0;
  for (const Complex& a : v.amplitudes()) s += std::norm(a);
  return std::sqrt(s);
}

StateVector normalized(const StateVector& v) {
  const double n = norm(v);
  if (n == 0.0) throw DegenerateInputError("normalized: zero vector");
  return (1.0 / n) * v;
}

}  // namespace qperc
