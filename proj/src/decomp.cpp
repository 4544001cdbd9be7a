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

#include "qperc/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace qperc {

namespace {

// Column norms below this are too small to yield a usable direction; the
// corresponding left vectors come from the completion instead.
constexpr double kNegligibleColumnNorm = 1e-290;

double column_norm2(const Matrix& w, std::size_t c) {
  double s = 0.0;
  for (std::size_t r = 0; r < w.rows(); ++r) s += std::norm(w(r, c));
  return s;
}

Complex column_dot(const Matrix& w, std::size_t ci, std::size_t cj) {
  Complex s{0.0, 0.0};
  for (std::size_t r = 0; r < w.rows(); ++r) s += std::conj(w(r, ci)) * w(r, cj);
  return s;
}

// [col_i, col_j] <- [col_i, col_j] * R with R = [[cs, sn], [-p*sn, p*cs]],
// where p carries the phase that makes the rotated Gram entry real.
void rotate_columns(Matrix& w, std::size_t i, std::size_t j, double cs, double sn,
                    Complex phase) {
  for (std::size_t r = 0; r < w.rows(); ++r) {
    const Complex wi = w(r, i);
    const Complex wj = phase * w(r, j);
    w(r, i) = cs * wi - sn * wj;
    w(r, j) = sn * wi + cs * wj;
  }
}

double max_relative_gram(const Matrix& w) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < w.cols(); ++i) {
    for (std::size_t j = i + 1; j < w.cols(); ++j) {
      const double denom =
          std::sqrt(column_norm2(w, i)) * std::sqrt(column_norm2(w, j));
      if (denom == 0.0) continue;
      worst = std::max(worst, std::abs(column_dot(w, i, j)) / denom);
    }
  }
  return worst;
}

// Core one-sided Jacobi for rows >= cols. Rotations orthogonalize the
// columns of a working copy while the same rotations accumulate into v;
// at convergence the column norms are the singular values.
SvdResult jacobi_tall(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  double fro2 = 0.0;
  for (const Complex& e : a.entries()) fro2 += std::norm(e);
  if (fro2 == 0.0) {
    return {Matrix::identity(m), std::vector<double>(n, 0.0), Matrix::identity(n)};
  }

  Matrix w = a;
  Matrix v = Matrix::identity(n);

  bool converged = n == 1;
  for (int sweep = 0; sweep < kSvdSweepLimit && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex g = column_dot(w, i, j);
        const double ag = std::abs(g);
        if (ag == 0.0) continue;
        const double aii = column_norm2(w, i);
        const double ajj = column_norm2(w, j);
        if (aii == 0.0 || ajj == 0.0) continue;
        const double denom = std::sqrt(aii) * std::sqrt(ajj);
        if (denom == 0.0 || ag <= kSvdConvergenceTol * denom) continue;

        rotated = true;
        const Complex phase = std::conj(g) / ag;
        const double zeta = (ajj - aii) / (2.0 * ag);
        const double t =
            (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        rotate_columns(w, i, j, cs, sn, phase);
        rotate_columns(v, i, j, cs, sn, phase);
      }
    }
    converged = !rotated;
  }
  if (!converged) {
    throw NumericalError(
        "svd_full: no convergence after " + std::to_string(kSvdSweepLimit) +
        " sweeps; max relative off-diagonal Gram entry " +
        std::to_string(max_relative_gram(w)));
  }

  std::vector<double> sig(n);
  for (std::size_t c = 0; c < n; ++c) sig[c] = std::sqrt(column_norm2(w, c));

  // Descending singular values; stable so equal values keep sweep order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&sig](std::size_t a_, std::size_t b_) { return sig[a_] > sig[b_]; });

  std::vector<double> sigma(n);
  Matrix v_perm(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    sigma[c] = sig[order[c]];
    for (std::size_t r = 0; r < n; ++r) v_perm(r, c) = v(r, order[c]);
  }

  std::size_t kept = 0;
  while (kept < n && sigma[kept] > kNegligibleColumnNorm) ++kept;
  Matrix partial(m, kept);
  for (std::size_t c = 0; c < kept; ++c) {
    const std::size_t src = order[c];
    for (std::size_t r = 0; r < m; ++r) partial(r, c) = w(r, src) / sigma[c];
  }
  Matrix u = kept == m ? std::move(partial) : orthonormal_complete(partial, m);

  return {std::move(u), std::move(sigma), conj_transpose(v_perm)};
}

}  // namespace

SvdResult svd_full(const Matrix& a) {
  if (a.empty()) throw PreconditionError("svd_full: matrix is empty");

  SvdResult r;
  if (a.rows() >= a.cols()) {
    r = jacobi_tall(a);
  } else {
    SvdResult t = jacobi_tall(conj_transpose(a));
    r.u = conj_transpose(t.v_dagger);
    r.sigma = std::move(t.sigma);
    r.v_dagger = conj_transpose(t.u);
  }

  // Deterministic orientation for each computed pair: the largest-magnitude
  // entry of the u-column gets a non-negative real part.
  const std::size_t pairs = std::min(a.rows(), a.cols());
  for (std::size_t c = 0; c < pairs; ++c) {
    std::size_t arg = 0;
    for (std::size_t row = 1; row < r.u.rows(); ++row) {
      if (std::abs(r.u(row, c)) > std::abs(r.u(arg, c))) arg = row;
    }
    if (r.u(arg, c).real() < 0.0) {
      for (std::size_t row = 0; row < r.u.rows(); ++row) r.u(row, c) = -r.u(row, c);
      for (std::size_t col = 0; col < r.v_dagger.cols(); ++col) {
        r.v_dagger(c, col) = -r.v_dagger(c, col);
      }
    }
  }
  return r;
}

Matrix pinv_vector(const StateVector& x) {
  double n2 = 0.0;
  for (const Complex& a : x.amplitudes()) n2 += std::norm(a);
  if (n2 == 0.0) {
    throw DegenerateInputError("pinv_vector: zero vector has no pseudoinverse");
  }
  Matrix out(1, x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out(0, i) = std::conj(x[i]) / n2;
  return out;
}

Matrix pinv_matrix(const Matrix& a) {
  const SvdResult r = svd_full(a);
  const double smax = r.sigma.empty() ? 0.0 : r.sigma.front();
  std::vector<double> inv(r.sigma.size(), 0.0);
  if (smax > 0.0) {
    const double cutoff = kPinvRelativeCutoff * smax;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      if (r.sigma[i] > cutoff) inv[i] = 1.0 / r.sigma[i];
    }
  }
  const Matrix v = conj_transpose(r.v_dagger);
  return mat_mul(mat_mul(v, diag_rect(inv, a.cols(), a.rows())),
                 conj_transpose(r.u));
}

Matrix orthonormal_complete(const Matrix& partial_columns, std::size_t target_dim) {
  const std::size_t k = partial_columns.cols();
  if (partial_columns.rows() != target_dim) {
    throw DimensionError("orthonormal_complete: columns have dim " +
                         std::to_string(partial_columns.rows()) +
                         ", target dim is " + std::to_string(target_dim));
  }
  if (k > target_dim) {
    throw DimensionError("orthonormal_complete: " + std::to_string(k) +
                         " columns exceed target dim " + std::to_string(target_dim));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Complex g{0.0, 0.0};
      for (std::size_t r = 0; r < target_dim; ++r) {
        g += std::conj(partial_columns(r, i)) * partial_columns(r, j);
      }
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - Complex{want, 0.0}) > 1e-10) {
        throw PreconditionError(
            "orthonormal_complete: input columns " + std::to_string(i) + " and " +
            std::to_string(j) + " are not orthonormal (deviation " +
            std::to_string(std::abs(g - Complex{want, 0.0})) + ")");
      }
    }
  }

  Matrix out(target_dim, target_dim);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < target_dim; ++r) out(r, c) = partial_columns(r, c);
  }

  std::size_t count = k;
  for (std::size_t b = 0; b < target_dim && count < target_dim; ++b) {
    std::vector<Complex> v(target_dim, Complex{0.0, 0.0});
    v[b] = 1.0;
    // Two orthogonalization passes keep the result unitary to machine
    // precision even when the basis vector is nearly in the current span.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < count; ++c) {
        Complex proj{0.0, 0.0};
        for (std::size_t r = 0; r < target_dim; ++r) proj += std::conj(out(r, c)) * v[r];
        for (std::size_t r = 0; r < target_dim; ++r) v[r] -= proj * out(r, c);
      }
    }
    double n2 = 0.0;
    for (const Complex& e : v) n2 += std::norm(e);
    const double n = std::sqrt(n2);
    if (n < kCompletionResidualTol) continue;
    for (std::size_t r = 0; r < target_dim; ++r) out(r, count) = v[r] / n;
    ++count;
  }
  if (count < target_dim) {
    throw NumericalError("orthonormal_complete: exhausted the canonical basis at " +
                         std::to_string(count) + " of " + std::to_string(target_dim) +
                         " columns");
  }
  return out;
}

Matrix rect_identity(std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) out(i, i) = 1.0;
  return out;
}

}  // namespace qperc
