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

// Full SVD, Moore-Penrose pseudoinverse, and orthonormal completion for
// small dense complex matrices.

#include <cstddef>
#include <vector>

#include "qperc/linalg.hpp"

namespace qperc {

/// Jacobi sweep budget before giving up with NumericalError.
inline constexpr int kSvdSweepLimit = 60;

/// A column pair counts as orthogonal once its Gram entry drops below this
/// fraction of the product of the column norms.
inline constexpr double kSvdConvergenceTol = 1e-13;

/// Singular values below this fraction of the largest are treated as zero
/// when inverting.
inline constexpr double kPinvRelativeCutoff = 1e-12;

/// Candidate completion vectors whose residual after orthogonalization is
/// shorter than this are skipped.
inline constexpr double kCompletionResidualTol = 1e-8;

/// Full factorization a = u * diag_rect(sigma) * v_dagger.
///
/// u is rows x rows, v_dagger is cols x cols, sigma holds min(rows, cols)
/// non-negative values in descending order. With repeated singular values
/// the individual factors are not unique; only the reconstruction and the
/// unitarity of u and v_dagger are promised. Output is deterministic: fixed
/// cyclic sweep order, stable sorting, canonical-basis completion, and each
/// computed u-column is flipped so its largest-magnitude entry has
/// non-negative real part.
struct SvdResult {
  Matrix u;
  std::vector<double> sigma;
  Matrix v_dagger;
};

/// One-sided Jacobi on the taller orientation (the input is conjugate-
/// transposed first when it is wider than tall).
SvdResult svd_full(const Matrix& a);

/// Pseudoinverse of a nonzero vector: the 1 x dim row x' / (x'x). Equal to
/// the plain dual for normalized kets. Zero vector -> DegenerateInputError.
Matrix pinv_vector(const StateVector& x);

/// Moore-Penrose pseudoinverse via v * sigma^+ * u'.
Matrix pinv_matrix(const Matrix& a);

/// Extends orthonormal columns (target_dim x k, k <= target_dim) to a full
/// square unitary. The inputs are preserved exactly in the leading columns;
/// the rest come from Gram-Schmidt over canonical basis vectors in index
/// order, skipping any that nearly vanish. Non-orthonormal input ->
/// PreconditionError.
Matrix orthonormal_complete(const Matrix& partial_columns, std::size_t target_dim);

/// Ones on the main diagonal, zeros elsewhere. Square input gives the
/// identity; rectangular input gives a partial isometry.
Matrix rect_identity(std::size_t rows, std::size_t cols);

}  // namespace qperc
