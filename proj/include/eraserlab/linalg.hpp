// Copyright 2026 The eraser-lab Authors
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

#include <cstddef>
#include <vector>

#include "eraserlab/matrix.hpp"

namespace eraserlab {

/// Row-orthonormal basis of a subspace of R^dim. `vectors` is k x dim with
/// k <= dim and B * B^T within 1e-10 of the identity.
struct OrthonormalBasis {
  std::size_t dim = 0;
  Matrix vectors;  // k x dim

  std::size_t size() const { return vectors.rows(); }
};

/// Orthonormalizes the rows of `vectors` by modified Gram-Schmidt with one
/// re-orthogonalization pass. A row whose residual norm after deflation is
/// <= tol * (its original norm) is dropped, so the basis size equals the
/// numerical rank of the input. All-zero input yields an empty basis.
OrthonormalBasis orthonormal_basis(const Matrix& vectors, double tol);

/// P = I - B^T B, the orthogonal projector onto the complement of the basis
/// span. Symmetric by construction and idempotent to ~1e-12.
Matrix complement_projector(const OrthonormalBasis& basis);

/// Projector onto the span itself, B^T B.
Matrix span_projector(const OrthonormalBasis& basis);

/// Singular values in descending order, computed by one-sided Jacobi
/// (accurate to machine precision in the largest singular value, no Gram
/// squaring). Throws NumericalError if the sweep cap is exceeded.
std::vector<double> singular_values(const Matrix& x, std::size_t max_sweeps = 64);

/// Number of singular values strictly greater than rel_tol * sigma_max.
std::size_t matrix_rank(const Matrix& x, double rel_tol);

/// Rank with the default relative tolerance 1e-10 * max(rows, cols).
std::size_t matrix_rank(const Matrix& x);

/// The default rank tolerance; recorded in reports so the chosen constant
/// is auditable.
double default_rank_rel_tol(std::size_t rows, std::size_t cols);

struct RowCosineResult {
  double mean = 0.0;       ///< mean cosine over usable rows; 0 when none usable
  std::size_t used = 0;    ///< rows with both norms nonzero
  std::size_t skipped = 0; ///< rows skipped because either side is all-zero
};

/// Mean over rows of cos(x_i, y_i). Rows where either vector has zero norm
/// have no defined cosine; they are skipped and counted instead of being
/// scored as 0, so the mean is not biased by them.
RowCosineResult mean_row_cosine(const Matrix& x, const Matrix& y);

/// Eigendecomposition S = Q diag(values) Q^T of a symmetric matrix.
/// `vectors` holds the eigenvectors as columns, ordered like `values`
/// (descending). Each eigenvector is sign-fixed so its largest-magnitude
/// entry is positive.
struct SymEig {
  std::vector<double> values;
  Matrix vectors;  // n x n, column j pairs with values[j]
};

/// Cyclic Jacobi for symmetric matrices. The input is symmetrized as
/// (S + S^T)/2 first; asymmetry beyond 1e-8 * max(1, |S|_max) is an error,
/// as is failing to converge within `max_sweeps` sweeps.
SymEig sym_eig(const Matrix& s, std::size_t max_sweeps = 64);

struct PsdInvSqrtResult {
  Matrix w;       ///< pseudo-inverse square root: Q L^{-1/2} Q^T over kept modes
  Matrix w_pinv;  ///< its pseudo-inverse: Q L^{1/2} Q^T
  std::size_t rank = 0;
};

/// Inverse square root of a PSD matrix via sym_eig. Eigenvalues in
/// (-rel_tol * lambda_max, rel_tol * lambda_max] are treated as zero and
/// excluded; an eigenvalue below -rel_tol * lambda_max means the input is
/// indefinite and raises NumericalError. W * S * W approximates the
/// orthogonal projector onto range(S).
PsdInvSqrtResult psd_inv_sqrt(const Matrix& s, double rel_tol);

}  // namespace eraserlab
