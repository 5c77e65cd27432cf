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

#include "eraserlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eraserlab/errors.hpp"

namespace eraserlab {

namespace {

// Deflates `v` against every row of `basis` (modified Gram-Schmidt step).
void deflate(std::vector<double>& v, const Matrix& basis, std::size_t rows) {
  for (std::size_t b = 0; b < rows; ++b) {
    const auto u = basis.row(b);
    const double proj = dot(v, u);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= proj * u[j];
  }
}

}  // namespace

OrthonormalBasis orthonormal_basis(const Matrix& vectors, double tol) {
  if (vectors.rows() == 0) throw DataError("orthonormal_basis: no input vectors");
  if (!(tol > 0.0)) throw DataError("orthonormal_basis: tol must be positive");

  const std::size_t d = vectors.cols();
  Matrix kept(std::min(vectors.rows(), d), d);
  std::size_t k = 0;

  std::vector<double> v(d);
  for (std::size_t r = 0; r < vectors.rows(); ++r) {
    const auto src = vectors.row(r);
    std::copy(src.begin(), src.end(), v.begin());
    const double original = norm(v);
    if (original == 0.0) continue;

    deflate(v, kept, k);
    deflate(v, kept, k);  // re-orthogonalization pass
    const double residual = norm(v);
    if (residual <= tol * original) continue;
    if (k == kept.rows()) break;  // span already full

    const double inv = 1.0 / residual;
    auto dst = kept.row(k);
    for (std::size_t j = 0; j < d; ++j) dst[j] = v[j] * inv;
    ++k;
  }

  Matrix out(k, d);
  for (std::size_t i = 0; i < k; ++i) {
    const auto src = kept.row(i);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return OrthonormalBasis{d, std::move(out)};
}

Matrix complement_projector(const OrthonormalBasis& basis) {
  Matrix p = Matrix::identity(basis.dim);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto u = basis.vectors.row(b);
    for (std::size_t i = 0; i < basis.dim; ++i) {
      const double ui = u[i];
      if (ui == 0.0) continue;
      auto pr = p.row(i);
      for (std::size_t j = 0; j < basis.dim; ++j) pr[j] -= ui * u[j];
    }
  }
  return p;
}

Matrix span_projector(const OrthonormalBasis& basis) {
  Matrix p(basis.dim, basis.dim);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto u = basis.vectors.row(b);
    for (std::size_t i = 0; i < basis.dim; ++i) {
      const double ui = u[i];
      if (ui == 0.0) continue;
      auto pr = p.row(i);
      for (std::size_t j = 0; j < basis.dim; ++j) pr[j] += ui * u[j];
    }
  }
  return p;
}

std::vector<double> singular_values(const Matrix& x, std::size_t max_sweeps) {
  // Work column-wise on the thinner side; singular values are shared with
  // the transpose.
  const Matrix& m = (x.rows() >= x.cols()) ? x : transpose(x);
  const std::size_t rows = m.rows(), cols = m.cols();

  // Column-major working copy.
  std::vector<std::vector<double>> col(cols, std::vector<double>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) col[j][i] = m(i, j);

  const double eps = 1e-15;
  bool rotated = true;
  std::size_t sweep = 0;
  while (rotated) {
    if (sweep++ == max_sweeps) {
      throw NumericalError("one-sided Jacobi SVD did not converge within " +
                           std::to_string(max_sweeps) + " sweeps");
    }
    rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double alpha = dot(col[p], col[p]);
        const double beta = dot(col[q], col[q]);
        const double gamma = dot(col[p], col[q]);
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const double vp = col[p][i], vq = col[q][i];
          col[p][i] = c * vp - s * vq;
          col[q][i] = s * vp + c * vq;
        }
      }
    }
  }

  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) sv[j] = norm(col[j]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t matrix_rank(const Matrix& x, double rel_tol) {
  if (x.rows() == 0 || x.cols() == 0) return 0;
  const std::vector<double> sv = singular_values(x);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = rel_tol * sv.front();
  std::size_t rank = 0;
  for (double s : sv)
    if (s > cut) ++rank;
  return rank;
}

double default_rank_rel_tol(std::size_t rows, std::size_t cols) {
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

std::size_t matrix_rank(const Matrix& x) {
  return matrix_rank(x, default_rank_rel_tol(x.rows(), x.cols()));
}

RowCosineResult mean_row_cosine(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DataError("mean_row_cosine: shape mismatch");
  }
  RowCosineResult result;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto xi = x.row(i), yi = y.row(i);
    const double nx = norm(xi), ny = norm(yi);
    if (nx == 0.0 || ny == 0.0) {
      ++result.skipped;
      continue;
    }
    acc += dot(xi, yi) / (nx * ny);
    ++result.used;
  }
  result.mean = result.used > 0 ? acc / static_cast<double>(result.used) : 0.0;
  return result;
}

SymEig sym_eig(const Matrix& s, std::size_t max_sweeps) {
  if (s.rows() != s.cols()) throw DataError("sym_eig: matrix must be square");
  const std::size_t n = s.rows();

  const double scale = std::max(1.0, max_abs(s));
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      asym = std::max(asym, std::abs(s(i, j) - s(j, i)));
  if (asym > 1e-8 * scale) {
    throw DataError("sym_eig: input asymmetry " + std::to_string(asym) +
                    " exceeds tolerance");
  }

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  Matrix q = Matrix::identity(n);

  auto off_norm = [&]() {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) acc += a(i, j) * a(i, j);
    return std::sqrt(2.0 * acc);
  };
  double frob = 0.0;
  for (double v : a.data()) frob += v * v;
  frob = std::sqrt(frob);
  const double threshold = (frob == 0.0) ? 0.0 : 1e-14 * frob;

  std::size_t sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ == max_sweeps) {
      throw NumericalError("cyclic Jacobi did not converge within " +
                           std::to_string(max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t qq = p + 1; qq < n; ++qq) {
        const double apq = a(p, qq);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(qq, qq);
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = c * t;

        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, qq);
          a(i, p) = c * aip - sn * aiq;
          a(i, qq) = sn * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a(p, j), aqj = a(qq, j);
          a(p, j) = c * apj - sn * aqj;
          a(qq, j) = sn * apj + c * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double qip = q(i, p), qiq = q(i, qq);
          q(i, p) = c * qip - sn * qiq;
          q(i, qq) = sn * qip + c * qiq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  SymEig out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t jj = 0; jj < n; ++jj) {
    const std::size_t src = order[jj];
    out.values[jj] = a(src, src);
    // Sign convention: largest-magnitude component positive.
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mag = std::abs(q(i, src));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    const double flip = (q(arg, src) < 0.0) ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, jj) = flip * q(i, src);
  }
  return out;
}

PsdInvSqrtResult psd_inv_sqrt(const Matrix& s, double rel_tol) {
  const SymEig eig = sym_eig(s);
  const std::size_t n = s.rows();
  const double lambda_max = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);

  for (double lambda : eig.values) {
    if (lambda < -rel_tol * std::max(lambda_max, 1e-300)) {
      throw NumericalError("psd_inv_sqrt: matrix is indefinite (eigenvalue " +
                           std::to_string(lambda) + ")");
    }
  }

  PsdInvSqrtResult out;
  out.w = Matrix(n, n);
  out.w_pinv = Matrix(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    const double lambda = std::max(eig.values[m], 0.0);
    if (lambda <= rel_tol * lambda_max || lambda == 0.0) continue;
    ++out.rank;
    const double inv_sqrt = 1.0 / std::sqrt(lambda);
    const double sqrt_l = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const double qi = eig.vectors(i, m);
      if (qi == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double qq = qi * eig.vectors(j, m);
        out.w(i, j) += inv_sqrt * qq;
        out.w_pinv(i, j) += sqrt_l * qq;
      }
    }
  }
  return out;
}

}  // namespace eraserlab
