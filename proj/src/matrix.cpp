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

#include "eraserlab/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "eraserlab/errors.hpp"

namespace eraserlab {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DataError("matrix data length " + std::to_string(data_.size()) +
                    " does not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw DataError("non-finite matrix entry at flat index " + std::to_string(i));
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DataError("matmul shape mismatch: " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) {
    throw DataError("matvec shape mismatch");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("add shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("subtract shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

void scale_in_place(Matrix& a, double s) {
  for (double& v : a.data()) v *= s;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DataError("max_abs_diff shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

bool is_exact_identity(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

std::vector<double> column_means(const Matrix& a) {
  std::vector<double> mu(a.cols(), 0.0);
  if (a.rows() == 0) return mu;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) mu[j] += r[j];
  }
  for (double& v : mu) v /= static_cast<double>(a.rows());
  return mu;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double s, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

}  // namespace eraserlab
