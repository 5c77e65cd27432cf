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
#include <span>
#include <vector>

namespace eraserlab {

/// Dense row-major matrix of doubles. Storage is 64-bit throughout; the
/// 32-bit precision of the on-disk embedding format is a property of the
/// file layer only. Entries are validated to be finite when a matrix is
/// constructed from caller-provided data or loaded from disk.
class Matrix {
 public:
  Matrix() = default;

  /// Zero-filled rows x cols matrix.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `data` (row-major, rows*cols entries).
  /// Throws DataError if the size does not match or any entry is not finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Basic operations. All are plain sequential loops with a fixed summation
// order so results do not depend on thread count or scheduling.

Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);

/// y = A * x for a rows x cols matrix and x of length cols.
std::vector<double> matvec(const Matrix& a, std::span<const double> x);

Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
void scale_in_place(Matrix& a, double s);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

bool is_exact_identity(const Matrix& a);

/// Column means of a rows x cols matrix (empty input -> zeros of length cols).
std::vector<double> column_means(const Matrix& a);

// Small vector helpers shared across modules.
double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
/// y += s * x
void axpy(double s, std::span<const double> x, std::span<double> y);

}  // namespace eraserlab
