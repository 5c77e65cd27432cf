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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "eraserlab/labels.hpp"
#include "eraserlab/matrix.hpp"
#include "eraserlab/probing.hpp"

namespace eraserlab {

enum class EraseMethod { mp, inlp, leace, random, dropout, identity };

std::string to_string(EraseMethod method);
EraseMethod erase_method_from_string(const std::string& name);

/// A fitted affine eraser x -> A x + b. For the projector methods
/// (mp/inlp/random/dropout) A is a symmetric idempotent matrix and b is
/// zero; LEACE additionally recenters, which keeps the affine map
/// idempotent as a whole.
struct Eraser {
  EraseMethod method = EraseMethod::identity;
  Matrix transform;            // d x d
  std::vector<double> offset;  // d
  std::size_t directions_removed = 0;
  std::size_t iterations = 1;  // probes trained; 1 for the one-shot methods
  std::uint64_t fit_seed = 0;
  bool converged = true;
  std::vector<std::string> class_names;

  std::size_t dim() const { return transform.rows(); }
  bool offset_is_zero() const;
};

/// Identity eraser in dimension d (removes nothing).
Eraser identity_eraser(std::size_t d);

/// Mean Projection: for every class i the direction w_i = u_i - u_r is the
/// gap between the class mean and the unweighted mean of the other classes'
/// means; the eraser projects onto the orthogonal complement of span{w_i}.
/// directions_removed is the numerical rank of the direction set (k-1 for
/// generic data, since the w_i sum to zero).
/// Errors: an empty class or a single-class labeling.
Eraser fit_mp(const Matrix& x, const ConceptLabels& labels);

struct InlpOptions {
  std::size_t max_iters = 60;
  /// Stop once dev accuracy <= dev majority fraction + stop_margin.
  double stop_margin = 0.01;
  /// Fraction of the fit data held out as the stopping dev split.
  double dev_fraction = 0.10;
  std::uint64_t seed = 0;
  TrainConfig probe;  // probe.seed is re-derived per iteration from `seed`
};

/// Iterative nullspace projection. Each round trains a linear probe on the
/// currently-projected data; if the probe still beats the majority baseline
/// on the dev split by more than stop_margin, its k weight rows join the
/// accumulated direction set and the projector is rebuilt from the
/// orthonormal basis of all directions collected so far (one basis realizes
/// the intersection of the per-round nullspaces directly). Hitting the
/// iteration cap without passing the stop test is not an error; the eraser
/// is returned with converged = false.
Eraser fit_inlp(const Matrix& x, const ConceptLabels& labels,
                const InlpOptions& options);

/// LEACE: whiten with W = Sigma_xx^{-1/2}, project out the column space of
/// W * Sigma_xz in the whitened frame, and recenter. Zeroes the
/// cross-covariance between embeddings and one-hot labels, which makes the
/// concept linearly unrecoverable. A single-class labeling has nothing to
/// erase and yields an identity eraser (with a warning on stderr).
Eraser fit_leace(const Matrix& x, const ConceptLabels& labels);

/// Projects out n_directions random (seeded Gaussian, orthonormalized)
/// directions. The information-control baseline.
Eraser fit_random_projection(std::size_t d, std::size_t n_directions,
                             std::uint64_t seed);

/// Zeroes n_columns seeded-random coordinates. The dropout baseline.
Eraser fit_dropout(std::size_t d, std::size_t n_columns, std::uint64_t seed);

/// Row-wise x -> A x + b. An eraser whose transform is exactly the identity
/// (and offset zero) returns the input unchanged, bit for bit.
Matrix apply_eraser(const Eraser& eraser, const Matrix& x);

/// Eraser artifact: one EMB8 block for A, one for b, then JSON metadata.
void save_eraser(const std::filesystem::path& path, const Eraser& eraser);
Eraser load_eraser(const std::filesystem::path& path);

}  // namespace eraserlab
