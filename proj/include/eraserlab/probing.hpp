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
#include <vector>

#include "eraserlab/matrix.hpp"

namespace eraserlab {

/// Multinomial-logistic training configuration. Defaults converge on all
/// desk-scale datasets in seconds; the 1/sqrt(epoch) decay keeps late
/// epochs from oscillating.
struct TrainConfig {
  double lr = 0.05;
  std::size_t epochs = 50;
  std::size_t batch = 128;
  double l2 = 1e-4;
  std::uint64_t seed = 0;
};

/// Linear multiclass probe: scores = weights * x + bias, prediction is the
/// argmax (ties broken toward the lowest class index).
struct LinearProbe {
  Matrix weights;            // k x d
  std::vector<double> bias;  // k
  std::size_t classes = 0;
  std::uint64_t train_seed = 0;
  std::size_t epochs_run = 0;
  double final_loss = 0.0;
};

struct PerClassStat {
  std::size_t count = 0;
  std::size_t correct = 0;
};

struct ProbeReport {
  double accuracy = 0.0;
  double majority_fraction = 0.0;
  std::vector<double> per_class_accuracy;  // 0.0 for classes absent from eval
  std::vector<PerClassStat> per_class;
  std::size_t n_eval = 0;
};

/// Trains a multinomial logistic probe with mini-batch gradient descent,
/// seeded shuffling and zero initialization. Deterministic given the seed.
/// Throws NumericalError (naming the epoch) if the loss stops being finite.
LinearProbe train_probe(const Matrix& x, const std::vector<int>& y,
                        std::size_t num_classes, const TrainConfig& config);

/// Exact-count evaluation; accuracy == correct / n_eval with no rounding.
ProbeReport evaluate_probe(const LinearProbe& probe, const Matrix& x,
                           const std::vector<int>& y);

/// Fraction of the most frequent label.
double majority_fraction(const std::vector<int>& y);

/// Argmax predictions for every row (lowest index wins ties). Shared by the
/// probe and the task head.
std::vector<int> predict_classes(const Matrix& weights,
                                 const std::vector<double>& bias, const Matrix& x);

/// Row-wise log-softmax scores of the linear model, n x k.
Matrix log_softmax_scores(const Matrix& weights, const std::vector<double>& bias,
                          const Matrix& x);

}  // namespace eraserlab
