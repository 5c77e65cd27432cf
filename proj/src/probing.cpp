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

#include "eraserlab/probing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eraserlab/errors.hpp"
#include "eraserlab/rng.hpp"

namespace eraserlab {

namespace {

void check_xy(const Matrix& x, const std::vector<int>& y, std::size_t num_classes) {
  if (x.rows() != y.size()) {
    throw DataError("probe: row count " + std::to_string(x.rows()) +
                    " does not match label count " + std::to_string(y.size()));
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0 || static_cast<std::size_t>(y[i]) >= num_classes) {
      throw DataError("probe: label " + std::to_string(y[i]) + " at row " +
                      std::to_string(i) + " outside [0, " +
                      std::to_string(num_classes) + ")");
    }
  }
}

}  // namespace

LinearProbe train_probe(const Matrix& x, const std::vector<int>& y,
                        std::size_t num_classes, const TrainConfig& config) {
  if (num_classes < 2) throw DataError("probe: need at least 2 classes");
  check_xy(x, y, num_classes);
  const std::size_t n = x.rows(), d = x.cols(), k = num_classes;
  if (n < k) throw DataError("probe: need at least as many samples as classes");
  if (!(config.lr > 0.0) || config.epochs == 0 || config.batch == 0 || config.l2 < 0.0) {
    throw ConfigError("probe: lr/epochs/batch must be positive, l2 >= 0");
  }

  Matrix w(k, d);
  std::vector<double> bias(k, 0.0);
  Matrix gw(k, d);
  std::vector<double> gb(k, 0.0);
  std::vector<double> logits(k), probs(k);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(config.seed);

  double epoch_loss = 0.0;
  for (std::size_t epoch = 1; epoch <= config.epochs; ++epoch) {
    const double lr = config.lr / std::sqrt(static_cast<double>(epoch));
    rng.shuffle(order);
    double data_loss = 0.0;

    for (std::size_t start = 0; start < n; start += config.batch) {
      const std::size_t stop = std::min(n, start + config.batch);
      const double inv_batch = 1.0 / static_cast<double>(stop - start);
      std::fill(gw.data().begin(), gw.data().end(), 0.0);
      std::fill(gb.begin(), gb.end(), 0.0);

      for (std::size_t b = start; b < stop; ++b) {
        const auto xi = x.row(order[b]);
        const int label = y[order[b]];

        double max_logit = -1e300;
        for (std::size_t c = 0; c < k; ++c) {
          logits[c] = dot(w.row(c), xi) + bias[c];
          max_logit = std::max(max_logit, logits[c]);
        }
        double sum_exp = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
          probs[c] = std::exp(logits[c] - max_logit);
          sum_exp += probs[c];
        }
        const double log_z = max_logit + std::log(sum_exp);
        data_loss += log_z - logits[static_cast<std::size_t>(label)];

        for (std::size_t c = 0; c < k; ++c) {
          double residual = probs[c] / sum_exp;
          if (c == static_cast<std::size_t>(label)) residual -= 1.0;
          if (residual == 0.0) continue;
          axpy(residual, xi, gw.row(c));
          gb[c] += residual;
        }
      }

      for (std::size_t c = 0; c < k; ++c) {
        auto wr = w.row(c);
        const auto gr = gw.row(c);
        for (std::size_t j = 0; j < d; ++j)
          wr[j] -= lr * (gr[j] * inv_batch + config.l2 * wr[j]);
        bias[c] -= lr * gb[c] * inv_batch;
      }
    }

    double penalty = 0.0;
    for (double v : w.data()) penalty += v * v;
    epoch_loss = data_loss / static_cast<double>(n) + 0.5 * config.l2 * penalty;
    if (!std::isfinite(epoch_loss)) {
      throw NumericalError("probe training loss became non-finite at epoch " +
                           std::to_string(epoch));
    }
  }

  LinearProbe probe;
  probe.weights = std::move(w);
  probe.bias = std::move(bias);
  probe.classes = k;
  probe.train_seed = config.seed;
  probe.epochs_run = config.epochs;
  probe.final_loss = epoch_loss;
  return probe;
}

std::vector<int> predict_classes(const Matrix& weights,
                                 const std::vector<double>& bias, const Matrix& x) {
  if (x.cols() != weights.cols()) throw DataError("predict: dimension mismatch");
  const std::size_t k = weights.rows();
  std::vector<int> preds(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto xi = x.row(i);
    int best = 0;
    double best_score = dot(weights.row(0), xi) + bias[0];
    for (std::size_t c = 1; c < k; ++c) {
      const double score = dot(weights.row(c), xi) + bias[c];
      if (score > best_score) {  // strict: ties keep the lowest index
        best_score = score;
        best = static_cast<int>(c);
      }
    }
    preds[i] = best;
  }
  return preds;
}

Matrix log_softmax_scores(const Matrix& weights, const std::vector<double>& bias,
                          const Matrix& x) {
  if (x.cols() != weights.cols()) throw DataError("log_softmax: dimension mismatch");
  const std::size_t k = weights.rows();
  Matrix out(x.rows(), k);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto xi = x.row(i);
    auto row = out.row(i);
    double max_logit = -1e300;
    for (std::size_t c = 0; c < k; ++c) {
      row[c] = dot(weights.row(c), xi) + bias[c];
      max_logit = std::max(max_logit, row[c]);
    }
    double sum_exp = 0.0;
    for (std::size_t c = 0; c < k; ++c) sum_exp += std::exp(row[c] - max_logit);
    const double log_z = max_logit + std::log(sum_exp);
    for (std::size_t c = 0; c < k; ++c) row[c] -= log_z;
  }
  return out;
}

ProbeReport evaluate_probe(const LinearProbe& probe, const Matrix& x,
                           const std::vector<int>& y) {
  check_xy(x, y, probe.classes);
  const std::vector<int> preds = predict_classes(probe.weights, probe.bias, x);

  ProbeReport report;
  report.n_eval = y.size();
  report.per_class.assign(probe.classes, PerClassStat{});
  std::size_t correct = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto& stat = report.per_class[static_cast<std::size_t>(y[i])];
    stat.count++;
    if (preds[i] == y[i]) {
      stat.correct++;
      ++correct;
    }
  }
  report.accuracy = y.empty() ? 0.0
                              : static_cast<double>(correct) /
                                    static_cast<double>(report.n_eval);
  report.majority_fraction = y.empty() ? 0.0 : majority_fraction(y);
  report.per_class_accuracy.resize(probe.classes, 0.0);
  for (std::size_t c = 0; c < probe.classes; ++c) {
    const auto& stat = report.per_class[c];
    report.per_class_accuracy[c] =
        stat.count == 0 ? 0.0
                        : static_cast<double>(stat.correct) /
                              static_cast<double>(stat.count);
  }
  return report;
}

double majority_fraction(const std::vector<int>& y) {
  if (y.empty()) throw DataError("majority_fraction: empty labels");
  int max_id = 0;
  for (int v : y) {
    if (v < 0) throw DataError("majority_fraction: negative label");
    max_id = std::max(max_id, v);
  }
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_id) + 1, 0);
  for (int v : y) counts[static_cast<std::size_t>(v)]++;
  const std::size_t top = *std::max_element(counts.begin(), counts.end());
  return static_cast<double>(top) / static_cast<double>(y.size());
}

}  // namespace eraserlab
