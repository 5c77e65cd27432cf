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
#include <iosfwd>
#include <string>
#include <vector>

#include "eraserlab/labels.hpp"
#include "eraserlab/matrix.hpp"

namespace eraserlab {

// ---------------------------------------------------------------------------
// Binary matrix container.
//
// Layout: 4-byte magic, u32-le rows, u32-le cols, then rows*cols row-major
// little-endian scalars. Magic "EMB1" stores float32 (the embedding wire
// format); magic "EMB8" stores float64 (used inside eraser/probe artifacts,
// where projector idempotence must survive the round trip).
// ---------------------------------------------------------------------------

/// Writes X at 32-bit precision (values are narrowed from the internal
/// 64-bit representation).
void save_embeddings(const std::filesystem::path& path, const Matrix& x);

/// Reads an EMB1 file. Validates magic, header-vs-file length, and payload
/// finiteness; errors carry the byte offset of the problem.
Matrix load_embeddings(const std::filesystem::path& path);

void save_matrix_f64(const std::filesystem::path& path, const Matrix& x);
Matrix load_matrix_f64(const std::filesystem::path& path);

// Stream variants, used to stack blocks inside one artifact file.
void write_matrix_block(std::ostream& out, const Matrix& x, bool f64);
Matrix read_matrix_block(std::istream& in, bool f64, std::uint64_t base_offset);

// ---------------------------------------------------------------------------
// Label files: UTF-8, one label per line, CRLF tolerated.
// ---------------------------------------------------------------------------

void save_labels(const std::filesystem::path& path,
                 const std::vector<std::string>& labels);
std::vector<std::string> load_labels(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Planted-concept generator.
// ---------------------------------------------------------------------------

enum class Split : std::uint8_t { train, dev, test };

std::string to_string(Split split);
Split split_from_string(const std::string& name);

/// A dataset with aligned concept labels, task targets and split tags.
struct EmbeddingSet {
  Matrix x;               // N x d
  ConceptLabels concept_labels;
  std::vector<int> targets;  // in [0, vocab)
  int vocab = 0;
  std::vector<Split> split;
  std::string provenance;  // generator params or import path, free-form JSON

  std::size_t size() const { return x.rows(); }
  void validate() const;

  std::vector<std::size_t> split_indices(Split which) const;
  /// Rows of x restricted to a split, plus the aligned label/target slices.
  Matrix x_subset(const std::vector<std::size_t>& idx) const;
  static std::vector<int> take(const std::vector<int>& v,
                               const std::vector<std::size_t>& idx);
};

struct GeneratorConfig {
  std::size_t n = 5000;
  std::size_t d = 64;
  std::size_t k = 8;   // concept classes
  std::size_t m = 4;   // distractor classes; vocab = k * m
  double noise_sigma = 1.0;
  double concept_scale = 3.0;
  double distractor_scale = 3.0;
  std::uint64_t seed = 7;

  std::size_t vocab() const { return k * m; }
  void validate() const;  // throws ConfigError
};

/// The mutually orthonormal concept (k x d) and distractor (m x d)
/// direction sets the generator plants, exposed so tests can build exact
/// oracles (e.g. the perfect-erasure projector).
struct PlantedDirections {
  Matrix concept_dirs;     // k x d
  Matrix distractor_dirs;  // m x d
};

PlantedDirections planted_directions(const GeneratorConfig& config);

/// Draws x = concept_scale * E_c + distractor_scale * F_s + noise, with
/// target = c * m + s and concept label c. The split assignment is an
/// 80/10/10 seeded shuffle. Bit-identical for identical configs.
EmbeddingSet generate_planted(const GeneratorConfig& config);

// ---------------------------------------------------------------------------
// Run configuration: line-oriented `key = value` under [generate] [erase]
// [probe] [task] [report] sections. Unknown keys and duplicate keys are
// errors; everything omitted keeps its default, and the full effective
// config is echoed into report.json.
// ---------------------------------------------------------------------------

struct EraseConfig {
  std::string method = "mp";
  std::size_t n_directions = 0;  // random/dropout only
  std::size_t max_iters = 60;    // inlp only
  double stop_margin = 0.01;     // inlp only
  std::uint64_t seed = 7;
};

/// Mirror of TrainConfig with an explicit seed default per section.
struct TrainConfigValues {
  double lr = 0.05;
  std::size_t epochs = 50;
  std::size_t batch = 128;
  double l2 = 1e-4;
  std::uint64_t seed = 7;
};

struct RunConfig {
  GeneratorConfig generate;
  EraseConfig erase;
  TrainConfigValues probe;
  TrainConfigValues task;
  std::string report_out = ".";
};

RunConfig parse_config(const std::filesystem::path& path);
RunConfig default_config();

/// FNV-1a 64-bit over a file's bytes, hex-encoded. Used for the manifest's
/// content hashes and for dataset identity checks in `compare`.
std::string fnv1a64_file(const std::filesystem::path& path);
std::string fnv1a64_bytes(const std::string& bytes);

}  // namespace eraserlab
