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

#include "eraserlab/labels.hpp"

#include "eraserlab/errors.hpp"

namespace eraserlab {

void ConceptLabels::validate() const {
  if (num_classes < 1) throw DataError("labels: num_classes must be >= 1");
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0 || ids[i] >= num_classes) {
      throw DataError("labels: id " + std::to_string(ids[i]) + " at row " +
                      std::to_string(i) + " outside [0, " +
                      std::to_string(num_classes) + ")");
    }
  }
  if (!class_names.empty() &&
      class_names.size() != static_cast<std::size_t>(num_classes)) {
    throw DataError("labels: class_names size does not match num_classes");
  }
}

std::vector<std::size_t> ConceptLabels::class_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(num_classes), 0);
  for (int id : ids) counts[static_cast<std::size_t>(id)]++;
  return counts;
}

std::string ConceptLabels::name_of(int id) const {
  if (!class_names.empty() && id >= 0 &&
      static_cast<std::size_t>(id) < class_names.size()) {
    return class_names[static_cast<std::size_t>(id)];
  }
  return "class" + std::to_string(id);
}

}  // namespace eraserlab
