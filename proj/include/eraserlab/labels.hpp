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
#include <string>
#include <vector>

namespace eraserlab {

/// Per-row concept class assignment. ids are in [0, num_classes);
/// class_names has one entry per class id.
struct ConceptLabels {
  std::vector<int> ids;
  int num_classes = 0;
  std::vector<std::string> class_names;

  /// Throws DataError on out-of-range ids or a name list of the wrong size.
  void validate() const;

  /// Sample count per class id.
  std::vector<std::size_t> class_counts() const;

  /// Name for a class id; falls back to "class<i>" when names are absent.
  std::string name_of(int id) const;
};

}  // namespace eraserlab
