// Copyright 2026 The DFML Reader Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Resolves every node of a document to absolute positions. Shared by the
// validator (which reports the issues) and the linearizer (which refuses to
// run while any error remains).

#ifndef DFML_SRC_LAYOUT_H_
#define DFML_SRC_LAYOUT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "dfml/model.h"

namespace dfml::internal {

struct PlacedNode {
  const FormatNode* node = nullptr;
  std::string name;
  std::string path;
  // Absolute position of the first occurrence, and the end of the node's
  // whole extent (all repetitions). `end` coordinates may be kOpen.
  Position start;
  Position end;

  // Leaves: width of one value (kOpen = to end of file / line) and the
  // number of consecutive values (kOpen allowed in byte mode).
  std::int64_t unit_length = 0;
  std::int64_t count = 1;

  // Groups: stride between occurrences (bytes, or lines in char mode; kOpen
  // when the body is open-ended) and the occurrence count.
  std::int64_t interval = 0;
  std::int64_t repetition = 1;

  std::vector<PlacedNode> children;
};

struct Layout {
  Mode mode = Mode::kByte;
  std::vector<PlacedNode> roots;
  std::vector<Issue> issues;

  bool has_errors() const;
};

Layout ComputeLayout(const DfmlDocument& document);

}  // namespace dfml::internal

#endif  // DFML_SRC_LAYOUT_H_
