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

// Flattens a validated description into an ordered list of read
// instructions. Each instruction carries where its first value starts, how
// wide one value is, and the loops (stride and count) that produce its
// further occurrences.

#ifndef DFML_LINEARIZER_H_
#define DFML_LINEARIZER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dfml/model.h"

namespace dfml {

// Direction a loop advances in. Byte mode always advances along the column
// (byte offset); char-mode groups advance by lines.
enum class Axis { kColumn, kLine };

struct Loop {
  // Index into LinearItem::segments that this loop's occurrence number
  // belongs to.
  std::size_t segment = 0;
  std::int64_t interval = 0;
  // kOpen: repeat until the end of the data.
  std::int64_t repetition = 1;
  Axis axis = Axis::kColumn;
  // Absolute start of the first occurrence of the looped node.
  Position origin;

  friend bool operator==(const Loop&, const Loop&) = default;
};

struct LinearItem {
  std::string name;
  std::string path;
  std::vector<std::string> segments;
  NodeKind kind = NodeKind::kDataType;
  std::optional<PrimitiveType> dtype;
  std::optional<SeparatorType> separator;
  Position start;
  // Width of one value; kOpen runs to the end of the file (byte mode) or the
  // end of the line (char mode). Line terminators have length 1.
  std::int64_t length = 0;
  // Innermost loop, or interval 0 / repetition 1 when the item occurs once.
  std::int64_t interval = 0;
  std::int64_t repetition = 1;
  // Outermost first; the last entry is the innermost loop.
  std::vector<Loop> loops;
  std::optional<ByteOrder> byte_order;
  // Set only when the `value` attribute is a literal of the item's type.
  std::optional<std::string> expected_value;

  bool is_separator() const { return kind == NodeKind::kSeparator; }

  friend bool operator==(const LinearItem&, const LinearItem&) = default;
};

struct LinearSequence {
  Mode mode = Mode::kByte;
  std::vector<LinearItem> items;

  const LinearItem* Find(absl::string_view path) const;

  friend bool operator==(const LinearSequence&,
                         const LinearSequence&) = default;
};

// Fails with FailedPrecondition when the document has validation errors
// (for example a group length that is not a multiple of its record length,
// or content following an open-ended group).
absl::StatusOr<LinearSequence> Linearize(const DfmlDocument& document);

// Tab-separated table, one row per item after a header row.
std::string SequenceSummary(const LinearSequence& sequence);

// True when the value text parses as a literal of the type and should be
// checked against the data.
bool IsConstantLiteral(absl::string_view value, PrimitiveType type);

std::string ItemTypeName(const LinearItem& item);

}  // namespace dfml

#endif  // DFML_LINEARIZER_H_
