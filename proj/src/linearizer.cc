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

#include "dfml/linearizer.h"

#include <algorithm>
#include <charconv>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/string_view.h"
#include "layout.h"

namespace dfml {
namespace {

using internal::PlacedNode;

class Emitter {
 public:
  explicit Emitter(Mode mode) : mode_(mode) {}

  void Visit(const PlacedNode& node) {
    segments_.push_back(node.name);
    if (node.node->kind == NodeKind::kGroup) {
      const std::int64_t interval =
          node.interval == kOpen ? 0 : node.interval;
      loops_.push_back(Loop{segments_.size() - 1, interval, node.repetition,
                            mode_ == Mode::kByte ? Axis::kColumn : Axis::kLine,
                            node.start});
      for (const PlacedNode& child : node.children) Visit(child);
      loops_.pop_back();
    } else {
      EmitLeaf(node);
    }
    segments_.pop_back();
  }

  std::vector<LinearItem> Take() { return std::move(items_); }

 private:
  void EmitLeaf(const PlacedNode& node) {
    const FormatNode& source = *node.node;
    LinearItem item;
    item.name = node.name;
    item.path = node.path;
    item.segments = segments_;
    item.kind = source.kind;
    item.dtype = source.dtype;
    item.separator = source.separator;
    item.start = node.start;
    item.length = node.unit_length;
    item.loops = loops_;
    if (source.number) {
      // A counted leaf behaves like a group holding one value.
      item.loops.push_back(Loop{segments_.size() - 1, node.unit_length,
                                node.count, Axis::kColumn, node.start});
    }
    if (!item.loops.empty()) {
      item.interval = item.loops.back().interval;
      item.repetition = item.loops.back().repetition;
    }
    item.byte_order = source.byte_order;
    if (source.value && source.dtype &&
        IsConstantLiteral(*source.value, *source.dtype)) {
      item.expected_value = *source.value;
    }
    items_.push_back(std::move(item));
  }

  Mode mode_;
  std::vector<std::string> segments_;
  std::vector<Loop> loops_;
  std::vector<LinearItem> items_;
};

std::string FormatSummaryPosition(const Position& position, Mode mode) {
  if (mode == Mode::kByte) return std::to_string(position.column);
  return absl::StrCat(position.line, ":",
                      position.column == kOpen
                          ? std::string("eol")
                          : std::to_string(position.column));
}

std::string FormatCount(std::int64_t value) {
  return value == kOpen ? std::string("open") : std::to_string(value);
}

template <typename T>
bool ParsesFully(absl::string_view text, T& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return !text.empty() && ec == std::errc() && ptr == end;
}

}  // namespace

const LinearItem* LinearSequence::Find(absl::string_view path) const {
  for (const LinearItem& item : items) {
    if (item.path == path) return &item;
  }
  return nullptr;
}

bool IsConstantLiteral(absl::string_view value, PrimitiveType type) {
  const absl::string_view trimmed = absl::StripAsciiWhitespace(value);
  switch (type) {
    case PrimitiveType::kByte:
    case PrimitiveType::kShort:
    case PrimitiveType::kInteger:
    case PrimitiveType::kLong: {
      std::int64_t parsed = 0;
      if (!ParsesFully(trimmed, parsed)) return false;
      const int bits = static_cast<int>(*IntrinsicLength(type)) * 8;
      if (bits == 64) return true;
      const std::int64_t limit = std::int64_t{1} << (bits - 1);
      return parsed >= -limit && parsed < limit;
    }
    case PrimitiveType::kFloat:
    case PrimitiveType::kDouble: {
      double parsed = 0;
      return ParsesFully(trimmed, parsed);
    }
    case PrimitiveType::kString:
      return !value.empty();
    case PrimitiveType::kChar:
      return value.size() == 1;
  }
  return false;
}

std::string ItemTypeName(const LinearItem& item) {
  if (item.is_separator()) return std::string(SeparatorTypeName(*item.separator));
  return std::string(PrimitiveTypeName(*item.dtype));
}

absl::StatusOr<LinearSequence> Linearize(const DfmlDocument& document) {
  internal::Layout layout = internal::ComputeLayout(document);
  for (const Issue& issue : layout.issues) {
    if (issue.severity == Severity::kError) {
      return absl::FailedPreconditionError(absl::StrCat(
          "inconsistent description: ", issue.node_path, ": ", issue.message));
    }
  }
  Emitter emitter(document.mode);
  for (const PlacedNode& root : layout.roots) emitter.Visit(root);
  LinearSequence sequence;
  sequence.mode = document.mode;
  sequence.items = emitter.Take();
  std::stable_sort(sequence.items.begin(), sequence.items.end(),
                   [](const LinearItem& a, const LinearItem& b) {
                     return PositionLess(a.start, b.start);
                   });
  return sequence;
}

std::string SequenceSummary(const LinearSequence& sequence) {
  std::string out =
      "index\tpath\ttype\tstart\tlength\tinterval\trepetition\tloops\t"
      "byte_order\texpected\n";
  for (std::size_t i = 0; i < sequence.items.size(); ++i) {
    const LinearItem& item = sequence.items[i];
    std::vector<std::string> loops;
    for (const Loop& loop : item.loops) {
      loops.push_back(absl::StrCat(item.segments[loop.segment], "@",
                                   FormatSummaryPosition(loop.origin,
                                                         sequence.mode),
                                   "+", loop.interval,
                                   loop.axis == Axis::kLine ? "L" : "", "x",
                                   FormatCount(loop.repetition)));
    }
    absl::StrAppend(
        &out, i, "\t", item.path, "\t", ItemTypeName(item), "\t",
        FormatSummaryPosition(item.start, sequence.mode), "\t",
        FormatCount(item.length), "\t", item.interval, "\t",
        FormatCount(item.repetition), "\t",
        loops.empty() ? "-" : absl::StrJoin(loops, ";"), "\t",
        item.byte_order ? ByteOrderName(*item.byte_order) : "-", "\t",
        item.expected_value.value_or("-"), "\n");
  }
  return out;
}

}  // namespace dfml
