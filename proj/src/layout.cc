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

#include "layout.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace dfml::internal {
namespace {

bool IsLineTerminatorNode(const FormatNode& node) {
  return node.kind == NodeKind::kSeparator && IsLineTerminator(*node.separator);
}

std::optional<std::int64_t> LeafIntrinsic(const FormatNode& node) {
  if (node.kind == NodeKind::kSeparator) return 1;
  return IntrinsicLength(*node.dtype);
}

// Multiplies two extents where either may be open.
std::int64_t Times(std::int64_t a, std::int64_t b) {
  if (a == kOpen || b == kOpen) return kOpen;
  return a * b;
}

std::int64_t Plus(std::int64_t a, std::int64_t b) {
  if (a == kOpen || b == kOpen) return kOpen;
  return a + b;
}

struct Frame {
  Position origin;
  // Char mode: child line numbers are offsets from origin.line.
  bool relative_lines = false;
  // Byte mode group bodies must be gap-free so that the record length is the
  // sum of the child lengths.
  bool contiguous = false;
  std::string path;
};

class LayoutBuilder {
 public:
  explicit LayoutBuilder(Mode mode) : mode_(mode) {}

  std::vector<PlacedNode> PlaceSiblings(const std::vector<FormatNode>& nodes,
                                        const Frame& frame) {
    const std::vector<std::string> names = SiblingNames(nodes);
    std::vector<PlacedNode> placed;
    placed.reserve(nodes.size());
    Position cursor = frame.origin;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      PlacedNode node = Place(nodes[i], names[i], frame, cursor);
      if (!placed.empty()) {
        CheckAfter(placed.back(), node);
      } else if (frame.contiguous && node.start != frame.origin) {
        Error(node.path, "leaves a gap at the start of its group");
      }
      if (frame.contiguous && !placed.empty() &&
          placed.back().end.column != kOpen &&
          node.start.column > placed.back().end.column) {
        Error(node.path, absl::StrCat("leaves a gap after '",
                                      placed.back().name, "'"));
      }
      cursor = node.end;
      placed.push_back(std::move(node));
    }
    return placed;
  }

  void CheckNesting(const std::vector<PlacedNode>& nodes, bool inside) {
    for (const PlacedNode& node : nodes) {
      const bool is_group = node.node->kind == NodeKind::kGroup;
      const bool opens = is_group ? node.repetition == kOpen
                                  : node.count == kOpen;
      if (opens && inside) {
        Error(node.path,
              "open repetition inside a repeating group is not supported");
      }
      if (is_group) {
        CheckNesting(node.children, inside || node.repetition != 1);
      }
    }
  }

  std::vector<Issue> TakeIssues() { return std::move(issues_); }

 private:
  void Error(const std::string& path, std::string message) {
    issues_.push_back(Issue{Severity::kError, path, std::move(message)});
  }

  Position Resolve(const Position& position, const Frame& frame) const {
    if (mode_ == Mode::kByte) {
      return Position{0, position.column == kOpen
                             ? kOpen
                             : frame.origin.column + position.column};
    }
    std::int64_t line = position.line;
    if (line != kOpen && frame.relative_lines) line += frame.origin.line;
    return Position{line, position.column};
  }

  void CheckAfter(const PlacedNode& previous, const PlacedNode& node) {
    const bool previous_unbounded = mode_ == Mode::kByte
                                        ? previous.end.column == kOpen
                                        : previous.end.line == kOpen;
    if (previous_unbounded) {
      Error(node.path, absl::StrCat("is unreachable: it follows '",
                                    previous.name,
                                    "', which extends to the end of the data"));
      return;
    }
    if (PositionLess(node.start, previous.end)) {
      Error(node.path, absl::StrCat("overlaps or precedes sibling '",
                                    previous.name, "' (starts at ",
                                    FormatPosition(node.start, mode_),
                                    ", sibling ends at ",
                                    FormatPosition(previous.end, mode_), ")"));
    }
  }

  PlacedNode Place(const FormatNode& source, const std::string& name,
                   const Frame& frame, const Position& cursor) {
    PlacedNode node;
    node.node = &source;
    node.name = name;
    node.path = frame.path.empty() ? name : absl::StrCat(frame.path, "/", name);
    std::optional<Position> explicit_end;
    if (source.location) {
      node.start = Resolve(source.location->start, frame);
      explicit_end = Resolve(source.location->end, frame);
    } else {
      node.start = cursor;
    }
    switch (source.kind) {
      case NodeKind::kGroup:
        PlaceGroup(source, explicit_end, node);
        break;
      case NodeKind::kDataType:
      case NodeKind::kSeparator:
        if (mode_ == Mode::kByte) {
          PlaceByteLeaf(source, explicit_end, node);
        } else {
          PlaceCharLeaf(source, explicit_end, node);
        }
        break;
    }
    return node;
  }

  void PlaceByteLeaf(const FormatNode& source,
                     const std::optional<Position>& explicit_end,
                     PlacedNode& node) {
    const std::optional<std::int64_t> intrinsic = LeafIntrinsic(source);
    const std::optional<std::int64_t> number = source.number;
    const absl::string_view tag = NodeTag(source);
    if (node.start.column == kOpen) {
      node.unit_length = intrinsic.value_or(kOpen);
      node.end = node.start;
      return;
    }
    if (!explicit_end) {
      if (!intrinsic) {
        Error(node.path, absl::StrCat("<", tag, "> requires a location"));
        node.unit_length = 1;
      } else {
        node.unit_length = *intrinsic;
      }
      node.count = number.value_or(1);
      node.end = Position{0, Plus(node.start.column,
                                  Times(node.unit_length, node.count))};
      return;
    }
    if (explicit_end->column == kOpen) {
      node.end = *explicit_end;
      if (number && *number != kOpen) {
        if (!intrinsic) {
          Error(node.path, absl::StrCat("<", tag, "> with a count needs a "
                                        "closed span"));
          node.unit_length = 1;
        } else {
          node.unit_length = *intrinsic;
        }
        node.count = *number;
        node.end = Position{0, node.start.column + node.unit_length * *number};
      } else if (intrinsic) {
        node.unit_length = *intrinsic;
        node.count = kOpen;
      } else {
        if (number) {
          Error(node.path, "an open-ended <string> cannot repeat");
        }
        node.unit_length = kOpen;
        node.count = 1;
      }
      return;
    }
    node.end = *explicit_end;
    const std::int64_t span = explicit_end->column - node.start.column;
    if (number && *number != kOpen) {
      if (span % *number != 0) {
        Error(node.path, absl::StrCat("span of ", span,
                                      " bytes is not divisible by number=",
                                      *number));
      }
      node.unit_length = std::max<std::int64_t>(1, span / *number);
      node.count = *number;
    } else if (number) {
      if (!intrinsic) {
        Error(node.path, "number=\"unknown\" needs a fixed-width type");
        node.unit_length = span;
        node.count = 1;
      } else {
        if (span % *intrinsic != 0) {
          Error(node.path, absl::StrCat("span of ", span,
                                        " bytes is not a multiple of ",
                                        *intrinsic));
        }
        node.unit_length = *intrinsic;
        node.count = std::max<std::int64_t>(1, span / *intrinsic);
      }
    } else {
      node.unit_length = span;
      node.count = 1;
    }
    if (intrinsic && node.unit_length != *intrinsic) {
      Error(node.path, absl::StrCat("span of ", node.unit_length,
                                    " bytes conflicts with the ", *intrinsic,
                                    "-byte width of <", tag, ">"));
    }
  }

  void PlaceCharLeaf(const FormatNode& source,
                     const std::optional<Position>& explicit_end,
                     PlacedNode& node) {
    const absl::string_view tag = NodeTag(source);
    if (IsLineTerminatorNode(source)) {
      if (source.number) {
        Error(node.path, "a count on a line terminator is not supported");
      }
      node.start.column = kOpen;
      node.unit_length = 1;
      node.count = 1;
      node.end = node.start.line == kOpen ? node.start
                                          : Position{node.start.line + 1, 0};
      return;
    }
    if (node.start.line == kOpen || node.start.column == kOpen) {
      // Follows an open-ended sibling; CheckAfter reports it.
      node.unit_length = 1;
      node.end = node.start;
      return;
    }
    const std::optional<std::int64_t> intrinsic = LeafIntrinsic(source);
    if (source.number && *source.number == kOpen) {
      Error(node.path, "number=\"unknown\" is not supported on char-mode "
                       "fields");
    }
    const std::int64_t number =
        source.number && *source.number != kOpen ? *source.number : 1;
    if (!explicit_end) {
      if (!intrinsic) {
        Error(node.path, absl::StrCat("<", tag, "> requires a location"));
      }
      node.unit_length = intrinsic.value_or(1);
      node.count = number;
      node.end = Position{node.start.line,
                          node.start.column + node.unit_length * number};
      return;
    }
    if (explicit_end->line != node.start.line) {
      Error(node.path, "a char-mode field must lie on a single line");
    }
    node.end = Position{node.start.line, explicit_end->column};
    if (explicit_end->column == kOpen) {
      if (source.number) {
        Error(node.path, "an open-ended field cannot repeat");
      }
      node.unit_length = kOpen;
      node.count = 1;
      return;
    }
    const std::int64_t span = explicit_end->column - node.start.column;
    if (span % number != 0) {
      Error(node.path, absl::StrCat("span of ", span,
                                    " characters is not divisible by number=",
                                    number));
    }
    node.unit_length = std::max<std::int64_t>(1, span / number);
    node.count = number;
  }

  // Lines consumed by one full extent of `node` in char mode.
  std::int64_t LineSpan(const FormatNode& node) {
    if (node.kind != NodeKind::kGroup) return IsLineTerminatorNode(node) ? 1 : 0;
    std::int64_t interval = 0;
    for (const FormatNode& child : node.children) {
      interval = Plus(interval, LineSpan(child));
    }
    std::string ignored;
    const std::int64_t repetition = CharRepetition(node, interval, ignored);
    return Times(interval, repetition);
  }

  // Repetition of a char-mode group whose record spans `interval` lines.
  // Sets `error` and returns a usable fallback when the description is
  // inconsistent.
  std::int64_t CharRepetition(const FormatNode& group, std::int64_t interval,
                              std::string& error) {
    if (group.children.empty()) return 1;
    if (group.number) {
      if (*group.number != 1 && interval == kOpen) {
        error = "a repeating group cannot have an open-ended body";
        return 1;
      }
      if (*group.number != 1 && interval == 0) {
        error = "a repeating char-mode group needs a line terminator";
        return 1;
      }
      return *group.number;
    }
    if (!group.location) return 1;
    const Location& location = *group.location;
    if (location.start.column != 0) {
      error = "a char-mode group must start at column 0";
      return 1;
    }
    if (location.end.line == kOpen) {
      if (interval == kOpen) return 1;
      if (interval == 0) {
        error = "an open-ended char-mode group needs a line terminator";
        return 1;
      }
      return kOpen;
    }
    std::int64_t lines = 0;
    if (location.end.column == kOpen) {
      lines = location.end.line - location.start.line + 1;
    } else if (location.end.column == 0) {
      lines = location.end.line - location.start.line;
    } else {
      error = "a char-mode group must end at a line boundary";
      return 1;
    }
    if (interval == kOpen) {
      error = "a bounded group cannot have an open-ended body";
      return 1;
    }
    if (interval == 0) return 1;
    if (lines % interval != 0) {
      error = absl::StrCat("group spans ", lines,
                           " lines, not a multiple of its record length of ",
                           interval, " lines");
      return 1;
    }
    return lines / interval;
  }

  std::int64_t ByteRepetition(const FormatNode& group, const PlacedNode& node,
                              const std::optional<Position>& explicit_end,
                              std::string& error) {
    const std::int64_t interval = node.interval;
    if (group.number) {
      if (*group.number != 1 && interval == kOpen) {
        error = "a repeating group cannot have an open-ended body";
        return 1;
      }
      if (explicit_end && explicit_end->column != kOpen && interval != kOpen &&
          *group.number != kOpen &&
          explicit_end->column - node.start.column != interval * *group.number) {
        error = absl::StrCat("span of ",
                             explicit_end->column - node.start.column,
                             " bytes disagrees with number=", *group.number,
                             " records of ", interval, " bytes");
      }
      return *group.number;
    }
    if (!explicit_end) return 1;
    if (explicit_end->column == kOpen) return interval == kOpen ? 1 : kOpen;
    const std::int64_t span = explicit_end->column - node.start.column;
    if (interval == kOpen) {
      error = "a bounded group cannot have an open-ended body";
      return 1;
    }
    if (interval == 0) return 1;
    if (span % interval != 0) {
      error = absl::StrCat("group length ", span,
                           " is not a multiple of its record length ", interval,
                           "; the description is inconsistent");
      return 1;
    }
    return span / interval;
  }

  void PlaceGroup(const FormatNode& source,
                  const std::optional<Position>& explicit_end,
                  PlacedNode& node) {
    if (source.children.empty()) {
      Error(node.path, "group has no children");
      node.end = explicit_end.value_or(node.start);
      return;
    }
    std::string error;
    if (mode_ == Mode::kByte) {
      if (node.start.column == kOpen) {
        node.end = node.start;
        return;
      }
      Frame inner{node.start, false, true, node.path};
      node.children = PlaceSiblings(source.children, inner);
      node.interval = 0;
      for (const PlacedNode& child : node.children) {
        node.interval = Plus(node.interval,
                             child.end.column == kOpen
                                 ? kOpen
                                 : child.end.column - child.start.column);
      }
      node.repetition = ByteRepetition(source, node, explicit_end, error);
      if (!error.empty()) Error(node.path, error);
      node.end = Position{0, Plus(node.start.column,
                                  Times(node.interval, node.repetition))};
      return;
    }

    node.interval = 0;
    for (const FormatNode& child : source.children) {
      node.interval = Plus(node.interval, LineSpan(child));
    }
    node.repetition = CharRepetition(source, node.interval, error);
    if (!error.empty()) Error(node.path, error);
    if (node.start.line == kOpen) {
      node.end = node.start;
      return;
    }
    const bool repeating = node.repetition != 1;
    Frame inner{Position{node.start.line, 0}, repeating, false, node.path};
    node.children = PlaceSiblings(source.children, inner);
    const std::int64_t total = Times(node.interval, node.repetition);
    if (total == kOpen) {
      node.end = Position{kOpen, kOpen};
    } else if (node.interval > 0) {
      node.end = Position{node.start.line + total, 0};
    } else if (explicit_end && explicit_end->line != kOpen) {
      node.end = *explicit_end;
    } else {
      node.end = node.children.back().end;
    }
    // Children must stay within one record.
    Position record_end = node.end;
    if (node.interval != kOpen && node.interval > 0) {
      record_end = Position{node.start.line + node.interval, 0};
    }
    const Position record_start{node.start.line, 0};
    for (const PlacedNode& child : node.children) {
      if (PositionLess(child.start, record_start)) {
        Error(child.path, "starts before its group");
      } else if (PositionLess(record_end, child.end)) {
        Error(child.path, "extends beyond the end of its group");
      }
    }
  }

  Mode mode_;
  std::vector<Issue> issues_;
};

}  // namespace

bool Layout::has_errors() const {
  return std::any_of(issues.begin(), issues.end(), [](const Issue& issue) {
    return issue.severity == Severity::kError;
  });
}

Layout ComputeLayout(const DfmlDocument& document) {
  LayoutBuilder builder(document.mode);
  Frame top;
  top.origin = document.mode == Mode::kByte ? Position{0, 0} : Position{1, 0};
  Layout layout;
  layout.mode = document.mode;
  layout.roots = builder.PlaceSiblings(document.children, top);
  builder.CheckNesting(layout.roots, false);
  layout.issues = builder.TakeIssues();
  return layout;
}

}  // namespace dfml::internal
