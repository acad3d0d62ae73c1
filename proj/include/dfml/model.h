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

// Document model for DFML, the XML dialect that describes the layout of a
// data file: typed leaves, separators and (possibly repeating) groups, each
// optionally pinned to a byte span or a (line, column) span.

#ifndef DFML_MODEL_H_
#define DFML_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace dfml {

// Sentinel for an open end: "to end of file", "to end of line", or an
// unknown repetition count. Written as -1 (or "unknown") in DFML text.
inline constexpr std::int64_t kOpen = -1;

enum class Mode { kByte, kChar };

enum class PrimitiveType {
  kByte,
  kShort,
  kInteger,
  kLong,
  kFloat,
  kDouble,
  kString,
  kChar,
};

enum class SeparatorType { kSpace, kTab, kCr, kLf, kComma, kSemicolon };

enum class ByteOrder { kBigEndian, kLittleEndian };

enum class NodeKind { kDataType, kSeparator, kGroup };

// Units per value: bytes in byte mode, characters in char mode. nullopt for
// kString, whose width always comes from its location.
std::optional<std::int64_t> IntrinsicLength(PrimitiveType type);

absl::string_view PrimitiveTypeName(PrimitiveType type);
absl::string_view SeparatorTypeName(SeparatorType type);
absl::string_view ModeName(Mode mode);
absl::string_view ByteOrderName(ByteOrder order);

// The character a separator stands for; '\n' for both line terminators.
char SeparatorChar(SeparatorType type);
bool IsLineTerminator(SeparatorType type);

// A point in a data file. Byte mode uses `column` as the byte offset and
// leaves `line` at 0. Char mode lines are 1-based at the top level; either
// coordinate of an end position may be kOpen.
struct Position {
  std::int64_t line = 0;
  std::int64_t column = 0;

  friend bool operator==(const Position&, const Position&) = default;
};

// Total order in which kOpen sorts after every concrete coordinate.
std::strong_ordering ComparePositions(const Position& a, const Position& b);
inline bool PositionLess(const Position& a, const Position& b) {
  return ComparePositions(a, b) < 0;
}

std::string FormatPosition(const Position& position, Mode mode);

// Half-open span [start, end).
struct Location {
  Mode mode = Mode::kByte;
  Position start;
  Position end;

  friend bool operator==(const Location&, const Location&) = default;
};

enum class Severity { kError, kWarning };

struct Issue {
  Severity severity = Severity::kError;
  std::string node_path;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

std::string FormatIssue(const Issue& issue);

struct FormatNode {
  NodeKind kind = NodeKind::kDataType;
  std::optional<PrimitiveType> dtype;
  std::optional<SeparatorType> separator;
  std::optional<Location> location;
  // Explicit `number` attribute; kOpen for "unknown".
  std::optional<std::int64_t> number;
  std::optional<ByteOrder> byte_order;
  // Raw `value` attribute. Whether it is a checked constant or only a label
  // is decided when the node is linearized.
  std::optional<std::string> value;
  std::optional<std::string> description;
  // Attributes the model does not interpret (including `format`), in
  // document order. Kept so serialization never drops them.
  std::vector<std::pair<std::string, std::string>> extra_attributes;
  std::vector<FormatNode> children;

  friend bool operator==(const FormatNode&, const FormatNode&) = default;
};

struct DfmlDocument {
  std::string name;
  std::string name_space;
  Mode mode = Mode::kByte;
  std::optional<std::string> description;
  std::vector<std::pair<std::string, std::string>> extra_attributes;
  std::vector<FormatNode> children;
  // Parse-time warnings (ignored or unknown attributes). Not part of
  // structural equality.
  std::vector<Issue> warnings;

  friend bool operator==(const DfmlDocument& a, const DfmlDocument& b) {
    return a.name == b.name && a.name_space == b.name_space &&
           a.mode == b.mode && a.description == b.description &&
           a.extra_attributes == b.extra_attributes &&
           a.children == b.children;
  }
};

// Parses DFML XML text. Fails with InvalidArgument on malformed XML, unknown
// tags, a missing or bad `mode`, and malformed attribute values; fails with
// Unimplemented on `import` and named reusable definitions.
absl::StatusOr<DfmlDocument> ParseDocument(absl::string_view xml_text);

// Parses a `location` attribute: "a,b" in byte mode, "L c,L' c'" in char
// mode, with -1 meaning open.
absl::StatusOr<Location> ParseLocation(absl::string_view text, Mode mode);

std::string FormatLocation(const Location& location);

std::string SerializeDocument(const DfmlDocument& document);

// Display name of a node: its description (whitespace collapsed, path
// delimiters replaced) or its tag.
std::string NodeLabel(const FormatNode& node);

// Labels for a sibling list, with repeats disambiguated as "label_2",
// "label_3", ... so that every sibling path is unique.
std::vector<std::string> SiblingNames(const std::vector<FormatNode>& nodes);

// Canonical tag used when serializing.
absl::string_view NodeTag(const FormatNode& node);

}  // namespace dfml

#endif  // DFML_MODEL_H_
