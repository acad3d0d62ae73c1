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

#include "dfml/model.h"

#include <expat.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <memory>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace dfml {
namespace {

struct TagInfo {
  NodeKind kind;
  std::optional<PrimitiveType> dtype;
  std::optional<SeparatorType> separator;
};

const std::map<std::string, TagInfo, std::less<>>& TagTable() {
  static const auto* table = new std::map<std::string, TagInfo, std::less<>>{
      {"byte", {NodeKind::kDataType, PrimitiveType::kByte, {}}},
      {"short", {NodeKind::kDataType, PrimitiveType::kShort, {}}},
      {"integer", {NodeKind::kDataType, PrimitiveType::kInteger, {}}},
      {"long", {NodeKind::kDataType, PrimitiveType::kLong, {}}},
      {"float", {NodeKind::kDataType, PrimitiveType::kFloat, {}}},
      {"double", {NodeKind::kDataType, PrimitiveType::kDouble, {}}},
      {"real", {NodeKind::kDataType, PrimitiveType::kDouble, {}}},
      {"string", {NodeKind::kDataType, PrimitiveType::kString, {}}},
      {"char", {NodeKind::kDataType, PrimitiveType::kChar, {}}},
      {"space", {NodeKind::kSeparator, {}, SeparatorType::kSpace}},
      {"tab", {NodeKind::kSeparator, {}, SeparatorType::kTab}},
      {"cr", {NodeKind::kSeparator, {}, SeparatorType::kCr}},
      {"lf", {NodeKind::kSeparator, {}, SeparatorType::kLf}},
      {"comma", {NodeKind::kSeparator, {}, SeparatorType::kComma}},
      {"semicolon", {NodeKind::kSeparator, {}, SeparatorType::kSemicolon}},
      {"group", {NodeKind::kGroup, {}, {}}},
  };
  return *table;
}

bool IsUnsupportedTag(absl::string_view tag) {
  return tag == "import" || tag == "location" || tag == "datatype" ||
         tag == "separator";
}

absl::StatusOr<std::int64_t> ParseCoordinate(absl::string_view token,
                                             bool allow_open) {
  token = absl::StripAsciiWhitespace(token);
  std::int64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    return absl::InvalidArgumentError(
        absl::StrCat("non-numeric location coordinate '", token, "'"));
  }
  if (value == kOpen && allow_open) return kOpen;
  if (value < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("negative location coordinate ", value));
  }
  return value;
}

absl::StatusOr<Position> ParseCharPosition(absl::string_view text,
                                           bool allow_open) {
  std::vector<absl::string_view> parts =
      absl::StrSplit(text, absl::ByAnyChar(" \t\r\n"), absl::SkipEmpty());
  if (parts.size() != 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "char-mode position '", absl::StripAsciiWhitespace(text),
        "' must be 'line column'"));
  }
  absl::StatusOr<std::int64_t> line = ParseCoordinate(parts[0], allow_open);
  if (!line.ok()) return line.status();
  absl::StatusOr<std::int64_t> column = ParseCoordinate(parts[1], allow_open);
  if (!column.ok()) return column.status();
  return Position{*line, *column};
}

std::string CollapseWhitespace(absl::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (absl::ascii_isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

absl::StatusOr<std::int64_t> ParseNumber(absl::string_view text) {
  absl::string_view trimmed = absl::StripAsciiWhitespace(text);
  if (absl::EqualsIgnoreCase(trimmed, "unknown") || trimmed == "-1") {
    return kOpen;
  }
  std::int64_t value = 0;
  const char* end = trimmed.data() + trimmed.size();
  auto [ptr, ec] = std::from_chars(trimmed.data(), end, value);
  if (trimmed.empty() || ec != std::errc() || ptr != end || value < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "number must be a positive integer or 'unknown', got '", text, "'"));
  }
  return value;
}

absl::StatusOr<ByteOrder> ParseByteOrder(absl::string_view text) {
  absl::string_view trimmed = absl::StripAsciiWhitespace(text);
  if (absl::EqualsIgnoreCase(trimmed, "bigEndian")) return ByteOrder::kBigEndian;
  if (absl::EqualsIgnoreCase(trimmed, "littleEndian")) {
    return ByteOrder::kLittleEndian;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("byteOrder must be bigEndian or littleEndian, got '", text,
                   "'"));
}

// Expat callbacks build the tree on an explicit stack of open nodes.
class TreeBuilder {
 public:
  explicit TreeBuilder(XML_Parser parser) : parser_(parser) {}

  void Start(const char* tag, const char** attributes) {
    if (!status_.ok()) return;
    absl::string_view name(tag);
    if (depth_ == 0) {
      StartRoot(name, attributes);
    } else if (stack_.empty() && saw_root_end_) {
      Fail(absl::InvalidArgumentError("content after root element"));
    } else {
      StartNode(name, attributes);
    }
    ++depth_;
  }

  void End() {
    if (!status_.ok()) return;
    --depth_;
    if (depth_ == 0) {
      saw_root_end_ = true;
      return;
    }
    FormatNode node = std::move(stack_.back());
    stack_.pop_back();
    path_.pop_back();
    if (node.kind != NodeKind::kGroup && !node.children.empty()) {
      Fail(absl::InvalidArgumentError(absl::StrCat(
          "line ", Line(), ": element <", NodeTag(node),
          "> cannot contain child elements")));
      return;
    }
    if (stack_.empty()) {
      document_.children.push_back(std::move(node));
    } else {
      stack_.back().children.push_back(std::move(node));
    }
  }

  absl::Status status() const { return status_; }
  DfmlDocument Take() { return std::move(document_); }

 private:
  void StartRoot(absl::string_view tag, const char** attributes) {
    if (tag != "dataformat") {
      Fail(absl::InvalidArgumentError(absl::StrCat(
          "root element must be <dataformat>, found <", tag, ">")));
      return;
    }
    bool saw_mode = false;
    for (const char** a = attributes; *a != nullptr; a += 2) {
      absl::string_view key(a[0]);
      std::string value(a[1]);
      if (key == "name") {
        document_.name = value;
      } else if (key == "namespace") {
        document_.name_space = value;
      } else if (key == "description") {
        document_.description = value;
      } else if (key == "mode") {
        saw_mode = true;
        absl::string_view mode = absl::StripAsciiWhitespace(value);
        if (absl::EqualsIgnoreCase(mode, "byte")) {
          document_.mode = Mode::kByte;
        } else if (absl::EqualsIgnoreCase(mode, "char")) {
          document_.mode = Mode::kChar;
        } else {
          Fail(absl::InvalidArgumentError(absl::StrCat(
              "mode must be 'byte' or 'char', got '", value, "'")));
          return;
        }
      } else {
        Warn("", absl::StrCat("unknown attribute '", key, "' on <dataformat>"));
        document_.extra_attributes.emplace_back(std::string(key), value);
      }
    }
    if (!saw_mode) {
      Fail(absl::InvalidArgumentError(
          "<dataformat> is missing the required 'mode' attribute"));
    }
  }

  void StartNode(absl::string_view tag, const char** attributes) {
    if (IsUnsupportedTag(tag)) {
      Fail(absl::UnimplementedError(absl::StrCat(
          "line ", Line(), ": <", tag,
          "> (imports and named reusable definitions) is not supported")));
      return;
    }
    auto it = TagTable().find(tag);
    if (it == TagTable().end()) {
      Fail(absl::InvalidArgumentError(
          absl::StrCat("line ", Line(), ": unknown element <", tag, ">")));
      return;
    }
    if (!stack_.empty() && stack_.back().kind != NodeKind::kGroup) {
      Fail(absl::InvalidArgumentError(absl::StrCat(
          "line ", Line(), ": <", tag, "> nested inside a non-group element")));
      return;
    }
    FormatNode node;
    node.kind = it->second.kind;
    node.dtype = it->second.dtype;
    node.separator = it->second.separator;
    for (const char** a = attributes; *a != nullptr; a += 2) {
      if (key_is(a[0], "description")) node.description = a[1];
    }
    path_.push_back(NodeLabel(node));
    const std::string here = absl::StrJoin(path_, "/");
    for (const char** a = attributes; *a != nullptr; a += 2) {
      absl::string_view key(a[0]);
      absl::string_view value(a[1]);
      if (key == "description") continue;
      if (key == "location") {
        absl::StatusOr<Location> location = ParseLocation(value, document_.mode);
        if (!location.ok()) return FailAt(here, location.status());
        node.location = *location;
      } else if (key == "number") {
        absl::StatusOr<std::int64_t> number = ParseNumber(value);
        if (!number.ok()) return FailAt(here, number.status());
        node.number = *number;
      } else if (key == "byteOrder") {
        absl::StatusOr<ByteOrder> order = ParseByteOrder(value);
        if (!order.ok()) return FailAt(here, order.status());
        node.byte_order = *order;
      } else if (key == "value") {
        node.value = std::string(value);
      } else if (key == "name") {
        return FailAt(here, absl::UnimplementedError(
                                "named reusable definitions are not supported"));
      } else if (key == "format") {
        Warn(here, "attribute 'format' is not supported and is ignored");
        node.extra_attributes.emplace_back(std::string(key), std::string(value));
      } else {
        Warn(here, absl::StrCat("unknown attribute '", key, "' on <", tag, ">"));
        node.extra_attributes.emplace_back(std::string(key), std::string(value));
      }
    }
    stack_.push_back(std::move(node));
  }

  static bool key_is(const char* key, absl::string_view expected) {
    return absl::string_view(key) == expected;
  }

  std::int64_t Line() const {
    return static_cast<std::int64_t>(XML_GetCurrentLineNumber(parser_));
  }

  void Warn(const std::string& path, std::string message) {
    document_.warnings.push_back(
        Issue{Severity::kWarning, path, std::move(message)});
  }

  void FailAt(const std::string& path, const absl::Status& status) {
    Fail(absl::Status(status.code(), absl::StrCat("line ", Line(), ": ", path,
                                                  ": ", status.message())));
  }

  void Fail(absl::Status status) {
    if (!status_.ok()) return;
    status_ = std::move(status);
    XML_StopParser(parser_, XML_FALSE);
  }

  XML_Parser parser_;
  absl::Status status_;
  DfmlDocument document_;
  std::vector<FormatNode> stack_;
  std::vector<std::string> path_;
  int depth_ = 0;
  bool saw_root_end_ = false;
};

void XMLCALL OnStart(void* user_data, const XML_Char* tag,
                     const XML_Char** attributes) {
  static_cast<TreeBuilder*>(user_data)->Start(tag, attributes);
}

void XMLCALL OnEnd(void* user_data, const XML_Char*) {
  static_cast<TreeBuilder*>(user_data)->End();
}

void AppendEscaped(std::string& out, absl::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out.push_back(c);
    }
  }
}

void AppendAttribute(std::string& out, absl::string_view key,
                     absl::string_view value) {
  absl::StrAppend(&out, " ", key, "=\"");
  AppendEscaped(out, value);
  out += '"';
}

void SerializeNode(const FormatNode& node, int depth, std::string& out) {
  const std::string indent(2 * depth, ' ');
  absl::StrAppend(&out, indent, "<", NodeTag(node));
  if (node.description) AppendAttribute(out, "description", *node.description);
  if (node.location) {
    AppendAttribute(out, "location", FormatLocation(*node.location));
  }
  if (node.number) {
    AppendAttribute(out, "number",
                    *node.number == kOpen ? "unknown"
                                          : std::to_string(*node.number));
  }
  if (node.byte_order) {
    AppendAttribute(out, "byteOrder", node.byte_order == ByteOrder::kBigEndian
                                          ? "bigEndian"
                                          : "littleEndian");
  }
  if (node.value) AppendAttribute(out, "value", *node.value);
  for (const auto& [key, value] : node.extra_attributes) {
    AppendAttribute(out, key, value);
  }
  if (node.children.empty()) {
    out += "/>\n";
    return;
  }
  out += ">\n";
  for (const FormatNode& child : node.children) {
    SerializeNode(child, depth + 1, out);
  }
  absl::StrAppend(&out, indent, "</", NodeTag(node), ">\n");
}

}  // namespace

std::optional<std::int64_t> IntrinsicLength(PrimitiveType type) {
  switch (type) {
    case PrimitiveType::kByte: return 1;
    case PrimitiveType::kShort: return 2;
    case PrimitiveType::kInteger: return 4;
    case PrimitiveType::kLong: return 8;
    case PrimitiveType::kFloat: return 4;
    case PrimitiveType::kDouble: return 8;
    case PrimitiveType::kChar: return 1;
    case PrimitiveType::kString: return std::nullopt;
  }
  return std::nullopt;
}

absl::string_view PrimitiveTypeName(PrimitiveType type) {
  switch (type) {
    case PrimitiveType::kByte: return "byte";
    case PrimitiveType::kShort: return "short";
    case PrimitiveType::kInteger: return "integer";
    case PrimitiveType::kLong: return "long";
    case PrimitiveType::kFloat: return "float";
    case PrimitiveType::kDouble: return "double";
    case PrimitiveType::kString: return "string";
    case PrimitiveType::kChar: return "char";
  }
  return "?";
}

absl::string_view SeparatorTypeName(SeparatorType type) {
  switch (type) {
    case SeparatorType::kSpace: return "space";
    case SeparatorType::kTab: return "tab";
    case SeparatorType::kCr: return "cr";
    case SeparatorType::kLf: return "lf";
    case SeparatorType::kComma: return "comma";
    case SeparatorType::kSemicolon: return "semicolon";
  }
  return "?";
}

absl::string_view ModeName(Mode mode) {
  return mode == Mode::kByte ? "byte" : "char";
}

absl::string_view ByteOrderName(ByteOrder order) {
  return order == ByteOrder::kBigEndian ? "big" : "little";
}

char SeparatorChar(SeparatorType type) {
  switch (type) {
    case SeparatorType::kSpace: return ' ';
    case SeparatorType::kTab: return '\t';
    case SeparatorType::kCr: return '\r';
    case SeparatorType::kLf: return '\n';
    case SeparatorType::kComma: return ',';
    case SeparatorType::kSemicolon: return ';';
  }
  return '\0';
}

bool IsLineTerminator(SeparatorType type) {
  return type == SeparatorType::kCr || type == SeparatorType::kLf;
}

std::strong_ordering ComparePositions(const Position& a, const Position& b) {
  auto key = [](std::int64_t v) {
    return v == kOpen ? std::numeric_limits<std::int64_t>::max() : v;
  };
  if (auto c = key(a.line) <=> key(b.line); c != 0) return c;
  return key(a.column) <=> key(b.column);
}

std::string FormatPosition(const Position& position, Mode mode) {
  auto coordinate = [](std::int64_t v) {
    return v == kOpen ? std::string("-1") : std::to_string(v);
  };
  if (mode == Mode::kByte) return coordinate(position.column);
  return absl::StrCat(coordinate(position.line), " ",
                      coordinate(position.column));
}

std::string FormatIssue(const Issue& issue) {
  return absl::StrCat(issue.severity == Severity::kError ? "error" : "warning",
                      ": ", issue.node_path.empty() ? "<root>" : issue.node_path,
                      ": ", issue.message);
}

absl::StatusOr<Location> ParseLocation(absl::string_view text, Mode mode) {
  std::vector<absl::string_view> halves = absl::StrSplit(text, ',');
  if (halves.size() != 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "location '", text, "' must have exactly one comma separating start "
                            "and end"));
  }
  Location location;
  location.mode = mode;
  if (mode == Mode::kByte) {
    absl::StatusOr<std::int64_t> start = ParseCoordinate(halves[0], false);
    if (!start.ok()) return start.status();
    absl::StatusOr<std::int64_t> end = ParseCoordinate(halves[1], true);
    if (!end.ok()) return end.status();
    location.start = Position{0, *start};
    location.end = Position{0, *end};
  } else {
    absl::StatusOr<Position> start = ParseCharPosition(halves[0], false);
    if (!start.ok()) return start.status();
    absl::StatusOr<Position> end = ParseCharPosition(halves[1], true);
    if (!end.ok()) return end.status();
    location.start = *start;
    location.end = *end;
  }
  if (ComparePositions(location.end, location.start) <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("location '", text, "' is an empty span"));
  }
  return location;
}

std::string FormatLocation(const Location& location) {
  return absl::StrCat(FormatPosition(location.start, location.mode), ",",
                      FormatPosition(location.end, location.mode));
}

absl::StatusOr<DfmlDocument> ParseDocument(absl::string_view xml_text) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (parser == nullptr) return absl::InternalError("cannot create XML parser");
  TreeBuilder builder(parser.get());
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &OnStart, &OnEnd);
  const XML_Status result = XML_Parse(parser.get(), xml_text.data(),
                                      static_cast<int>(xml_text.size()),
                                      /*isFinal=*/XML_TRUE);
  if (!builder.status().ok()) return builder.status();
  if (result != XML_STATUS_OK) {
    return absl::InvalidArgumentError(absl::StrCat(
        "malformed XML at line ", XML_GetCurrentLineNumber(parser.get()), ": ",
        XML_ErrorString(XML_GetErrorCode(parser.get()))));
  }
  return builder.Take();
}

std::string SerializeDocument(const DfmlDocument& document) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<dataformat";
  AppendAttribute(out, "name", document.name);
  AppendAttribute(out, "namespace", document.name_space);
  AppendAttribute(out, "mode", ModeName(document.mode));
  if (document.description) {
    AppendAttribute(out, "description", *document.description);
  }
  for (const auto& [key, value] : document.extra_attributes) {
    AppendAttribute(out, key, value);
  }
  out += ">\n";
  for (const FormatNode& child : document.children) {
    SerializeNode(child, 1, out);
  }
  out += "</dataformat>\n";
  return out;
}

absl::string_view NodeTag(const FormatNode& node) {
  switch (node.kind) {
    case NodeKind::kGroup: return "group";
    case NodeKind::kSeparator: return SeparatorTypeName(*node.separator);
    case NodeKind::kDataType: return PrimitiveTypeName(*node.dtype);
  }
  return "?";
}

std::string NodeLabel(const FormatNode& node) {
  std::string label;
  if (node.description) label = CollapseWhitespace(*node.description);
  if (label.empty()) label = std::string(NodeTag(node));
  std::replace(label.begin(), label.end(), '/', '_');
  std::replace(label.begin(), label.end(), '#', '_');
  return label;
}

std::vector<std::string> SiblingNames(const std::vector<FormatNode>& nodes) {
  std::vector<std::string> names;
  names.reserve(nodes.size());
  std::map<std::string, int> seen;
  for (const FormatNode& node : nodes) {
    std::string label = NodeLabel(node);
    int& count = seen[label];
    ++count;
    if (count > 1) {
      // Skip suffixes that collide with a literal label of a later sibling.
      std::string candidate;
      do {
        candidate = absl::StrCat(label, "_", count);
      } while (seen.contains(candidate) && ++count);
      seen[candidate] = 1;
      label = candidate;
    }
    names.push_back(std::move(label));
  }
  return names;
}

}  // namespace dfml
