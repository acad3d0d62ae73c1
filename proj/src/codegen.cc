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

#include "dfml/codegen.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace dfml {
namespace {

constexpr absl::string_view kImports = R"cpp(// Generated data reader.
// Usage: reader DATA_FILE

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>
)cpp";

constexpr absl::string_view kContainerDecl = R"cpp(
namespace {

struct Input {
  std::ifstream file;
  long long size = 0;
  std::string text;
  std::vector<std::string> lines;
};

struct Output {
  long long line;
  long long column;
  std::string text;
};

std::vector<Output> g_output;

class ReadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool LoadInput(const char* path, Input& in);
void ReadData(Input& in);
void PrintOutput();

}  // namespace
)cpp";

constexpr absl::string_view kEntryPoint = R"cpp(
int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s DATA_FILE\n", argv[0]);
    return 2;
  }
  Input in;
  if (!LoadInput(argv[1], in)) {
    std::fprintf(stderr, "error: cannot open %s\n", argv[1]);
    return 1;
  }
  try {
    ReadData(in);
  } catch (const ReadError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  PrintOutput();
  return 0;
}
)cpp";

constexpr absl::string_view kReaderRoutine = R"cpp(
namespace {

bool LoadInput(const char* path, Input& in) {
  in.file.open(path, std::ios::binary);
  if (!in.file) return false;
  in.file.seekg(0, std::ios::end);
  in.size = static_cast<long long>(in.file.tellg());
  in.file.seekg(0, std::ios::beg);
  return static_cast<bool>(in.file);
}

[[noreturn]] void Fail(const std::string& message) { throw ReadError(message); }

std::string Str(long long value) { return std::to_string(value); }

[[maybe_unused]] std::string Quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    const unsigned char byte = static_cast<unsigned char>(c);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (byte < 0x20 || byte == 0x7f) {
          char escape[8];
          std::snprintf(escape, sizeof(escape), "\\u%04x", byte);
          out += escape;
        } else {
          out.push_back(c);
        }
    }
  }
  out += '"';
  return out;
}

[[maybe_unused]] std::string Real(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

[[maybe_unused]] void Emit(long long line, long long column,
                           const std::string& path, const std::string& text) {
  g_output.push_back(Output{line, column, path + " = " + text});
}

[[maybe_unused]] long long Product(std::initializer_list<long long> counts) {
  long long total = 1;
  for (long long count : counts) {
    if (count == 0) return 0;
    if (total > std::numeric_limits<long long>::max() / count) {
      return std::numeric_limits<long long>::max();
    }
    total *= count;
  }
  return total;
}

[[maybe_unused]] void CheckTrailing(long long remainder, const char* group,
                                    const char* unit) {
  if (remainder == 0) return;
  Fail(std::string("trailing partial record in ") + group + ": " +
       Str(remainder) + " " + unit + " after the last complete record");
}

// Byte mode.

[[maybe_unused]] long long AvailableBytes(Input& in, long long origin) {
  return std::max(0LL, in.size - origin);
}

[[maybe_unused]] std::string Bytes(Input& in, long long offset,
                                   long long length, const char* item,
                                   const std::string& path) {
  if (offset < 0 || length < 0 || offset > in.size - length) {
    Fail(std::string("truncated record: item ") + item + " (occurrence " +
         path + ") needs bytes [" + Str(offset) + ", " +
         Str(offset + std::max(length, 0LL)) +
         ") but the data ends at byte " + Str(in.size));
  }
  std::string buffer(static_cast<std::size_t>(length), '\0');
  in.file.seekg(offset);
  in.file.read(buffer.data(), static_cast<std::streamsize>(length));
  if (!in.file) Fail("read failed at byte " + Str(offset));
  return buffer;
}

[[maybe_unused]] unsigned long long Assemble(const std::string& raw,
                                             bool big_endian) {
  unsigned long long value = 0;
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t index = big_endian ? i : n - 1 - i;
    value = (value << 8) | static_cast<unsigned char>(raw[index]);
  }
  return value;
}

[[maybe_unused]] long long Signed(const std::string& raw, bool big_endian) {
  const unsigned long long value = Assemble(raw, big_endian);
  if (raw.size() >= 8) return static_cast<long long>(value);
  const unsigned shift = static_cast<unsigned>(64 - 8 * raw.size());
  return static_cast<long long>(value << shift) >> shift;
}

[[maybe_unused]] double Float32(const std::string& raw, bool big_endian) {
  const auto bits = static_cast<std::uint32_t>(Assemble(raw, big_endian));
  float value;
  std::memcpy(&value, &bits, sizeof(value));
  return static_cast<double>(value);
}

[[maybe_unused]] double Float64(const std::string& raw, bool big_endian) {
  const std::uint64_t bits = Assemble(raw, big_endian);
  double value;
  std::memcpy(&value, &bits, sizeof(value));
  return value;
}

// Char mode.

bool IsPad(char c) { return c == ' ' || c == '\t'; }

[[maybe_unused]] std::string TrimRight(std::string text) {
  while (!text.empty() && IsPad(text.back())) text.pop_back();
  return text;
}

[[maybe_unused]] std::string TrimBoth(const std::string& text) {
  std::size_t begin = 0;
  while (begin < text.size() && IsPad(text[begin])) ++begin;
  return TrimRight(text.substr(begin));
}

[[maybe_unused]] void LoadLines(Input& in) {
  in.text.assign(static_cast<std::size_t>(in.size), '\0');
  in.file.seekg(0);
  in.file.read(in.text.data(), static_cast<std::streamsize>(in.size));
  if (!in.file) Fail("read failed");
  std::size_t begin = 0;
  while (begin < in.text.size()) {
    std::size_t end = in.text.find('\n', begin);
    if (end == std::string::npos) end = in.text.size();
    std::string line = in.text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    in.lines.push_back(line);
    begin = end + 1;
  }
}

[[maybe_unused]] long long AvailableLines(Input& in, long long origin) {
  long long count = 0;
  const long long total = static_cast<long long>(in.lines.size());
  for (long long line = origin; line >= 1 && line <= total; ++line) {
    if (TrimBoth(in.lines[line - 1]).empty()) break;
    ++count;
  }
  return count;
}

[[maybe_unused]] const std::string& Line(Input& in, long long line,
                                         const char* item,
                                         const std::string& path) {
  const long long total = static_cast<long long>(in.lines.size());
  if (line < 1 || line > total) {
    Fail(std::string("truncated record: item ") + item + " (occurrence " +
         path + ") needs line " + Str(line) + " but the data has " +
         Str(total) + " lines");
  }
  return in.lines[line - 1];
}

[[maybe_unused]] std::string Field(Input& in, long long line, long long column,
                                   long long length, const char* item,
                                   const std::string& path) {
  const std::string& text = Line(in, line, item, path);
  const long long width = static_cast<long long>(text.size());
  if (column > width) {
    Fail("line " + Str(line) + " has " + Str(width) + " characters but " +
         path + " starts at column " + Str(column));
  }
  const long long end = length < 0 ? width : std::min(width, column + length);
  return text.substr(static_cast<std::size_t>(column),
                     static_cast<std::size_t>(end - column));
}

template <typename T>
bool ParseWhole(const std::string& token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return !token.empty() && ec == std::errc() && ptr == end;
}

[[noreturn]] void ParseFailure(const std::string& token, const char* type,
                               const std::string& path, long long line) {
  Fail(path + " at line " + Str(line) + ": cannot parse " + Quote(token) +
       " as " + type);
}

[[maybe_unused]] long long ParseInteger(const std::string& token, int bits,
                                        const char* type,
                                        const std::string& path,
                                        long long line) {
  long long value = 0;
  if (ParseWhole(token, value)) {
    if (bits == 64) return value;
    const long long limit = 1LL << (bits - 1);
    if (value >= -limit && value < limit) return value;
  }
  ParseFailure(token, type, path, line);
}

[[maybe_unused]] double ParseFloat(const std::string& token, const char* type,
                                   const std::string& path, long long line) {
  float value = 0;
  if (!ParseWhole(token, value)) ParseFailure(token, type, path, line);
  return static_cast<double>(value);
}

[[maybe_unused]] double ParseDouble(const std::string& token, const char* type,
                                    const std::string& path, long long line) {
  double value = 0;
  if (!ParseWhole(token, value)) ParseFailure(token, type, path, line);
  return value;
}

void ReadData([[maybe_unused]] Input& in) {
// @read-body
}

}  // namespace
)cpp";

constexpr absl::string_view kOutputRoutine = R"cpp(
namespace {

void PrintOutput() {
  std::stable_sort(g_output.begin(), g_output.end(),
                   [](const Output& a, const Output& b) {
                     if (a.line != b.line) return a.line < b.line;
                     return a.column < b.column;
                   });
  std::string text;
  for (const Output& output : g_output) {
    text += output.text;
    text += '\n';
  }
  std::fwrite(text.data(), 1, text.size(), stdout);
}

}  // namespace
)cpp";

// C++ string literal for arbitrary bytes.
std::string Literal(absl::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    const auto byte = static_cast<unsigned char>(c);
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (byte < 0x20 || byte >= 0x7f || c == '?') {
      char escape[8];
      std::snprintf(escape, sizeof(escape), "\\%03o", byte);
      out += escape;
    } else {
      out += c;
    }
  }
  out += '"';
  return out;
}

// Loops of an item that actually repeat, with their generated variables.
struct ActiveLoop {
  std::size_t index;
  std::string var;
  const Loop* loop;
};

std::vector<ActiveLoop> ActiveLoops(const LinearItem& item) {
  std::vector<ActiveLoop> active;
  for (std::size_t i = 0; i < item.loops.size(); ++i) {
    if (item.loops[i].repetition == 1) continue;
    active.push_back(ActiveLoop{i, absl::StrCat("i", i), &item.loops[i]});
  }
  return active;
}

std::string AvailableCall(Mode mode, const Loop& loop) {
  return mode == Mode::kByte
             ? absl::StrCat("AvailableBytes(in, ", loop.origin.column, ")")
             : absl::StrCat("AvailableLines(in, ", loop.origin.line, ")");
}

std::string PathExpression(const LinearItem& item,
                           const std::vector<ActiveLoop>& active) {
  std::vector<std::string> parts;
  std::string pending;
  for (std::size_t s = 0; s < item.segments.size(); ++s) {
    if (s > 0) pending += '/';
    pending += item.segments[s];
    for (const ActiveLoop& a : active) {
      if (a.loop->segment != s) continue;
      pending += '[';
      parts.push_back(Literal(pending));
      pending.clear();
      parts.push_back(absl::StrCat("Str(", a.var, " + 1)"));
      pending += ']';
    }
  }
  if (!pending.empty() || parts.empty()) parts.push_back(Literal(pending));
  parts.front() = absl::StrCat("std::string(", parts.front(), ")");
  return absl::StrJoin(parts, " + ");
}

std::string CoordinateExpression(std::int64_t base,
                                 const std::vector<ActiveLoop>& active,
                                 Axis axis) {
  std::string out = absl::StrCat(base, "LL");
  for (const ActiveLoop& a : active) {
    if (a.loop->axis != axis) continue;
    absl::StrAppend(&out, " + ", a.var, " * ", a.loop->interval, "LL");
  }
  return out;
}

std::string ReadStatement(const LinearItem& item, Mode mode) {
  const std::string name = Literal(item.path);
  if (mode == Mode::kByte) {
    const std::string length = item.length == kOpen
                                   ? std::string("in.size - column")
                                   : absl::StrCat(item.length, "LL");
    const std::string bytes =
        absl::StrCat("Bytes(in, column, ", length, ", ", name, ", path)");
    if (item.is_separator()) return absl::StrCat(bytes, ";");
    const std::string big =
        item.byte_order.value_or(ByteOrder::kLittleEndian) ==
                ByteOrder::kBigEndian
            ? "true"
            : "false";
    std::string text;
    switch (*item.dtype) {
      case PrimitiveType::kByte:
      case PrimitiveType::kShort:
      case PrimitiveType::kInteger:
      case PrimitiveType::kLong:
        text = absl::StrCat("Str(Signed(", bytes, ", ", big, "))");
        break;
      case PrimitiveType::kFloat:
        text = absl::StrCat("Real(Float32(", bytes, ", ", big, "))");
        break;
      case PrimitiveType::kDouble:
        text = absl::StrCat("Real(Float64(", bytes, ", ", big, "))");
        break;
      case PrimitiveType::kString:
      case PrimitiveType::kChar:
        text = absl::StrCat("Quote(", bytes, ")");
        break;
    }
    return absl::StrCat("Emit(0, column, path, ", text, ");");
  }

  if (item.is_separator() && IsLineTerminator(*item.separator)) {
    return absl::StrCat("Line(in, line, ", name, ", path);");
  }
  const std::string field =
      absl::StrCat("Field(in, line, column, ",
                   item.length == kOpen ? std::string("-1") : absl::StrCat(item.length),
                   "LL, ", name, ", path)");
  if (item.is_separator()) return absl::StrCat(field, ";");
  const std::string type = Literal(PrimitiveTypeName(*item.dtype));
  std::string text;
  switch (*item.dtype) {
    case PrimitiveType::kByte:
    case PrimitiveType::kShort:
    case PrimitiveType::kInteger:
    case PrimitiveType::kLong:
      text = absl::StrCat("Str(ParseInteger(TrimBoth(", field, "), ",
                          *IntrinsicLength(*item.dtype) * 8, ", ", type,
                          ", path, line))");
      break;
    case PrimitiveType::kFloat:
      text = absl::StrCat("Real(ParseFloat(TrimBoth(", field, "), ", type,
                          ", path, line))");
      break;
    case PrimitiveType::kDouble:
      text = absl::StrCat("Real(ParseDouble(TrimBoth(", field, "), ", type,
                          ", path, line))");
      break;
    case PrimitiveType::kString:
      text = absl::StrCat("Quote(TrimRight(", field, "))");
      break;
    case PrimitiveType::kChar:
      text = absl::StrCat("Quote(", field, ")");
      break;
  }
  return absl::StrCat("Emit(line, column, path, ", text, ");");
}

// Statements reading one occurrence once the loop variables are bound.
std::string OccurrenceBody(const LinearItem& item, Mode mode,
                           const std::vector<ActiveLoop>& active,
                           const std::string& indent) {
  std::string out;
  const bool line_terminator =
      item.is_separator() && IsLineTerminator(*item.separator);
  if (mode == Mode::kChar) {
    absl::StrAppend(&out, indent, "const long long line = ",
                    CoordinateExpression(item.start.line, active, Axis::kLine),
                    ";\n");
  }
  if (mode == Mode::kByte || !line_terminator) {
    absl::StrAppend(
        &out, indent, "const long long column = ",
        CoordinateExpression(item.start.column, active, Axis::kColumn), ";\n");
  }
  absl::StrAppend(&out, indent, "const std::string path = ",
                  PathExpression(item, active), ";\n");
  absl::StrAppend(&out, indent, ReadStatement(item, mode), "\n");
  return out;
}

std::string EmitAllOccurrences(const LinearItem& item, Mode mode) {
  const std::vector<ActiveLoop> active = ActiveLoops(item);
  std::string out = absl::StrCat("  {  // ", Literal(item.path), "\n");
  for (const ActiveLoop& a : active) {
    if (a.loop->repetition == kOpen) {
      absl::StrAppend(&out, "    const long long avail", a.index, " = ",
                      AvailableCall(mode, *a.loop), ";\n");
    }
  }
  std::string indent = "    ";
  std::vector<std::string> closers;
  for (const ActiveLoop& a : active) {
    if (a.loop->repetition == kOpen) {
      // Unknown count: keep going while data remains.
      absl::StrAppend(&out, indent, "long long ", a.var, " = 0;\n", indent,
                      "while (", a.var, " * ", a.loop->interval, "LL < avail",
                      a.index, ") {\n");
      closers.push_back(absl::StrCat(indent, "  ++", a.var, ";\n", indent,
                                     "}\n"));
    } else {
      absl::StrAppend(&out, indent, "for (long long ", a.var, " = 0; ", a.var,
                      " < ", a.loop->repetition, "LL; ++", a.var, ") {\n");
      closers.push_back(absl::StrCat(indent, "}\n"));
    }
    indent += "  ";
  }
  out += OccurrenceBody(item, mode, active, indent);
  for (auto it = closers.rbegin(); it != closers.rend(); ++it) out += *it;
  out += "  }\n";
  return out;
}

absl::StatusOr<std::string> EmitOneOccurrence(const LinearItem& item, Mode mode,
                                              std::int64_t occurrence) {
  const std::vector<ActiveLoop> active = ActiveLoops(item);
  bool open = false;
  std::int64_t known = 1;
  for (const ActiveLoop& a : active) {
    if (a.loop->repetition == kOpen) {
      open = true;
    } else if (known <= std::numeric_limits<std::int64_t>::max() /
                            a.loop->repetition) {
      known *= a.loop->repetition;
    } else {
      known = std::numeric_limits<std::int64_t>::max();
    }
  }
  if (!open && occurrence > known) {
    return absl::InvalidArgumentError(
        absl::StrCat("occurrence ", occurrence, " of ", item.path,
                     " exceeds its repetition ", known));
  }
  std::string out = absl::StrCat("  {  // ", Literal(item.path), " #",
                                 occurrence, "\n");
  std::vector<std::string> counts;
  for (const ActiveLoop& a : active) {
    std::string count;
    if (a.loop->repetition == kOpen) {
      absl::StrAppend(&out, "    const long long avail", a.index, " = ",
                      AvailableCall(mode, *a.loop), ";\n");
      count = absl::StrCat("(avail", a.index, " + ", a.loop->interval - 1,
                           "LL) / ", a.loop->interval, "LL");
    } else {
      count = absl::StrCat(a.loop->repetition, "LL");
    }
    absl::StrAppend(&out, "    const long long count", a.index, " = ", count,
                    ";\n");
    counts.push_back(absl::StrCat("count", a.index));
  }
  if (open) {
    absl::StrAppend(
        &out, "    const long long total = Product({",
        absl::StrJoin(counts, ", "), "});\n", "    if (", occurrence,
        "LL > total) {\n", "      Fail(std::string(",
        Literal(absl::StrCat("occurrence ", occurrence, " of ", item.path,
                             " is beyond the end of the data (")),
        ") + Str(total) + \" available)\");\n", "    }\n");
  }
  if (!active.empty()) {
    absl::StrAppend(&out, "    long long rest = ", occurrence - 1, "LL;\n");
    for (auto it = active.rbegin(); it != active.rend(); ++it) {
      absl::StrAppend(&out, "    const long long ", it->var, " = rest % count",
                      it->index, ";\n", "    rest /= count", it->index, ";\n");
    }
    absl::StrAppend(&out, "    static_cast<void>(rest);\n");
  }
  out += OccurrenceBody(item, mode, active, "    ");
  out += "  }\n";
  return out;
}

absl::Status CheckSupported(const LinearSequence& sequence) {
  bool after_open_lines = false;
  for (const LinearItem& item : sequence.items) {
    bool open = false;
    for (const Loop& loop : item.loops) {
      if (loop.repetition != kOpen) continue;
      open = true;
      if (loop.interval <= 0) {
        return absl::FailedPreconditionError(absl::StrCat(
            item.path, ": an open repetition needs a positive stride"));
      }
    }
    if (sequence.mode == Mode::kChar && after_open_lines && !open) {
      return absl::UnimplementedError(absl::StrCat(
          "unsupported layout: ", item.path,
          " follows an open-ended line group"));
    }
    after_open_lines = after_open_lines || open;
  }
  return absl::OkStatus();
}

std::string TrailingChecks(const LinearSequence& sequence) {
  std::string out;
  std::vector<std::string> seen;
  for (const LinearItem& item : sequence.items) {
    for (const Loop& loop : item.loops) {
      if (loop.repetition != kOpen || loop.interval <= 0) continue;
      const std::string group = absl::StrJoin(
          item.segments.begin(),
          item.segments.begin() + static_cast<std::ptrdiff_t>(loop.segment) + 1,
          "/");
      std::string check = absl::StrCat(
          "  CheckTrailing(", AvailableCall(sequence.mode, loop), " % ",
          loop.interval, "LL, ", Literal(group), ", ",
          sequence.mode == Mode::kByte ? "\"bytes\"" : "\"lines\"", ");\n");
      if (std::find(seen.begin(), seen.end(), check) != seen.end()) continue;
      seen.push_back(check);
      out += check;
    }
  }
  return out;
}

class CppTarget : public EmissionTarget {
 public:
  std::string id() const override { return "cpp"; }

  ScaffoldPlan Plan() const override {
    return ScaffoldPlan{{
        {SectionKind::kImports, std::string(kImports)},
        {SectionKind::kContainerDecl, std::string(kContainerDecl)},
        {SectionKind::kEntryPoint, std::string(kEntryPoint)},
        {SectionKind::kReaderRoutine, std::string(kReaderRoutine)},
        {SectionKind::kOutputRoutine, std::string(kOutputRoutine)},
    }};
  }

  absl::StatusOr<std::string> EmitBody(
      const LinearSequence& sequence,
      const Selection* selection) const override {
    absl::Status status = CheckSupported(sequence);
    if (!status.ok()) return status;
    std::string out;
    if (sequence.mode == Mode::kChar) out += "  LoadLines(in);\n";
    if (selection != nullptr) {
      const LinearItem* item = sequence.Find(selection->path);
      if (selection->occurrence == kAllOccurrences) {
        return out + EmitAllOccurrences(*item, sequence.mode);
      }
      absl::StatusOr<std::string> code =
          EmitOneOccurrence(*item, sequence.mode, selection->occurrence);
      if (!code.ok()) return code.status();
      return out + *code;
    }
    for (const LinearItem& item : sequence.items) {
      out += EmitAllOccurrences(item, sequence.mode);
    }
    out += TrailingChecks(sequence);
    return out;
  }

  std::string EntryContract() const override {
    return "reader DATA_FILE: prints one \"path = value\" line per value on "
           "stdout and exits 0; exits 1 with \"error: ...\" on stderr when "
           "the data cannot be read; exits 2 on bad usage";
  }
};

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<EmissionTarget>, std::less<>> targets;
};

std::vector<std::string> TargetIds(const Registry& registry) {
  std::vector<std::string> ids;
  for (const auto& entry : registry.targets) ids.push_back(entry.first);
  return ids;
}

Registry& GetRegistry() {
  static Registry* registry = [] {
    auto* r = new Registry;
    r->targets.emplace("cpp", std::make_unique<CppTarget>());
    return r;
  }();
  return *registry;
}

absl::StatusOr<const EmissionTarget*> FindTarget(absl::string_view id) {
  Registry& registry = GetRegistry();
  std::lock_guard<std::mutex> lock(registry.mutex);
  auto it = registry.targets.find(id);
  if (it == registry.targets.end()) {
    return absl::NotFoundError(absl::StrCat(
        "unknown emission target \"", id, "\"; registered: ",
        absl::StrJoin(TargetIds(registry), ", ")));
  }
  return it->second.get();
}

absl::StatusOr<GeneratedProgram> Assemble(const EmissionTarget& target,
                                          const LinearSequence& sequence,
                                          const Selection* selection) {
  absl::StatusOr<std::string> body = target.EmitBody(sequence, selection);
  if (!body.ok()) return body.status();
  GeneratedProgram program;
  program.target_id = target.id();
  program.entry_contract = target.EntryContract();
  bool spliced = false;
  for (const ScaffoldSection& section : target.Plan().sections) {
    const std::size_t marker = section.content.find(
        kBodyMarker.data(), 0, kBodyMarker.size());
    if (marker == std::string::npos) {
      program.source_text += section.content;
      continue;
    }
    program.source_text += section.content.substr(0, marker);
    program.source_text += *body;
    program.source_text += section.content.substr(marker + kBodyMarker.size());
    spliced = true;
  }
  if (!spliced) {
    return absl::InternalError(
        absl::StrCat("target ", target.id(), " has no body marker"));
  }
  return program;
}

}  // namespace

absl::string_view SectionKindName(SectionKind kind) {
  switch (kind) {
    case SectionKind::kImports:
      return "imports";
    case SectionKind::kContainerDecl:
      return "container-decl";
    case SectionKind::kEntryPoint:
      return "entry-point";
    case SectionKind::kReaderRoutine:
      return "reader-routine";
    case SectionKind::kOutputRoutine:
      return "output-routine";
  }
  return "unknown";
}

absl::Status RegisterEmissionTarget(std::unique_ptr<EmissionTarget> target) {
  Registry& registry = GetRegistry();
  std::lock_guard<std::mutex> lock(registry.mutex);
  const std::string id = target->id();
  if (!registry.targets.emplace(id, std::move(target)).second) {
    return absl::AlreadyExistsError(
        absl::StrCat("emission target \"", id, "\" is already registered"));
  }
  return absl::OkStatus();
}

std::vector<std::string> RegisteredTargets() {
  Registry& registry = GetRegistry();
  std::lock_guard<std::mutex> lock(registry.mutex);
  return TargetIds(registry);
}

absl::StatusOr<ScaffoldPlan> PlanScaffold(absl::string_view target_id) {
  absl::StatusOr<const EmissionTarget*> target = FindTarget(target_id);
  if (!target.ok()) return target.status();
  return (*target)->Plan();
}

absl::StatusOr<GeneratedProgram> GenerateSequential(
    const LinearSequence& sequence, absl::string_view target_id) {
  absl::StatusOr<const EmissionTarget*> target = FindTarget(target_id);
  if (!target.ok()) return target.status();
  return Assemble(**target, sequence, nullptr);
}

absl::StatusOr<GeneratedProgram> GenerateRandom(const LinearSequence& sequence,
                                                const Selection& selection,
                                                absl::string_view target_id) {
  absl::StatusOr<const EmissionTarget*> target = FindTarget(target_id);
  if (!target.ok()) return target.status();
  const LinearItem* item = sequence.Find(selection.path);
  if (item == nullptr) {
    return absl::NotFoundError(
        absl::StrCat("no item with path ", QuoteText(selection.path)));
  }
  if (item->is_separator()) {
    return absl::InvalidArgumentError(absl::StrCat(
        selection.path, " is a separator and carries no value"));
  }
  if (selection.occurrence < 0) {
    return absl::InvalidArgumentError("occurrence must be positive");
  }
  return Assemble(**target, sequence, &selection);
}

}  // namespace dfml
