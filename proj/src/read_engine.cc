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

#include "dfml/read_engine.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "dfml/decode.h"

namespace dfml {
namespace {

constexpr ByteOrder kDefaultByteOrder = ByteOrder::kLittleEndian;

bool IsPad(char c) { return c == ' ' || c == '\t'; }

absl::string_view TrimRight(absl::string_view text) {
  while (!text.empty() && IsPad(text.back())) text.remove_suffix(1);
  return text;
}

absl::string_view TrimBoth(absl::string_view text) {
  while (!text.empty() && IsPad(text.front())) text.remove_prefix(1);
  return TrimRight(text);
}

bool IsBlank(absl::string_view line) { return TrimBoth(line).empty(); }

std::vector<absl::string_view> SplitLines(absl::string_view text) {
  std::vector<absl::string_view> lines;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == absl::string_view::npos) end = text.size();
    absl::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    begin = end + 1;
  }
  return lines;
}

std::int64_t CeilDiv(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t SaturatingProduct(const std::vector<std::int64_t>& counts) {
  std::int64_t total = 1;
  for (std::int64_t count : counts) {
    if (count == 0) return 0;
    if (total > std::numeric_limits<std::int64_t>::max() / count) {
      return std::numeric_limits<std::int64_t>::max();
    }
    total *= count;
  }
  return total;
}

template <typename T>
bool ParseWhole(absl::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return !token.empty() && ec == std::errc() && ptr == end;
}

absl::StatusOr<Scalar> ParseNumber(absl::string_view token,
                                   PrimitiveType type) {
  switch (type) {
    case PrimitiveType::kByte:
    case PrimitiveType::kShort:
    case PrimitiveType::kInteger:
    case PrimitiveType::kLong: {
      std::int64_t value = 0;
      if (ParseWhole(token, value)) {
        const int bits = static_cast<int>(*IntrinsicLength(type)) * 8;
        const std::int64_t limit =
            bits == 64 ? 0 : (std::int64_t{1} << (bits - 1));
        if (bits == 64 || (value >= -limit && value < limit)) return value;
      }
      break;
    }
    case PrimitiveType::kFloat: {
      float value = 0;
      if (ParseWhole(token, value)) return static_cast<double>(value);
      break;
    }
    case PrimitiveType::kDouble: {
      double value = 0;
      if (ParseWhole(token, value)) return value;
      break;
    }
    default:
      break;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "cannot parse ", QuoteText(token), " as ", PrimitiveTypeName(type)));
}

bool SeparatorMatches(SeparatorType type, char c) {
  if (IsLineTerminator(type)) return c == '\n' || c == '\r';
  return c == SeparatorChar(type);
}

void CheckSeparator(absl::string_view content, SeparatorType type,
                    const std::string& source_path,
                    std::vector<Issue>* issues) {
  for (char c : content) {
    if (!SeparatorMatches(type, c)) {
      if (issues != nullptr) {
        issues->push_back(Issue{
            Severity::kError, source_path,
            absl::StrCat("expected only ", SeparatorTypeName(type),
                         " characters, found ", QuoteText(content))});
      }
      return;
    }
  }
}

absl::Status Truncated(const LinearItem& item, const std::string& source_path,
                       absl::string_view detail) {
  return absl::OutOfRangeError(absl::StrCat("truncated record: item ",
                                            item.path, " (occurrence ",
                                            source_path, ") ", detail));
}

// Reads one char-mode occurrence from its line.
absl::StatusOr<Scalar> ExtractFromLine(absl::string_view line,
                                       const Position& at,
                                       const LinearItem& item,
                                       const std::string& source_path,
                                       std::vector<Issue>* issues) {
  if (item.is_separator() && IsLineTerminator(*item.separator)) {
    return SeparatorMark{*item.separator};
  }
  const auto width = static_cast<std::int64_t>(line.size());
  if (at.column > width) {
    return absl::OutOfRangeError(absl::StrCat(
        "line ", at.line, " has ", width, " characters but ", source_path,
        " starts at column ", at.column));
  }
  const std::int64_t end =
      item.length == kOpen ? width : std::min(width, at.column + item.length);
  const absl::string_view field = line.substr(
      static_cast<std::size_t>(at.column),
      static_cast<std::size_t>(end - at.column));
  if (item.is_separator()) {
    CheckSeparator(field, *item.separator, source_path, issues);
    return SeparatorMark{*item.separator};
  }
  switch (*item.dtype) {
    case PrimitiveType::kString:
      return std::string(TrimRight(field));
    case PrimitiveType::kChar:
      return std::string(field);
    default: {
      absl::StatusOr<Scalar> number = ParseNumber(TrimBoth(field), *item.dtype);
      if (!number.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat(source_path, " at line ", at.line, ": ",
                         number.status().message()));
      }
      return number;
    }
  }
}

class Engine {
 public:
  Engine(const ByteSource& source, Mode mode) : source_(source), mode_(mode) {}

  absl::Status Load() {
    if (mode_ != Mode::kChar) return absl::OkStatus();
    absl::StatusOr<std::string> text = ReadAllText(source_);
    if (!text.ok()) return text.status();
    text_ = *std::move(text);
    lines_ = SplitLines(text_);
    return absl::OkStatus();
  }

  absl::StatusOr<std::vector<std::int64_t>> Counts(
      const LinearItem& item) const {
    std::vector<std::int64_t> counts;
    for (const Loop& loop : item.loops) {
      if (loop.repetition != kOpen) {
        counts.push_back(loop.repetition);
        continue;
      }
      if (loop.interval <= 0) {
        return absl::FailedPreconditionError(absl::StrCat(
            item.path, ": an open repetition needs a positive stride"));
      }
      counts.push_back(CeilDiv(Available(loop), loop.interval));
    }
    return counts;
  }

  // Units between the loop origin and the end of the data: bytes, or lines
  // up to the end of the section.
  std::int64_t Available(const Loop& loop) const {
    if (mode_ == Mode::kByte) {
      return std::max<std::int64_t>(0, source_.size() - loop.origin.column);
    }
    std::int64_t count = 0;
    const auto total = static_cast<std::int64_t>(lines_.size());
    for (std::int64_t line = loop.origin.line;
         line >= 1 && line <= total && !IsBlank(lines_[line - 1]); ++line) {
      ++count;
    }
    return count;
  }

  absl::Status CheckTrailing(const LinearSequence& sequence) const {
    for (const LinearItem& item : sequence.items) {
      for (const Loop& loop : item.loops) {
        if (loop.repetition != kOpen || loop.interval <= 0) continue;
        const std::int64_t remainder = Available(loop) % loop.interval;
        if (remainder == 0) continue;
        std::vector<std::string> group(
            item.segments.begin(),
            item.segments.begin() + static_cast<std::ptrdiff_t>(loop.segment) + 1);
        return absl::OutOfRangeError(absl::StrCat(
            "trailing partial record in ", absl::StrJoin(group, "/"), ": ",
            remainder, mode_ == Mode::kByte ? " bytes" : " lines",
            " after the last complete record"));
      }
    }
    return absl::OkStatus();
  }

  absl::StatusOr<Scalar> Read(const LinearItem& item, const Position& at,
                              const std::string& source_path,
                              std::vector<Issue>* issues) const {
    if (mode_ == Mode::kChar) {
      const auto total = static_cast<std::int64_t>(lines_.size());
      if (at.line < 1 || at.line > total) {
        return Truncated(item, source_path,
                         absl::StrCat("needs line ", at.line,
                                      " but the data has ", total, " lines"));
      }
      return ExtractFromLine(lines_[static_cast<std::size_t>(at.line - 1)],
                             at, item, source_path, issues);
    }
    const std::int64_t size = source_.size();
    const std::int64_t length =
        item.length == kOpen ? size - at.column : item.length;
    if (at.column < 0 || length < 0 || at.column > size - length) {
      return Truncated(item, source_path,
                       absl::StrCat("needs bytes [", at.column, ", ",
                                    at.column + std::max<std::int64_t>(length, 0),
                                    ") but the data ends at byte ", size));
    }
    Bytes buffer(static_cast<std::size_t>(length));
    absl::Status status = source_.ReadAt(at.column, buffer);
    if (!status.ok()) return status;
    if (item.is_separator()) {
      CheckSeparator(absl::string_view(reinterpret_cast<const char*>(buffer.data()),
                                       buffer.size()),
                     *item.separator, source_path, issues);
      return SeparatorMark{*item.separator};
    }
    return DecodePrimitive(buffer, *item.dtype,
                           item.byte_order.value_or(kDefaultByteOrder));
  }

 private:
  const ByteSource& source_;
  Mode mode_;
  std::string text_;
  std::vector<absl::string_view> lines_;
};

Position Address(const LinearItem& item,
                 const std::vector<std::int64_t>& index) {
  Position at = item.start;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const std::int64_t offset = index[i] * item.loops[i].interval;
    if (item.loops[i].axis == Axis::kLine) {
      at.line += offset;
    } else if (at.column != kOpen) {
      at.column += offset;
    }
  }
  return at;
}

std::string SourcePath(const LinearItem& item,
                       const std::vector<std::int64_t>& index) {
  std::vector<std::string> parts = item.segments;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (item.loops[i].repetition == 1) continue;
    absl::StrAppend(&parts[item.loops[i].segment], "[", index[i] + 1, "]");
  }
  return absl::StrJoin(parts, "/");
}

// Calls `visit` for every index vector in row-major order.
absl::Status ForEachIndex(
    const std::vector<std::int64_t>& counts,
    const std::function<absl::Status(const std::vector<std::int64_t>&)>&
        visit) {
  for (std::int64_t count : counts) {
    if (count == 0) return absl::OkStatus();
  }
  std::vector<std::int64_t> index(counts.size(), 0);
  while (true) {
    absl::Status status = visit(index);
    if (!status.ok()) return status;
    std::size_t level = counts.size();
    while (level > 0) {
      --level;
      if (++index[level] < counts[level]) break;
      index[level] = 0;
      if (level == 0) return absl::OkStatus();
    }
    if (counts.empty()) return absl::OkStatus();
  }
}

std::map<std::string, const LinearItem*, std::less<>> ItemsByPath(
    const LinearSequence& sequence) {
  std::map<std::string, const LinearItem*, std::less<>> items;
  for (const LinearItem& item : sequence.items) items.emplace(item.path, &item);
  return items;
}

bool MatchesExpected(const Scalar& data, const LinearItem& item) {
  const std::string& expected = *item.expected_value;
  const absl::string_view trimmed = absl::StripAsciiWhitespace(expected);
  if (const auto* integer = std::get_if<std::int64_t>(&data)) {
    std::int64_t wanted = 0;
    return ParseWhole(trimmed, wanted) && wanted == *integer;
  }
  if (const auto* real = std::get_if<double>(&data)) {
    double wanted = 0;
    if (!ParseWhole(trimmed, wanted)) return false;
    if (item.dtype == PrimitiveType::kFloat) {
      wanted = static_cast<double>(static_cast<float>(wanted));
    }
    return wanted == *real;
  }
  if (const auto* text = std::get_if<std::string>(&data)) {
    if (*text == expected) return true;
    // A single character stands for a span filled with it, as in "=" rows.
    return item.dtype == PrimitiveType::kString && expected.size() == 1 &&
           !text->empty() &&
           std::all_of(text->begin(), text->end(),
                       [&](char c) { return c == expected[0]; });
  }
  return true;
}

}  // namespace

std::size_t RecordSet::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [](const Issue& issue) {
        return issue.severity == Severity::kError;
      }));
}

absl::StatusOr<Selection> ParseSelection(absl::string_view text) {
  Selection selection;
  const std::size_t hash = text.rfind('#');
  if (hash == absl::string_view::npos) {
    selection.path = std::string(text);
    selection.occurrence = 1;
  } else {
    selection.path = std::string(text.substr(0, hash));
    const absl::string_view tail =
        absl::StripAsciiWhitespace(text.substr(hash + 1));
    if (absl::AsciiStrToLower(tail) == "all") {
      selection.occurrence = kAllOccurrences;
    } else if (!ParseWhole(tail, selection.occurrence) ||
               selection.occurrence < 1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "bad occurrence ", QuoteText(tail),
          " in selection; expected a positive number or \"all\""));
    }
  }
  if (selection.path.empty()) {
    return absl::InvalidArgumentError("selection has an empty path");
  }
  return selection;
}

std::string FormatSelection(const Selection& selection) {
  return absl::StrCat(selection.path, "#",
                      selection.occurrence == kAllOccurrences
                          ? std::string("all")
                          : std::to_string(selection.occurrence));
}

absl::StatusOr<RecordSet> ReadSequential(const ByteSource& source,
                                         const LinearSequence& sequence) {
  Engine engine(source, sequence.mode);
  absl::Status status = engine.Load();
  if (!status.ok()) return status;
  std::vector<Value> values;
  std::vector<Issue> issues;
  for (const LinearItem& item : sequence.items) {
    absl::StatusOr<std::vector<std::int64_t>> counts = engine.Counts(item);
    if (!counts.ok()) return counts.status();
    status = ForEachIndex(
        *counts, [&](const std::vector<std::int64_t>& index) -> absl::Status {
          const Position at = Address(item, index);
          std::string source_path = SourcePath(item, index);
          absl::StatusOr<Scalar> data =
              engine.Read(item, at, source_path, &issues);
          if (!data.ok()) return data.status();
          if (!item.is_separator()) {
            values.push_back(
                Value{*std::move(data), item.path, std::move(source_path), at});
          }
          return absl::OkStatus();
        });
    if (!status.ok()) return status;
  }
  status = engine.CheckTrailing(sequence);
  if (!status.ok()) return status;
  std::stable_sort(values.begin(), values.end(),
                   [](const Value& a, const Value& b) {
                     return PositionLess(a.source_location, b.source_location);
                   });
  RecordSet set = GroupValues(std::move(values), sequence);
  set.issues = std::move(issues);
  std::vector<Issue> mismatches = CheckExpected(set.values, sequence);
  set.issues.insert(set.issues.end(), mismatches.begin(), mismatches.end());
  return set;
}

absl::StatusOr<std::vector<Value>> ReadRandom(const ByteSource& source,
                                              const LinearSequence& sequence,
                                              const Selection& selection) {
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
  Engine engine(source, sequence.mode);
  absl::Status status = engine.Load();
  if (!status.ok()) return status;
  absl::StatusOr<std::vector<std::int64_t>> counts = engine.Counts(*item);
  if (!counts.ok()) return counts.status();

  std::vector<Value> values;
  auto visit = [&](const std::vector<std::int64_t>& index) -> absl::Status {
    const Position at = Address(*item, index);
    std::string source_path = SourcePath(*item, index);
    absl::StatusOr<Scalar> data = engine.Read(*item, at, source_path, nullptr);
    if (!data.ok()) return data.status();
    values.push_back(
        Value{*std::move(data), item->path, std::move(source_path), at});
    return absl::OkStatus();
  };
  if (selection.occurrence == kAllOccurrences) {
    status = ForEachIndex(*counts, visit);
    if (!status.ok()) return status;
    return values;
  }

  const std::int64_t total = SaturatingProduct(*counts);
  if (selection.occurrence > total) {
    const bool open = std::any_of(
        item->loops.begin(), item->loops.end(),
        [](const Loop& loop) { return loop.repetition == kOpen; });
    if (open) {
      return absl::OutOfRangeError(absl::StrCat(
          "occurrence ", selection.occurrence, " of ", item->path,
          " is beyond the end of the data (", total, " available)"));
    }
    return absl::InvalidArgumentError(
        absl::StrCat("occurrence ", selection.occurrence, " of ", item->path,
                     " exceeds its repetition ", total));
  }
  std::vector<std::int64_t> index(counts->size(), 0);
  std::int64_t rest = selection.occurrence - 1;
  for (std::size_t level = counts->size(); level > 0; --level) {
    index[level - 1] = rest % (*counts)[level - 1];
    rest /= (*counts)[level - 1];
  }
  status = visit(index);
  if (!status.ok()) return status;
  return values;
}

absl::StatusOr<std::vector<Value>> ReadCharLineFields(
    absl::string_view line, const std::vector<LinearItem>& items) {
  std::vector<Value> values;
  for (const LinearItem& item : items) {
    absl::StatusOr<Scalar> data =
        ExtractFromLine(line, item.start, item, item.path, nullptr);
    if (!data.ok()) return data.status();
    if (item.is_separator()) continue;
    values.push_back(Value{*std::move(data), item.path, item.path, item.start});
  }
  return values;
}

std::vector<Issue> CheckExpected(const std::vector<Value>& values,
                                 const LinearSequence& sequence) {
  const auto items = ItemsByPath(sequence);
  std::vector<Issue> issues;
  for (const Value& value : values) {
    auto it = items.find(value.item_path);
    if (it == items.end() || !it->second->expected_value) continue;
    const LinearItem& item = *it->second;
    if (MatchesExpected(value.data, item)) continue;
    issues.push_back(Issue{
        Severity::kError, value.source_path,
        absl::StrCat("expected ", *item.expected_value, ", found ",
                     FormatScalar(value.data), " at ",
                     FormatPosition(value.source_location, sequence.mode))});
  }
  return issues;
}

RecordSet GroupValues(std::vector<Value> values,
                      const LinearSequence& sequence) {
  const auto items = ItemsByPath(sequence);
  RecordSet set;
  std::map<std::string, std::size_t> record_index;
  for (const Value& value : values) {
    auto it = items.find(value.item_path);
    const LinearItem* item = it == items.end() ? nullptr : it->second;
    std::ptrdiff_t record_segment = -1;
    if (item != nullptr) {
      for (const Loop& loop : item->loops) {
        if (loop.segment + 1 < item->segments.size() && loop.repetition != 1) {
          record_segment = static_cast<std::ptrdiff_t>(loop.segment);
          break;
        }
      }
    }
    if (record_segment < 0) {
      set.fields.emplace_back(value.source_path, value);
      continue;
    }
    const std::vector<std::string> parts =
        absl::StrSplit(value.source_path, '/');
    const auto split = record_segment + 1;
    const std::string key =
        absl::StrJoin(parts.begin(), parts.begin() + split, "/");
    auto [slot, inserted] = record_index.emplace(key, set.records.size());
    if (inserted) {
      set.records.push_back(Record{
          key,
          absl::StrJoin(item->segments.begin(),
                        item->segments.begin() + split, "/"),
          {}});
    }
    set.records[slot->second].fields.emplace_back(
        absl::StrJoin(parts.begin() + split, parts.end(), "/"), value);
  }
  set.values = std::move(values);
  return set;
}

}  // namespace dfml
