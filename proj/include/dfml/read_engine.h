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

// Interprets a linear sequence against a data file.
//
// Byte mode addresses are offsets into the raw bytes. Char mode splits the
// data into lines (LF or CR LF); an open-ended line loop runs until the end
// of the data or the first blank line, whichever comes first.

#ifndef DFML_READ_ENGINE_H_
#define DFML_READ_ENGINE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dfml/byte_source.h"
#include "dfml/linearizer.h"
#include "dfml/model.h"
#include "dfml/value.h"

namespace dfml {

// One occurrence of a repeating group, e.g. key "Point[3]" in group "Point".
struct Record {
  std::string key;
  std::string group;
  // Names relative to the group, e.g. "X".
  std::vector<std::pair<std::string, Value>> fields;
};

struct RecordSet {
  // Every data value in address order. Separators are checked but not kept.
  std::vector<Value> values;
  // Values outside any repeating group, keyed by source path.
  std::vector<std::pair<std::string, Value>> fields;
  std::vector<Record> records;
  // Expected-value mismatches and separator content errors.
  std::vector<Issue> issues;

  std::size_t error_count() const;
};

inline constexpr std::int64_t kAllOccurrences = 0;

struct Selection {
  std::string path;
  // 1-based, counted row-major over the item's loops; kAllOccurrences
  // selects every occurrence.
  std::int64_t occurrence = kAllOccurrences;

  friend bool operator==(const Selection&, const Selection&) = default;
};

// "path#N" or "path#all"; a bare path means occurrence 1.
absl::StatusOr<Selection> ParseSelection(absl::string_view text);
std::string FormatSelection(const Selection& selection);

// Reads every item. Fails on truncated data, on a trailing partial record,
// and on char-mode fields that cannot be extracted or parsed; content
// mismatches are reported in RecordSet::issues instead.
absl::StatusOr<RecordSet> ReadSequential(const ByteSource& source,
                                         const LinearSequence& sequence);

// Reads only the selected occurrences. Byte mode touches just their spans.
absl::StatusOr<std::vector<Value>> ReadRandom(const ByteSource& source,
                                              const LinearSequence& sequence,
                                              const Selection& selection);

// Extracts same-line char-mode fields from one line of text. Values carry
// the items' own paths and start positions.
absl::StatusOr<std::vector<Value>> ReadCharLineFields(
    absl::string_view line, const std::vector<LinearItem>& items);

// Compares every value whose item has a constant expected value.
std::vector<Issue> CheckExpected(const std::vector<Value>& values,
                                 const LinearSequence& sequence);

// Splits address-ordered values into top-level fields and records.
RecordSet GroupValues(std::vector<Value> values,
                      const LinearSequence& sequence);

}  // namespace dfml

#endif  // DFML_READ_ENGINE_H_
