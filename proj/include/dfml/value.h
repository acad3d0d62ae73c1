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

#ifndef DFML_VALUE_H_
#define DFML_VALUE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "absl/strings/string_view.h"
#include "dfml/model.h"

namespace dfml {

using Bytes = std::vector<std::uint8_t>;

struct SeparatorMark {
  SeparatorType type = SeparatorType::kSpace;

  friend bool operator==(const SeparatorMark&, const SeparatorMark&) = default;
};

using Scalar = std::variant<std::int64_t, double, std::string, SeparatorMark>;

// Bitwise for doubles, so NaN payloads and -0.0 compare exactly.
bool ScalarsIdentical(const Scalar& a, const Scalar& b);

struct Value {
  Scalar data;
  // Item path without occurrence numbers, e.g. "Point/X".
  std::string item_path;
  // Path with 1-based occurrence numbers on repeating segments, e.g.
  // "Point[3]/X".
  std::string source_path;
  Position source_location;

  friend bool operator==(const Value& a, const Value& b) {
    return ScalarsIdentical(a.data, b.data) && a.item_path == b.item_path &&
           a.source_path == b.source_path &&
           a.source_location == b.source_location;
  }
};

// Canonical rendering shared by every output: integers in decimal, reals in
// shortest round-trip form, text double-quoted with JSON-style escapes.
std::string FormatScalar(const Scalar& scalar);
std::string FormatReal(double value);
std::string QuoteText(absl::string_view text);

}  // namespace dfml

#endif  // DFML_VALUE_H_
