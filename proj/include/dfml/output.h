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

#ifndef DFML_OUTPUT_H_
#define DFML_OUTPUT_H_

#include <string>
#include <vector>

#include "dfml/read_engine.h"
#include "dfml/value.h"

namespace dfml {

// One "source_path = value" line per value, in the given order. Generated
// readers print exactly this.
std::string FormatCanonicalText(const std::vector<Value>& values);

// {"fields": {...}, "records": [{...}], "issues": [...]}
std::string FormatJson(const RecordSet& set);

// A field,value block, then one block per record group with a header row.
// Blocks are separated by an empty line.
std::string FormatCsv(const RecordSet& set);

}  // namespace dfml

#endif  // DFML_OUTPUT_H_
