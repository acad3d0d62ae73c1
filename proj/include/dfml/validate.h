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

#ifndef DFML_VALIDATE_H_
#define DFML_VALIDATE_H_

#include <cstddef>
#include <vector>

#include "dfml/model.h"

namespace dfml {

struct ValidationReport {
  std::vector<Issue> issues;

  // A document is accepted for linearization when it has no errors;
  // warnings never block it.
  bool ok() const { return error_count() == 0; }
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Checks structure and layout: group children, string locations, byte-order
// placement, span widths against type widths, sibling ordering and overlap,
// group divisibility and reachability. Parse warnings are carried over.
ValidationReport ValidateDocument(const DfmlDocument& document);

}  // namespace dfml

#endif  // DFML_VALIDATE_H_
