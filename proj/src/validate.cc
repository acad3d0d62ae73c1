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

#include "dfml/validate.h"

#include <algorithm>
#include <string>

#include "absl/strings/str_cat.h"
#include "layout.h"

namespace dfml {
namespace {

void CheckByteOrders(const std::vector<FormatNode>& nodes, Mode mode,
                     const std::string& parent,
                     std::vector<Issue>& issues) {
  const std::vector<std::string> names = SiblingNames(nodes);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const FormatNode& node = nodes[i];
    const std::string path =
        parent.empty() ? names[i] : absl::StrCat(parent, "/", names[i]);
    if (node.byte_order) {
      if (node.kind != NodeKind::kDataType) {
        issues.push_back({Severity::kError, path,
                          "byteOrder is only allowed on data-type elements"});
      } else if (mode != Mode::kByte) {
        issues.push_back({Severity::kError, path,
                          "byteOrder is only allowed in byte mode"});
      }
    }
    CheckByteOrders(node.children, mode, path, issues);
  }
}

std::size_t CountSeverity(const std::vector<Issue>& issues, Severity severity) {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [&](const Issue& issue) {
        return issue.severity == severity;
      }));
}

}  // namespace

std::size_t ValidationReport::error_count() const {
  return CountSeverity(issues, Severity::kError);
}

std::size_t ValidationReport::warning_count() const {
  return CountSeverity(issues, Severity::kWarning);
}

ValidationReport ValidateDocument(const DfmlDocument& document) {
  ValidationReport report;
  report.issues = document.warnings;
  CheckByteOrders(document.children, document.mode, "", report.issues);
  internal::Layout layout = internal::ComputeLayout(document);
  report.issues.insert(report.issues.end(), layout.issues.begin(),
                       layout.issues.end());
  return report;
}

}  // namespace dfml
