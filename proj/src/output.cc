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

#include "dfml/output.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "nlohmann/json.hpp"

namespace dfml {
namespace {

using Json = nlohmann::ordered_json;

Json ToJson(const Scalar& scalar) {
  if (const auto* i = std::get_if<std::int64_t>(&scalar)) return *i;
  if (const auto* d = std::get_if<double>(&scalar)) {
    // JSON has no NaN or infinity; keep them readable as strings.
    if (!std::isfinite(*d)) return FormatReal(*d);
    return *d;
  }
  if (const auto* s = std::get_if<std::string>(&scalar)) return *s;
  return FormatScalar(scalar);
}

std::string CsvCell(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvValue(const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value.data)) return CsvCell(*s);
  return CsvCell(FormatScalar(value.data));
}

}  // namespace

std::string FormatCanonicalText(const std::vector<Value>& values) {
  std::string out;
  for (const Value& value : values) {
    absl::StrAppend(&out, value.source_path, " = ", FormatScalar(value.data),
                    "\n");
  }
  return out;
}

std::string FormatJson(const RecordSet& set) {
  Json root = Json::object();
  Json fields = Json::object();
  for (const auto& [name, value] : set.fields) fields[name] = ToJson(value.data);
  Json records = Json::array();
  for (const Record& record : set.records) {
    Json row = Json::object();
    for (const auto& [name, value] : record.fields) {
      row[name] = ToJson(value.data);
    }
    records.push_back(std::move(row));
  }
  Json issues = Json::array();
  for (const Issue& issue : set.issues) {
    issues.push_back(Json{
        {"severity", issue.severity == Severity::kError ? "error" : "warning"},
        {"path", issue.node_path},
        {"message", issue.message}});
  }
  root["fields"] = std::move(fields);
  root["records"] = std::move(records);
  root["issues"] = std::move(issues);
  return root.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string FormatCsv(const RecordSet& set) {
  std::vector<std::string> blocks;
  std::string header = "field,value\n";
  for (const auto& [name, value] : set.fields) {
    absl::StrAppend(&header, CsvCell(name), ",", CsvValue(value), "\n");
  }
  blocks.push_back(std::move(header));

  std::vector<std::string> groups;
  for (const Record& record : set.records) {
    if (std::find(groups.begin(), groups.end(), record.group) == groups.end()) {
      groups.push_back(record.group);
    }
  }
  for (const std::string& group : groups) {
    std::vector<std::string> columns;
    for (const Record& record : set.records) {
      if (record.group != group) continue;
      for (const auto& field : record.fields) {
        if (std::find(columns.begin(), columns.end(), field.first) ==
            columns.end()) {
          columns.push_back(field.first);
        }
      }
    }
    std::vector<std::string> cells = {"record"};
    for (const std::string& column : columns) cells.push_back(CsvCell(column));
    std::string block = absl::StrCat(absl::StrJoin(cells, ","), "\n");
    for (const Record& record : set.records) {
      if (record.group != group) continue;
      cells = {CsvCell(record.key)};
      for (const std::string& column : columns) {
        std::string cell;
        for (const auto& field : record.fields) {
          if (field.first == column) {
            cell = CsvValue(field.second);
            break;
          }
        }
        cells.push_back(std::move(cell));
      }
      absl::StrAppend(&block, absl::StrJoin(cells, ","), "\n");
    }
    blocks.push_back(std::move(block));
  }
  return absl::StrJoin(blocks, "\n");
}

}  // namespace dfml
