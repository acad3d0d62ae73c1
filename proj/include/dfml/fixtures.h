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

// Builders for synthetic data files matching the shipped corpus documents:
// an ESRI point shapefile (.shp main file) and the [SUBCATCHMENTS] section
// of a SWMM input file.

#ifndef DFML_FIXTURES_H_
#define DFML_FIXTURES_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "dfml/value.h"

namespace dfml {

inline constexpr std::int64_t kShapefileHeaderSize = 100;
inline constexpr std::int64_t kPointRecordSize = 28;

struct PointRecordSpec {
  std::int64_t record_number = 1;
  double x = 0;
  double y = 0;
};

// 100-byte header plus one 28-byte record per point. Lengths in the header
// and records are in 16-bit words.
Bytes BuildPointShapefile(const std::vector<PointRecordSpec>& points);

// Points numbered from 1 with pseudo-random coordinates.
std::vector<PointRecordSpec> SamplePoints(int count, std::uint64_t seed = 1);

inline constexpr int kSwmmColumnCount = 9;

// Column starts of a content row; the last column runs to end of line.
inline constexpr std::array<int, kSwmmColumnCount> kSwmmColumnStarts = {
    0, 10, 23, 34, 43, 55, 65, 75, 87};
inline constexpr int kSwmmLastColumnWidth = 5;

// Name, Rgage, OutID, Area, %Imperv, Width, Slope, Clength, Spack as they
// appear in the file.
using SwmmRow = std::array<std::string, kSwmmColumnCount>;

// Fails when a cell does not fit its column, ends in whitespace, or holds a
// line break.
absl::StatusOr<std::string> BuildSwmmSubcatchments(
    const std::vector<SwmmRow>& rows);

std::vector<SwmmRow> SampleSwmmRows(int count);

}  // namespace dfml

#endif  // DFML_FIXTURES_H_
