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

#include "dfml/fixtures.h"

#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace dfml {
namespace {

using ::dfml::testing::BaseTwoFiftySix;
using ::dfml::testing::Ieee754DoubleFromLittleEndian;
using ::dfml::testing::Reversed;

std::vector<std::uint8_t> Slice(const Bytes& data, std::size_t begin,
                                std::size_t end) {
  return {data.begin() + static_cast<std::ptrdiff_t>(begin),
          data.begin() + static_cast<std::ptrdiff_t>(end)};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines = absl::StrSplit(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

TEST(BuildPointShapefileTest, Sizes) {
  EXPECT_EQ(BuildPointShapefile(SamplePoints(3)).size(), 184u);
  EXPECT_EQ(BuildPointShapefile({}).size(), 100u);
}

TEST(BuildPointShapefileTest, EmptyHeader) {
  const Bytes data = BuildPointShapefile({});
  EXPECT_EQ(BaseTwoFiftySix(Slice(data, 0, 4)), 9994u);
  EXPECT_EQ(BaseTwoFiftySix(Slice(data, 4, 24)), 0u);
  EXPECT_EQ(BaseTwoFiftySix(Slice(data, 24, 28)), 50u);
  EXPECT_EQ(BaseTwoFiftySix(Reversed(Slice(data, 28, 32))), 1000u);
  EXPECT_EQ(BaseTwoFiftySix(Reversed(Slice(data, 32, 36))), 1u);
  for (std::size_t at = 36; at < 100; ++at) EXPECT_EQ(data[at], 0) << at;
}

TEST(BuildPointShapefileTest, SinglePointLayout) {
  const Bytes data = BuildPointShapefile({{1, 1.0, 2.0}});
  ASSERT_EQ(data.size(), 128u);
  EXPECT_EQ(Ieee754DoubleFromLittleEndian(Slice(data, 112, 120)), 1.0);
  EXPECT_EQ(Ieee754DoubleFromLittleEndian(Slice(data, 120, 128)), 2.0);
  EXPECT_EQ(BaseTwoFiftySix(Slice(data, 100, 104)), 1u);
  EXPECT_EQ(BaseTwoFiftySix(Slice(data, 104, 108)), 10u);
  EXPECT_EQ(BaseTwoFiftySix(Reversed(Slice(data, 108, 112))), 1u);
  // Bounding box collapses onto the single point.
  EXPECT_EQ(Ieee754DoubleFromLittleEndian(Slice(data, 36, 44)), 1.0);
  EXPECT_EQ(Ieee754DoubleFromLittleEndian(Slice(data, 52, 60)), 1.0);
  EXPECT_EQ(Ieee754DoubleFromLittleEndian(Slice(data, 60, 68)), 2.0);
}

TEST(SamplePointsTest, ConsecutiveNumbersAndDeterminism) {
  const std::vector<PointRecordSpec> points = SamplePoints(50, 9);
  for (std::size_t i = 0; i < points.size(); ++i) {
    EXPECT_EQ(points[i].record_number, static_cast<std::int64_t>(i + 1));
  }
  const std::vector<PointRecordSpec> again = SamplePoints(50, 9);
  for (std::size_t i = 0; i < points.size(); ++i) {
    EXPECT_EQ(points[i].x, again[i].x);
    EXPECT_EQ(points[i].y, again[i].y);
  }
}

TEST(BuildSwmmSubcatchmentsTest, LineCounts) {
  absl::StatusOr<std::string> two = BuildSwmmSubcatchments(SampleSwmmRows(2));
  ASSERT_TRUE(two.ok());
  EXPECT_EQ(Lines(*two).size(), 5u);
  absl::StatusOr<std::string> none = BuildSwmmSubcatchments({});
  ASSERT_TRUE(none.ok());
  EXPECT_EQ(Lines(*none).size(), 3u);
}

TEST(BuildSwmmSubcatchmentsTest, FixedLines) {
  absl::StatusOr<std::string> text = BuildSwmmSubcatchments({});
  ASSERT_TRUE(text.ok());
  const std::vector<std::string> lines = Lines(*text);
  EXPECT_EQ(lines[0], "[SUBCATCHMENTS]");
  EXPECT_EQ(lines[1].substr(0, 6), ";;Name");
  EXPECT_EQ(lines[1].substr(10, 5), "Rgage");
  EXPECT_EQ(lines[1].substr(87), "Spack");
  EXPECT_EQ(lines[2], ";;" + std::string(90, '='));
}

TEST(BuildSwmmSubcatchmentsTest, AreaColumnLayout) {
  SwmmRow row = SampleSwmmRows(1)[0];
  row[3] = "5.7";
  absl::StatusOr<std::string> text = BuildSwmmSubcatchments({row});
  ASSERT_TRUE(text.ok());
  const std::string line = Lines(*text)[3];
  EXPECT_EQ(line.substr(34, 9), "5.7      ");
  for (int c = 0; c < kSwmmColumnCount; ++c) {
    const auto start = static_cast<std::size_t>(kSwmmColumnStarts[c]);
    const std::string& cell = row[static_cast<std::size_t>(c)];
    if (!cell.empty()) {
      EXPECT_EQ(line.substr(start, cell.size()), cell);
    }
    if (start > 0) {
      EXPECT_EQ(line[start - 1], ' ');
    }
  }
}

TEST(BuildSwmmSubcatchmentsTest, RejectsBadCells) {
  SwmmRow wide = SampleSwmmRows(1)[0];
  wide[0] = "TooLongName";
  EXPECT_FALSE(BuildSwmmSubcatchments({wide}).ok());
  SwmmRow last = SampleSwmmRows(1)[0];
  last[8] = "SPACK1";
  EXPECT_FALSE(BuildSwmmSubcatchments({last}).ok());
  SwmmRow newline = SampleSwmmRows(1)[0];
  newline[1] = "a\nb";
  EXPECT_FALSE(BuildSwmmSubcatchments({newline}).ok());
}

}  // namespace
}  // namespace dfml
