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

#include <algorithm>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dfml/decode.h"

namespace dfml {
namespace {

constexpr ByteOrder kBig = ByteOrder::kBigEndian;
constexpr ByteOrder kLittle = ByteOrder::kLittleEndian;

void Append(Bytes& out, const Bytes& part) {
  out.insert(out.end(), part.begin(), part.end());
}

constexpr std::array<const char*, kSwmmColumnCount> kHeaderNames = {
    "Name", "Rgage", "OutID", "Area", "%Imperv",
    "Width", "Slope", "Clength", "Spack"};
// Name follows the ";;" annotator; the rest line up with the content.
constexpr std::array<int, kSwmmColumnCount> kHeaderStarts = {
    2, 10, 23, 34, 43, 55, 65, 75, 87};
constexpr int kHeaderWidth = 92;

void PlaceAt(std::string& line, int column, const std::string& text) {
  if (line.size() < static_cast<std::size_t>(column)) line.resize(column, ' ');
  line += text;
}

}  // namespace

Bytes BuildPointShapefile(const std::vector<PointRecordSpec>& points) {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
  if (!points.empty()) {
    xmin = xmax = points.front().x;
    ymin = ymax = points.front().y;
    for (const PointRecordSpec& point : points) {
      xmin = std::min(xmin, point.x);
      xmax = std::max(xmax, point.x);
      ymin = std::min(ymin, point.y);
      ymax = std::max(ymax, point.y);
    }
  }
  const auto total = kShapefileHeaderSize +
                     kPointRecordSize * static_cast<std::int64_t>(points.size());
  Bytes out;
  out.reserve(static_cast<std::size_t>(total));
  Append(out, EncodeInteger(9994, 4, kBig));
  for (int i = 0; i < 5; ++i) Append(out, EncodeInteger(0, 4, kBig));
  Append(out, EncodeInteger(total / 2, 4, kBig));
  Append(out, EncodeInteger(1000, 4, kLittle));
  Append(out, EncodeInteger(1, 4, kLittle));
  for (double bound : {xmin, ymin, xmax, ymax, 0.0, 0.0, 0.0, 0.0}) {
    Append(out, EncodeFloat64(bound, kLittle));
  }
  for (const PointRecordSpec& point : points) {
    Append(out, EncodeInteger(point.record_number, 4, kBig));
    Append(out, EncodeInteger((kPointRecordSize - 8) / 2, 4, kBig));
    Append(out, EncodeInteger(1, 4, kLittle));
    Append(out, EncodeFloat64(point.x, kLittle));
    Append(out, EncodeFloat64(point.y, kLittle));
  }
  return out;
}

std::vector<PointRecordSpec> SamplePoints(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lon(118.3, 119.2);
  std::uniform_real_distribution<double> lat(31.2, 32.6);
  std::vector<PointRecordSpec> points;
  for (int i = 0; i < count; ++i) {
    const double x = lon(rng);
    const double y = lat(rng);
    points.push_back(PointRecordSpec{i + 1, x, y});
  }
  return points;
}

absl::StatusOr<std::string> BuildSwmmSubcatchments(
    const std::vector<SwmmRow>& rows) {
  std::string header = ";;";
  for (int i = 0; i < kSwmmColumnCount; ++i) {
    PlaceAt(header, kHeaderStarts[i], kHeaderNames[i]);
  }
  header.resize(kHeaderWidth, ' ');
  std::string out = "[SUBCATCHMENTS]\n";
  absl::StrAppend(&out, header, "\n;;", std::string(kHeaderWidth - 2, '='),
                  "\n");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (int i = 0; i < kSwmmColumnCount; ++i) {
      const std::string& cell = rows[r][i];
      const int width = i + 1 < kSwmmColumnCount
                            ? kSwmmColumnStarts[i + 1] - kSwmmColumnStarts[i]
                            : kSwmmLastColumnWidth;
      if (static_cast<int>(cell.size()) > width ||
          cell.find_first_of("\r\n") != std::string::npos ||
          (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t'))) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", r + 1, " column ", kHeaderNames[i], ": ",
                         QuoteText(cell), " does not fit ", width,
                         " characters"));
      }
      PlaceAt(line, kSwmmColumnStarts[i], cell);
    }
    absl::StrAppend(&out, line, "\n");
  }
  return out;
}

std::vector<SwmmRow> SampleSwmmRows(int count) {
  std::vector<SwmmRow> rows;
  for (int i = 1; i <= count; ++i) {
    rows.push_back(SwmmRow{
        absl::StrCat("S", i),
        absl::StrCat("RG", 1 + i % 3),
        absl::StrCat("J", 100 + i),
        absl::StrCat(i % 40, ".", i % 10),
        absl::StrCat(25 + i % 50),
        absl::StrCat(500 + 7 * i),
        absl::StrCat("0.", i % 9 + 1),
        absl::StrCat(i % 4 == 0 ? 0 : 100 * i),
        i % 2 == 0 ? absl::StrCat("SP", i % 100) : std::string()});
  }
  return rows;
}

}  // namespace dfml
