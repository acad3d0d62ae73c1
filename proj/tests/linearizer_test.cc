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

#include "dfml/linearizer.h"

#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "test_util.h"

namespace dfml {
namespace {

using ::dfml::testing::FormatPlanRow;
using ::dfml::testing::LoadCorpusDocument;
using ::dfml::testing::LoadCorpusSequence;
using ::dfml::testing::ParseOrDie;
using ::dfml::testing::PlanRow;
using ::dfml::testing::PlanRows;
using ::dfml::testing::TransliterateLinearization;

LinearSequence LinearizeOrDie(const std::string& xml) {
  absl::StatusOr<LinearSequence> sequence = Linearize(ParseOrDie(xml));
  EXPECT_TRUE(sequence.ok()) << sequence.status();
  return sequence.ok() ? *sequence : LinearSequence{};
}

std::vector<std::string> SummaryLines(const LinearSequence& sequence) {
  std::vector<std::string> lines =
      absl::StrSplit(SequenceSummary(sequence), '\n', absl::SkipEmpty());
  return lines;
}

TEST(LinearizeTest, ShapefileMatchesPseudocodeOracle) {
  const std::vector<PlanRow> expected =
      TransliterateLinearization(LoadCorpusDocument(testing::kShapefileDoc));
  const std::vector<PlanRow> actual =
      PlanRows(LoadCorpusSequence(testing::kShapefileDoc));
  ASSERT_EQ(expected.size(), 18u);
  ASSERT_EQ(actual.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(actual[i], expected[i])
        << "item " << i << "\n  actual   " << FormatPlanRow(actual[i])
        << "\n  expected " << FormatPlanRow(expected[i]);
  }
}

TEST(LinearizeTest, UnusedGroupItem) {
  const LinearSequence sequence = LoadCorpusSequence(testing::kShapefileDoc);
  const LinearItem* item = sequence.Find("group/Unused");
  ASSERT_NE(item, nullptr);
  EXPECT_EQ(item->start.column, 4);
  EXPECT_EQ(item->length, 4);
  EXPECT_EQ(item->interval, 4);
  EXPECT_EQ(item->repetition, 5);
  EXPECT_EQ(item->expected_value, "0");
}

TEST(LinearizeTest, PointGroupItems) {
  const LinearSequence sequence = LoadCorpusSequence(testing::kShapefileDoc);
  // Hand-derived: record base 100, offsets 0/4/8/12/20, stride 4+4+4+8+8.
  const std::vector<PlanRow> expected = {
      {"Point/Record Number", 100, 4, 28, kOpen},
      {"Point/Content Length", 104, 4, 28, kOpen},
      {"Point/Geometry Type", 108, 4, 28, kOpen},
      {"Point/X", 112, 8, 28, kOpen},
      {"Point/Y", 120, 8, 28, kOpen},
  };
  for (const PlanRow& row : expected) {
    const LinearItem* item = sequence.Find(row.path);
    ASSERT_NE(item, nullptr) << row.path;
    EXPECT_EQ((PlanRow{item->path, item->start.column, item->length,
                       item->interval, item->repetition}),
              row);
  }
  EXPECT_EQ(sequence.Find("Point/X")->byte_order, ByteOrder::kLittleEndian);
  EXPECT_EQ(sequence.Find("Point/Record Number")->byte_order,
            ByteOrder::kBigEndian);
}

TEST(LinearizeTest, SingleTopLevelInteger) {
  const LinearSequence sequence = LinearizeOrDie(
      R"(<dataformat name="x" mode="byte"><integer location="0,4"/></dataformat>)");
  ASSERT_EQ(sequence.items.size(), 1u);
  const LinearItem& item = sequence.items[0];
  EXPECT_EQ(item.start.column, 0);
  EXPECT_EQ(item.length, 4);
  EXPECT_EQ(item.interval, 0);
  EXPECT_EQ(item.repetition, 1);
  EXPECT_TRUE(item.loops.empty());
}

TEST(LinearizeTest, ValueAttributeRoles) {
  const LinearSequence sequence = LoadCorpusSequence(testing::kShapefileDoc);
  EXPECT_EQ(sequence.Find("File Code")->expected_value, "9994");
  EXPECT_EQ(sequence.Find("Version")->expected_value, "1000");
  EXPECT_FALSE(sequence.Find("File Length")->expected_value.has_value());
  EXPECT_FALSE(sequence.Find("Xmin")->expected_value.has_value());
}

TEST(LinearizeTest, ExplicitNumberWinsOverDerivedRepetition) {
  const LinearSequence sequence = LinearizeOrDie(
      R"(<dataformat name="x" mode="byte"><group location="0,-1" number="3"><short location="0,2"/></group></dataformat>)");
  ASSERT_EQ(sequence.items.size(), 1u);
  EXPECT_EQ(sequence.items[0].repetition, 3);
  EXPECT_EQ(sequence.items[0].interval, 2);
}

TEST(LinearizeTest, NestedGroupsCompoundAddresses) {
  const LinearSequence sequence = LinearizeOrDie(R"(
    <dataformat name="n" mode="byte">
      <short location="0,2" description="Head"/>
      <group location="10,58" description="Outer">
        <group location="0,16" description="Inner">
          <integer location="0,4" description="A"/>
          <integer location="4,8" description="B"/>
        </group>
        <double location="16,24" description="D"/>
      </group>
    </dataformat>)");
  ASSERT_EQ(sequence.items.size(), 4u);
  const LinearItem* a = sequence.Find("Outer/Inner/A");
  const LinearItem* b = sequence.Find("Outer/Inner/B");
  const LinearItem* d = sequence.Find("Outer/D");
  ASSERT_NE(a, nullptr);
  ASSERT_NE(b, nullptr);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(a->start.column, 10);
  EXPECT_EQ(b->start.column, 14);
  EXPECT_EQ(d->start.column, 26);
  ASSERT_EQ(a->loops.size(), 2u);
  EXPECT_EQ(a->loops[0].interval, 24);
  EXPECT_EQ(a->loops[0].repetition, 2);
  EXPECT_EQ(a->loops[0].origin.column, 10);
  EXPECT_EQ(a->loops[1].interval, 8);
  EXPECT_EQ(a->loops[1].repetition, 2);
  EXPECT_EQ(a->interval, 8);
  EXPECT_EQ(a->repetition, 2);
  ASSERT_EQ(d->loops.size(), 1u);
  EXPECT_EQ(d->interval, 24);
  EXPECT_EQ(d->repetition, 2);
}

TEST(LinearizeTest, ItemsAscendByStart) {
  for (const char* name : {testing::kShapefileDoc, testing::kSwmmDoc}) {
    const LinearSequence sequence = LoadCorpusSequence(name);
    for (std::size_t i = 1; i < sequence.items.size(); ++i) {
      EXPECT_FALSE(PositionLess(sequence.items[i].start,
                                sequence.items[i - 1].start))
          << name << " item " << i;
    }
  }
}

TEST(LinearizeTest, Deterministic) {
  for (const char* name : {testing::kShapefileDoc, testing::kSwmmDoc}) {
    EXPECT_EQ(LoadCorpusSequence(name), LoadCorpusSequence(name)) << name;
    EXPECT_EQ(SequenceSummary(LoadCorpusSequence(name)),
              SequenceSummary(LoadCorpusSequence(name)));
  }
}

TEST(LinearizeTest, RejectsInvalidDocuments) {
  absl::StatusOr<LinearSequence> sequence = Linearize(ParseOrDie(
      R"(<dataformat name="x" mode="byte"><group location="0,10"><integer location="0,4"/></group></dataformat>)"));
  EXPECT_FALSE(sequence.ok());
}

TEST(SequenceSummaryTest, ShapefileHasEighteenRows) {
  const std::vector<std::string> lines =
      SummaryLines(LoadCorpusSequence(testing::kShapefileDoc));
  ASSERT_EQ(lines.size(), 19u);
  EXPECT_EQ(lines[0].rfind("index\tpath", 0), 0u) << lines[0];
}

TEST(SequenceSummaryTest, EmptyDocumentHasOnlyHeader) {
  const std::vector<std::string> lines = SummaryLines(
      LinearizeOrDie(R"(<dataformat name="x" mode="byte"></dataformat>)"));
  EXPECT_EQ(lines.size(), 1u);
}

TEST(SequenceSummaryTest, SwmmRowsFollowListingOrder) {
  const LinearSequence sequence = LoadCorpusSequence(testing::kSwmmDoc);
  const std::vector<std::string> lines = SummaryLines(sequence);
  ASSERT_EQ(lines.size(), 35u);
  // Leaf count of the listing: 1 + (20 header + 3 separator + 10 content).
  EXPECT_EQ(sequence.items.size(), 34u);
  EXPECT_EQ(sequence.items.front().path, "section name");
  EXPECT_EQ(sequence.items[1].path, "section body/table header/annotator");
  EXPECT_EQ(sequence.items[21].path, "section body/table separator/annotator");
  EXPECT_EQ(sequence.items[23].path, "section body/table separator/cr");
  EXPECT_EQ(sequence.items[24].path, "section body/table content/Name");
  EXPECT_EQ(sequence.items.back().path, "section body/table content/cr");
}

TEST(SequenceSummaryTest, SwmmContentRowsRepeatByLine) {
  const LinearSequence sequence = LoadCorpusSequence(testing::kSwmmDoc);
  const LinearItem* area = sequence.Find("section body/table content/Area");
  ASSERT_NE(area, nullptr);
  EXPECT_EQ(area->start, (Position{4, 34}));
  EXPECT_EQ(area->length, 9);
  EXPECT_EQ(area->interval, 1);
  EXPECT_EQ(area->repetition, kOpen);
  EXPECT_EQ(area->loops.back().axis, Axis::kLine);
  const LinearItem* spack = sequence.Find("section body/table content/Spack");
  ASSERT_NE(spack, nullptr);
  EXPECT_EQ(spack->length, kOpen);
}

}  // namespace
}  // namespace dfml
