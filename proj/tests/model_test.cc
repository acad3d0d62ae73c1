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

#include "dfml/model.h"

#include <regex>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace dfml {
namespace {

using ::dfml::testing::CorpusPath;
using ::dfml::testing::LoadCorpusDocument;
using ::dfml::testing::ParseOrDie;
using ::dfml::testing::ReadFileOrDie;

void CollectLeafTags(const std::vector<FormatNode>& nodes,
                     std::vector<std::string>* out) {
  for (const FormatNode& node : nodes) {
    if (node.kind == NodeKind::kGroup) {
      CollectLeafTags(node.children, out);
    } else {
      out->emplace_back(NodeTag(node));
    }
  }
}

TEST(ParseDocumentTest, ShapefileListing) {
  const DfmlDocument doc = LoadCorpusDocument(testing::kShapefileDoc);
  EXPECT_EQ(doc.name, "ESRI Shapefile Format");
  EXPECT_EQ(doc.name_space, "com.vge.esri");
  EXPECT_EQ(doc.mode, Mode::kByte);
  // Twelve scalar header fields plus the unused-integer and point groups.
  EXPECT_EQ(doc.children.size(), 14u);
  EXPECT_TRUE(doc.warnings.empty());
}

TEST(ParseDocumentTest, SwmmListing) {
  const DfmlDocument doc = LoadCorpusDocument(testing::kSwmmDoc);
  EXPECT_EQ(doc.name, "subcatchmentSection");
  EXPECT_EQ(doc.mode, Mode::kChar);
  ASSERT_EQ(doc.children.size(), 2u);
  const FormatNode& body = doc.children[1];
  EXPECT_EQ(body.kind, NodeKind::kGroup);
  ASSERT_EQ(body.children.size(), 3u);
  EXPECT_EQ(body.children[2].number, kOpen);
}

TEST(ParseDocumentTest, EmptyDocument) {
  const DfmlDocument doc =
      ParseOrDie(R"(<dataformat name="x" mode="byte"></dataformat>)");
  EXPECT_EQ(doc.name, "x");
  EXPECT_TRUE(doc.children.empty());
}

TEST(ParseDocumentTest, TagsMapToKinds) {
  const DfmlDocument doc = ParseOrDie(R"(<dataformat name="t" mode="byte">
    <real location="0,8"/><byte location="8,9"/><tab location="9,10"/>
    <group location="10,14"><short location="0,2"/><short location="2,4"/>
    </group></dataformat>)");
  ASSERT_EQ(doc.children.size(), 4u);
  EXPECT_EQ(doc.children[0].dtype, PrimitiveType::kDouble);
  EXPECT_EQ(doc.children[1].dtype, PrimitiveType::kByte);
  EXPECT_EQ(doc.children[2].kind, NodeKind::kSeparator);
  EXPECT_EQ(doc.children[2].separator, SeparatorType::kTab);
  EXPECT_EQ(doc.children[3].kind, NodeKind::kGroup);
  EXPECT_EQ(doc.children[3].children.size(), 2u);
}

TEST(ParseDocumentTest, NumberUnknownIsOpen) {
  const DfmlDocument doc = ParseOrDie(R"(<dataformat name="t" mode="byte">
    <group location="0,-1" number="unknown"><byte location="0,1"/></group>
    </dataformat>)");
  EXPECT_EQ(doc.children[0].number, kOpen);
}

TEST(ParseDocumentTest, Errors) {
  struct Case {
    const char* xml;
    absl::StatusCode code;
  };
  const std::vector<Case> cases = {
      {"<dataformat name='x' mode='byte'><integer location='0,4'>"
       "</double></dataformat>",
       absl::StatusCode::kInvalidArgument},
      {"<dataformat name='x' mode='byte'><widget location='0,4'/>"
       "</dataformat>",
       absl::StatusCode::kInvalidArgument},
      {"<dataformat name='x'></dataformat>",
       absl::StatusCode::kInvalidArgument},
      {"<dataformat name='x' mode='octal'></dataformat>",
       absl::StatusCode::kInvalidArgument},
      {"<dataformat name='x' mode='byte'><import href='a.dfml'/>"
       "</dataformat>",
       absl::StatusCode::kUnimplemented},
      {"<dataformat name='x' mode='byte'><integer name='T' location='0,4'/>"
       "</dataformat>",
       absl::StatusCode::kUnimplemented},
      {"<notdfml/>", absl::StatusCode::kInvalidArgument},
      {"", absl::StatusCode::kInvalidArgument},
  };
  for (const Case& c : cases) {
    absl::StatusOr<DfmlDocument> doc = ParseDocument(c.xml);
    EXPECT_EQ(doc.status().code(), c.code) << c.xml;
  }
}

TEST(ParseDocumentTest, FormatAttributeWarnsAndIsKept) {
  const DfmlDocument doc = ParseOrDie(
      R"(<dataformat name="x" mode="byte"><double location="0,8" format="%.3f"/></dataformat>)");
  ASSERT_EQ(doc.warnings.size(), 1u);
  EXPECT_EQ(doc.warnings[0].severity, Severity::kWarning);
  ASSERT_EQ(doc.children[0].extra_attributes.size(), 1u);
  EXPECT_EQ(doc.children[0].extra_attributes[0].first, "format");
}

TEST(ParseDocumentTest, PublishedShapefileListingHasTagMismatch) {
  absl::StatusOr<DfmlDocument> doc =
      ParseDocument(ReadFileOrDie(CorpusPath("original/shapefile_point.dfml")));
  ASSERT_FALSE(doc.ok());
  EXPECT_NE(doc.status().message().find("mismatched tag"), std::string::npos)
      << doc.status();
}

TEST(ParseLocationTest, ByteOpenEnd) {
  absl::StatusOr<Location> location = ParseLocation("100, -1", Mode::kByte);
  ASSERT_TRUE(location.ok()) << location.status();
  EXPECT_EQ(location->start.column, 100);
  EXPECT_EQ(location->end.column, kOpen);
}

TEST(ParseLocationTest, CharEndOfLine) {
  absl::StatusOr<Location> location = ParseLocation("2 0,2 -1", Mode::kChar);
  ASSERT_TRUE(location.ok()) << location.status();
  EXPECT_EQ(location->start, (Position{2, 0}));
  EXPECT_EQ(location->end, (Position{2, kOpen}));
}

TEST(ParseLocationTest, WhitespaceTolerated) {
  absl::StatusOr<Location> location =
      ParseLocation("  3 4 ,  3 9 ", Mode::kChar);
  ASSERT_TRUE(location.ok()) << location.status();
  EXPECT_EQ(location->start, (Position{3, 4}));
  EXPECT_EQ(location->end, (Position{3, 9}));
}

TEST(ParseLocationTest, Rejections) {
  const std::vector<std::pair<const char*, Mode>> bad = {
      {"0,0", Mode::kByte},      {"8,4", Mode::kByte},
      {"0", Mode::kByte},        {"0,4,8", Mode::kByte},
      {"-2,4", Mode::kByte},     {"-1,4", Mode::kByte},
      {"a,4", Mode::kByte},      {"0 0,0 4", Mode::kByte},
      {"0,4", Mode::kChar},      {"2 5,2 5", Mode::kChar},
      {"3 0,2 9", Mode::kChar},  {"1 x,1 2", Mode::kChar},
  };
  for (const auto& [text, mode] : bad) {
    EXPECT_FALSE(ParseLocation(text, mode).ok()) << text;
  }
}

TEST(SerializeDocumentTest, RoundTripsCorpus) {
  for (const char* name : {testing::kShapefileDoc, testing::kSwmmDoc}) {
    const DfmlDocument doc = LoadCorpusDocument(name);
    const std::string text = SerializeDocument(doc);
    absl::StatusOr<DfmlDocument> again = ParseDocument(text);
    ASSERT_TRUE(again.ok()) << again.status() << "\n" << text;
    EXPECT_EQ(*again, doc) << name;
    EXPECT_EQ(SerializeDocument(*again), text) << name;
  }
}

TEST(SerializeDocumentTest, EscapesAttributeText) {
  const DfmlDocument doc = ParseOrDie(
      R"(<dataformat name="a&amp;b" mode="byte" description="&lt;&quot;&gt;"><string location="0,3" value="x&apos;y"/></dataformat>)");
  absl::StatusOr<DfmlDocument> again = ParseDocument(SerializeDocument(doc));
  ASSERT_TRUE(again.ok()) << again.status();
  EXPECT_EQ(again->name, "a&b");
  EXPECT_EQ(again->description, "<\">");
  EXPECT_EQ(again->children[0].value, "x'y");
}

TEST(ParseDocumentTest, LeafOrderMatchesTextOrder) {
  const std::string text = ReadFileOrDie(CorpusPath(testing::kSwmmDoc));
  std::vector<std::string> textual;
  const std::regex tag("<([a-z]+)[ >/]");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), tag);
       it != std::sregex_iterator(); ++it) {
    const std::string name = (*it)[1];
    if (name == "dataformat" || name == "group") continue;
    textual.push_back(name == "real" ? "double" : name);
  }
  std::vector<std::string> leaves;
  CollectLeafTags(LoadCorpusDocument(testing::kSwmmDoc).children, &leaves);
  EXPECT_EQ(leaves, textual);
}

TEST(FormatIssueTest, Layout) {
  EXPECT_EQ(FormatIssue({Severity::kError, "Point/X", "bad"}),
            "error: Point/X: bad");
  EXPECT_EQ(FormatIssue({Severity::kWarning, "a", "b"}), "warning: a: b");
}

TEST(SiblingNamesTest, DuplicatesGetSuffixes) {
  const DfmlDocument doc = ParseOrDie(R"(<dataformat name="x" mode="char">
    <string location="1 0,1 2"/><space location="1 2,1 3"/>
    <string location="1 3,1 5"/><space location="1 5,1 6"/>
    <string location="1 6,1 8" description="string_2"/></dataformat>)");
  EXPECT_EQ(SiblingNames(doc.children),
            (std::vector<std::string>{"string", "space", "string_2", "space_2",
                                      "string_2_2"}));
}

}  // namespace
}  // namespace dfml
