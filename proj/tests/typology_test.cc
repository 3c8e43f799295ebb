// Copyright 2026 The OMT Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "omt/typology.h"

#include <set>
#include <string>

#include "gtest/gtest.h"

namespace omt {
namespace {

TEST(TypologyTest, ThirtyDistinctTags) {
  ASSERT_EQ(AllTags().size(), static_cast<size_t>(kNumTagKinds));
  std::set<int> nodes;
  std::set<std::string> names;
  for (const TypologyTag& t : AllTags()) {
    nodes.insert(t.omt_node_id);
    names.insert(std::string(t.name));
    EXPECT_EQ(Tag(t.kind).name, t.name);
  }
  EXPECT_EQ(nodes.size(), 30u);
  EXPECT_EQ(*nodes.begin(), 1);
  EXPECT_EQ(*nodes.rbegin(), 30);
  EXPECT_EQ(names.size(), 30u);
}

TEST(TypologyTest, Lookups) {
  EXPECT_EQ(TagByName("SetPacking")->omt_node_id, 11);
  EXPECT_EQ(TagByName("InventoryBalance")->omt_node_id, 14);
  EXPECT_EQ(TagByNode(24)->kind, TagKind::kIfAllThen);
  EXPECT_EQ(TagByNode(3)->kind, TagKind::kConditionalUpperBound);
  EXPECT_FALSE(TagByName("setpacking").has_value());
  EXPECT_FALSE(TagByNode(0).has_value());
  EXPECT_FALSE(TagByNode(31).has_value());
}

TEST(TypologyTest, Specificity) {
  for (const TypologyTag& t : AllTags()) {
    const bool root = t.kind == TagKind::kGeneralLE ||
                      t.kind == TagKind::kGeneralEQ ||
                      t.kind == TagKind::kGeneralGE;
    if (root) {
      EXPECT_EQ(t.specificity, kRootSpecificity) << t.name;
    } else {
      EXPECT_GT(t.specificity, kRootSpecificity) << t.name;
    }
    EXPECT_EQ(IsPatternTag(t.kind), t.specificity == kPatternSpecificity)
        << t.name;
  }
  EXPECT_GT(Tag(TagKind::kSetPacking).specificity,
            Tag(TagKind::kZeroOneKnapsack).specificity);
  EXPECT_GT(Tag(TagKind::kConditionalUpperBound).specificity,
            Tag(TagKind::kVariableUpperBound).specificity);
}

TEST(TypologyTest, ExplainIsStableAndNonEmpty) {
  std::set<std::string> texts;
  for (const TypologyTag& t : AllTags()) {
    const std::string_view a = Explain(t.kind);
    EXPECT_FALSE(a.empty()) << t.name;
    EXPECT_EQ(a, Explain(t.kind));
    texts.insert(std::string(a));
  }
  EXPECT_EQ(texts.size(), 30u);
}

}  // namespace
}  // namespace omt
