// Copyright 2026 The ncdag Authors
//
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

#include "ncdag/family.h"

#include <algorithm>
#include <stdexcept>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ncdag/engine.h"

namespace ncdag {
namespace {

using ::testing::IsEmpty;
using ::testing::SizeIs;

const ConcatRule* find_concat(const Family& f, std::string_view id) {
  for (const ConcatRule& r : f.concat_rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

const CoverRule* find_cover(const Family& f, std::string_view id) {
  for (const CoverRule& r : f.cover_rules) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

TEST(FamilyTest, AcyclicRule03ConcatenatesOppositeCovers) {
  const ConcatRule* r = find_concat(family(FamilyName::kAcyclic), "03");
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->left, ItemKind::kMinMaxCovered);
  EXPECT_EQ(r->right, ItemKind::kMaxMinCovered);
  EXPECT_EQ(r->out, ItemKind::kMixConnected);
}

TEST(FamilyTest, AcyclicTableSize) {
  const Family& f = family(FamilyName::kAcyclic);
  // 01..20 plus the elementary-elementary concatenation 20e.
  EXPECT_THAT(f.concat_rules, SizeIs(21));
  // 21..26 plus the elementary covers 27e and 28e.
  EXPECT_THAT(f.cover_rules, SizeIs(8));
  EXPECT_THAT(f.goal_kinds, SizeIs(7));
}

TEST(FamilyTest, ConnectedAcyclicDropsRule20AndUnconnectedGoals) {
  const Family& f = family(FamilyName::kConnectedAcyclic);
  EXPECT_EQ(find_concat(f, "20"), nullptr);
  EXPECT_EQ(find_concat(f, "20e"), nullptr);
  EXPECT_FALSE(f.is_goal(ItemKind::kUnconnected));
  EXPECT_FALSE(f.is_goal(ItemKind::kElementary));
  EXPECT_TRUE(f.is_goal(ItemKind::kMixConnected));
}

TEST(FamilyTest, UndirectedHasNoMaxToMinCover) {
  const Family& f = family(FamilyName::kUndirected);
  for (const CoverRule& r : f.cover_rules) {
    EXPECT_EQ(r.direction, Direction::kMinToMax) << r.id;
  }
  EXPECT_THAT(family(FamilyName::kConnectedUndirected).goal_kinds, SizeIs(5));
}

TEST(FamilyTest, DigraphTable) {
  const Family& f = family(FamilyName::kDigraph);
  EXPECT_FALSE(f.uses_kind(ItemKind::kMinMaxConnected));
  EXPECT_FALSE(f.uses_kind(ItemKind::kMaxMinConnected));
  EXPECT_THAT(f.goal_kinds, SizeIs(5));
  for (auto id : {"09", "10", "11", "12", "15", "16"}) {
    EXPECT_EQ(find_concat(f, id), nullptr) << id;
  }
  EXPECT_EQ(find_cover(f, "21"), nullptr);
  EXPECT_EQ(find_cover(f, "24"), nullptr);
  EXPECT_EQ(find_concat(f, "01")->out, ItemKind::kMixConnected);
  EXPECT_EQ(find_concat(f, "02")->out, ItemKind::kMixConnected);
  const CoverRule* anti = find_cover(f, "29a");
  ASSERT_NE(anti, nullptr);
  EXPECT_EQ(anti->in, ItemKind::kMaxMinCovered);
  EXPECT_EQ(anti->direction, Direction::kMinToMax);
  EXPECT_EQ(anti->out, ItemKind::kMinMaxCovered);
}

TEST(FamilyTest, RulesSortedByIdAndUnique) {
  for (FamilyName name : kAllFamilies) {
    const Family& f = family(name);
    EXPECT_TRUE(std::is_sorted(
        f.concat_rules.begin(), f.concat_rules.end(),
        [](const auto& a, const auto& b) { return a.id < b.id; }))
        << name;
    EXPECT_TRUE(std::is_sorted(
        f.cover_rules.begin(), f.cover_rules.end(),
        [](const auto& a, const auto& b) { return a.id < b.id; }))
        << name;
  }
}

TEST(FamilyTest, LookupByName) {
  EXPECT_EQ(family("connected-undirected").name,
            FamilyName::kConnectedUndirected);
  EXPECT_THROW(family("forest"), std::invalid_argument);
  EXPECT_FALSE(parse_family_name("Acyclic").has_value());
  for (FamilyName name : kAllFamilies) {
    EXPECT_EQ(parse_family_name(to_string(name)), name);
  }
}

TEST(FamilyTest, SpanWidthConstraints) {
  EXPECT_TRUE(width_admits(ItemKind::kMinMaxCovered, 1));
  EXPECT_TRUE(width_admits(ItemKind::kElementary, 1));
  EXPECT_FALSE(width_admits(ItemKind::kElementary, 2));
  EXPECT_FALSE(width_admits(ItemKind::kMixConnected, 1));
  EXPECT_TRUE(width_admits(ItemKind::kUnconnected, 2));
}

TEST(ValidateFamilyTest, ShippedTablesAreValid) {
  for (FamilyName name : kAllFamilies) {
    EXPECT_THAT(validate_family(family(name)), IsEmpty()) << name;
  }
}

TEST(ValidateFamilyTest, ConcatenationIntoCoveredKindIsReported) {
  Family f = family(FamilyName::kAcyclic);
  f.concat_rules.push_back({"99", ItemKind::kMinMaxCovered,
                            ItemKind::kMinMaxCovered,
                            ItemKind::kMinMaxCovered});
  EXPECT_THAT(validate_family(f), SizeIs(1));
}

TEST(ValidateFamilyTest, ReportsDuplicateIdsAndUndeclaredKinds) {
  Family f = family(FamilyName::kDigraph);
  f.concat_rules.push_back(f.concat_rules.front());
  f.goal_kinds.push_back(ItemKind::kMinMaxConnected);
  EXPECT_THAT(validate_family(f), SizeIs(2));
}

TEST(ValidateFamilyTest, UnsanctionedUnreachableGoalIsReported) {
  Family f = family(FamilyName::kUndirected);
  EXPECT_THAT(validate_family(f), IsEmpty());
  f.unreachable_goal_kinds.clear();
  EXPECT_THAT(validate_family(f), SizeIs(3));
}

// Realizing any derivation rooted at kind K gives a graph the family files
// under K; checked for every rule instance reachable at n <= 5.
TEST(FamilyTest, DerivationsRealizeTheirRootKind) {
  for (FamilyName name : kAllFamilies) {
    const Family& f = family(name);
    for (int n = 2; n <= 5; ++n) {
      for_each_derivation(f, n, [&](const Derivation& d) {
        std::function<void(const DerivationNode&)> check =
            [&](const DerivationNode& node) {
              if (node.last - node.first >= 1) {
                ASSERT_EQ(expected_kind(name, realize(node)), node.kind)
                    << name << " rule " << node.rule_id << " over ("
                    << node.first << "," << node.last << ")";
              }
              if (node.left) check(*node.left);
              if (node.right) check(*node.right);
            };
        check(*d);
      });
    }
  }
}

}  // namespace
}  // namespace ncdag
