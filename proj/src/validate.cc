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

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncdag/engine.h"
#include "ncdag/family.h"

namespace ncdag {
namespace {

constexpr int kDerivabilityHorizon = 6;

std::string describe(std::string_view rule_id) {
  return "rule " + std::string(rule_id) + ": ";
}

}  // namespace

std::vector<std::string> validate_family(const Family& f) {
  std::vector<std::string> problems;
  auto require_kind = [&](ItemKind k, const std::string& where) {
    if (!f.uses_kind(k)) {
      std::ostringstream os;
      os << where << "kind " << k << " is not declared by the family";
      problems.push_back(os.str());
    }
  };

  std::set<std::string_view> ids;
  auto require_unique = [&](std::string_view id) {
    if (!ids.insert(id).second) {
      problems.push_back(describe(id) + "duplicate rule id");
    }
  };

  for (const ConcatRule& r : f.concat_rules) {
    require_unique(r.id);
    require_kind(r.left, describe(r.id));
    require_kind(r.right, describe(r.id));
    require_kind(r.out, describe(r.id));
    if (is_covered_kind(r.out)) {
      problems.push_back(describe(r.id) +
                         "concatenation cannot produce a covered kind");
    }
  }
  for (const CoverRule& r : f.cover_rules) {
    require_unique(r.id);
    require_kind(r.in, describe(r.id));
    require_kind(r.out, describe(r.id));
    const ItemKind expected = r.direction == Direction::kMinToMax
                                  ? ItemKind::kMinMaxCovered
                                  : ItemKind::kMaxMinCovered;
    if (r.out != expected) {
      std::ostringstream os;
      os << describe(r.id) << "a " << to_string(r.direction)
         << " cover must produce " << expected;
      problems.push_back(os.str());
    }
  }
  for (ItemKind k : f.goal_kinds) require_kind(k, "goal: ");
  if (!problems.empty()) return problems;

  std::vector<bool> reached(kNumGraphClasses, false);
  for (int n = 2; n <= kDerivabilityHorizon; ++n) {
    auto chart = fill_chart<BooleanSemiring>(f, n);
    for (ItemKind k : f.goal_kinds) {
      if (chart.at(1, n, k)) reached[index_of(k)] = true;
    }
  }
  for (ItemKind k : f.goal_kinds) {
    const bool sanctioned =
        std::find(f.unreachable_goal_kinds.begin(),
                  f.unreachable_goal_kinds.end(),
                  k) != f.unreachable_goal_kinds.end();
    if (!reached[index_of(k)] && !sanctioned) {
      std::ostringstream os;
      os << "goal kind " << k << " is not derivable for n <= "
         << kDerivabilityHorizon;
      problems.push_back(os.str());
    }
  }
  return problems;
}

}  // namespace ncdag
