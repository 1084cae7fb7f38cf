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

#ifndef NCDAG_FAMILY_H_
#define NCDAG_FAMILY_H_

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ncdag/digraph.h"

namespace ncdag {

// Chart items share the vocabulary of graph classes: an item of kind K over
// span (i, j) stands for graphs of class K on vertices i..j.
using ItemKind = GraphClass;

bool is_covered_kind(ItemKind k);

// Smallest and largest admissible j - i for an item of this kind. The upper
// bound is only finite for Elementary.
int min_span_width(ItemKind k);
bool width_admits(ItemKind k, int width);

enum class Direction { kMinToMax, kMaxToMin };

std::string_view to_string(Direction d);

// Glue two graphs at a shared vertex: left on i..j, right on j..k, result on
// i..k. Adds no arcs.
struct ConcatRule {
  std::string_view id;
  ItemKind left;
  ItemKind right;
  ItemKind out;
};

// Add an arc between the extremal vertices of a graph on i..j.
struct CoverRule {
  std::string_view id;
  ItemKind in;
  Direction direction;
  ItemKind out;
};

enum class FamilyName {
  kAcyclic,
  kConnectedAcyclic,
  kDigraph,
  kUndirected,
  kConnectedUndirected,
};

inline constexpr std::array<FamilyName, 5> kAllFamilies = {
    FamilyName::kAcyclic, FamilyName::kConnectedAcyclic, FamilyName::kDigraph,
    FamilyName::kUndirected, FamilyName::kConnectedUndirected};

std::string_view to_string(FamilyName name);
std::ostream& operator<<(std::ostream& os, FamilyName name);

// Accepts the command-line spelling ("acyclic", "connected-acyclic", ...).
std::optional<FamilyName> parse_family_name(std::string_view text);

bool is_undirected(FamilyName name);
bool requires_connectivity(FamilyName name);
bool permits_cycles(FamilyName name);

// A deduction system as data. Rules are kept sorted by id, which is the
// tie-break order used by the Viterbi backtrace.
struct Family {
  FamilyName name;
  std::vector<ItemKind> kinds;
  std::vector<ConcatRule> concat_rules;
  std::vector<CoverRule> cover_rules;
  std::vector<ItemKind> goal_kinds;
  // Goal kinds that no derivation ever reaches (e.g. every kind needing a
  // max-to-min arc in the undirected families).
  std::vector<ItemKind> unreachable_goal_kinds;

  bool uses_kind(ItemKind k) const;
  bool is_goal(ItemKind k) const;
};

// The shipped rule table for a family; tables are built once and shared.
const Family& family(FamilyName name);

// Throws std::invalid_argument on an unknown name.
const Family& family(std::string_view name);

// The item kind under which `g` is derived in family `name`. For the
// acyclic families this is classify(g); the unrestricted family folds both
// directed-connected classes into MixConnected and derives graphs with both
// covering arcs as MinMaxCovered.
ItemKind expected_kind(FamilyName name, const Digraph& g);

// Structural diagnostics plus a derivability check of every goal kind for
// n = 2..6. An empty result means the table is valid.
std::vector<std::string> validate_family(const Family& f);

}  // namespace ncdag

#endif  // NCDAG_FAMILY_H_
