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
#include <string>

namespace ncdag {
namespace {

constexpr ItemKind kR = GraphClass::kMinMaxCovered;
constexpr ItemKind kL = GraphClass::kMaxMinCovered;
constexpr ItemKind kSR = GraphClass::kMinMaxConnected;
constexpr ItemKind kSL = GraphClass::kMaxMinConnected;
constexpr ItemKind kSM = GraphClass::kMixConnected;
constexpr ItemKind kH = GraphClass::kElementary;
constexpr ItemKind kU = GraphClass::kUnconnected;

constexpr Direction kRight = Direction::kMinToMax;
constexpr Direction kLeft = Direction::kMaxToMin;

const std::vector<ConcatRule>& acyclic_concat_rules() {
  static const std::vector<ConcatRule> rules = {
      // Two edge-covered graphs make a connected graph.
      {"01", kR, kR, kSR},
      {"02", kL, kL, kSL},
      {"03", kR, kL, kSM},
      {"04", kL, kR, kSM},
      // Edge-covered graph and the elementary graph.
      {"05", kR, kH, kU},
      {"06", kH, kR, kU},
      {"07", kL, kH, kU},
      {"08", kH, kL, kU},
      // Connected graph extended by an edge-covered graph.
      {"09", kSR, kR, kSR},
      {"10", kSR, kL, kSM},
      {"11", kSL, kR, kSM},
      {"12", kSL, kL, kSL},
      {"13", kSM, kR, kSM},
      {"14", kSM, kL, kSM},
      // Connected graph and the elementary graph.
      {"15", kSR, kH, kU},
      {"16", kSL, kH, kU},
      {"17", kSM, kH, kU},
      // Extending an unconnected graph.
      {"18", kU, kR, kU},
      {"19", kU, kL, kU},
      {"20", kU, kH, kU},
      // The edgeless graph on three vertices.
      {"20e", kH, kH, kU},
  };
  return rules;
}

const std::vector<CoverRule>& acyclic_cover_rules() {
  static const std::vector<CoverRule> rules = {
      {"21", kSR, kRight, kR},
      {"22", kSM, kRight, kR},
      {"23", kU, kRight, kR},
      {"24", kSL, kLeft, kL},
      {"25", kSM, kLeft, kL},
      {"26", kU, kLeft, kL},
      // Single-arc graphs on two vertices.
      {"27e", kH, kRight, kR},
      {"28e", kH, kLeft, kL},
  };
  return rules;
}

template <typename Rule>
std::vector<Rule> without(const std::vector<Rule>& rules,
                          std::initializer_list<std::string_view> ids) {
  std::vector<Rule> kept;
  for (const Rule& r : rules) {
    if (std::find(ids.begin(), ids.end(), r.id) == ids.end()) kept.push_back(r);
  }
  return kept;
}

const std::vector<ItemKind> kAllKinds(kAllGraphClasses.begin(),
                                      kAllGraphClasses.end());
const std::vector<ItemKind> kConnectedGoals = {kR, kL, kSR, kSL, kSM};

Family make_acyclic() {
  return {FamilyName::kAcyclic, kAllKinds, acyclic_concat_rules(),
          acyclic_cover_rules(), kAllKinds, {}};
}

Family make_connected_acyclic() {
  return {FamilyName::kConnectedAcyclic,
          kAllKinds,
          without(acyclic_concat_rules(), {"20", "20e"}),
          acyclic_cover_rules(),
          kConnectedGoals,
          {}};
}

Family make_digraph() {
  Family f;
  f.name = FamilyName::kDigraph;
  f.kinds = {kR, kL, kSM, kH, kU};
  for (ConcatRule r : without(acyclic_concat_rules(),
                              {"09", "10", "11", "12", "15", "16"})) {
    if (r.id == "01" || r.id == "02") r.out = kSM;
    f.concat_rules.push_back(r);
  }
  f.cover_rules = without(acyclic_cover_rules(), {"21", "24"});
  // Adds (i, j) on top of a graph already covered by (j, i).
  f.cover_rules.push_back({"29a", kL, kRight, kR});
  f.goal_kinds = f.kinds;
  return f;
}

Family make_undirected() {
  return {FamilyName::kUndirected,
          kAllKinds,
          acyclic_concat_rules(),
          without(acyclic_cover_rules(), {"24", "25", "26", "28e"}),
          kAllKinds,
          {kL, kSL, kSM}};
}

Family make_connected_undirected() {
  return {FamilyName::kConnectedUndirected,
          kAllKinds,
          without(acyclic_concat_rules(), {"20", "20e"}),
          without(acyclic_cover_rules(), {"24", "25", "26", "28e"}),
          kConnectedGoals,
          {kL, kSL, kSM}};
}

bool contains(const std::vector<ItemKind>& kinds, ItemKind k) {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

}  // namespace

bool is_covered_kind(ItemKind k) { return k == kR || k == kL; }

int min_span_width(ItemKind k) {
  if (is_covered_kind(k) || k == kH) return 1;
  return 2;
}

bool width_admits(ItemKind k, int width) {
  if (k == kH) return width == 1;
  return width >= min_span_width(k);
}

std::string_view to_string(Direction d) {
  return d == Direction::kMinToMax ? "MinToMax" : "MaxToMin";
}

std::string_view to_string(FamilyName name) {
  switch (name) {
    case FamilyName::kAcyclic: return "acyclic";
    case FamilyName::kConnectedAcyclic: return "connected-acyclic";
    case FamilyName::kDigraph: return "digraph";
    case FamilyName::kUndirected: return "undirected";
    case FamilyName::kConnectedUndirected: return "connected-undirected";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, FamilyName name) {
  return os << to_string(name);
}

std::optional<FamilyName> parse_family_name(std::string_view text) {
  for (FamilyName name : kAllFamilies) {
    if (to_string(name) == text) return name;
  }
  return std::nullopt;
}

bool is_undirected(FamilyName name) {
  return name == FamilyName::kUndirected ||
         name == FamilyName::kConnectedUndirected;
}

bool requires_connectivity(FamilyName name) {
  return name == FamilyName::kConnectedAcyclic ||
         name == FamilyName::kConnectedUndirected;
}

bool permits_cycles(FamilyName name) { return name == FamilyName::kDigraph; }

bool Family::uses_kind(ItemKind k) const { return contains(kinds, k); }

bool Family::is_goal(ItemKind k) const { return contains(goal_kinds, k); }

const Family& family(FamilyName name) {
  static const std::array<Family, 5> tables = {
      make_acyclic(), make_connected_acyclic(), make_digraph(),
      make_undirected(), make_connected_undirected()};
  return tables[static_cast<std::size_t>(name)];
}

const Family& family(std::string_view name) {
  auto parsed = parse_family_name(name);
  if (!parsed) {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }
  return family(*parsed);
}

ItemKind expected_kind(FamilyName name, const Digraph& g) {
  if (!permits_cycles(name)) return classify(g);
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("expected_kind: needs 2 vertices");
  if (g.has_arc(1, n)) return kR;
  if (g.has_arc(n, 1)) return kL;
  if (has_undirected_path(g, 1, n)) return kSM;
  return n == 2 ? kH : kU;
}

}  // namespace ncdag
