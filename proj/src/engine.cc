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

#include "ncdag/engine.h"

#include <utility>

namespace ncdag {

Derivation make_axiom(Vertex i) {
  auto node = std::make_shared<DerivationNode>();
  node->type = DerivationNode::Type::kAxiom;
  node->kind = ItemKind::kElementary;
  node->first = i;
  node->last = i + 1;
  return node;
}

Derivation make_concat(const ConcatRule& rule, Derivation left,
                       Derivation right) {
  if (left->kind != rule.left || right->kind != rule.right ||
      left->last != right->first) {
    throw std::invalid_argument("make_concat: antecedents do not match rule " +
                                std::string(rule.id));
  }
  auto node = std::make_shared<DerivationNode>();
  node->type = DerivationNode::Type::kConcat;
  node->kind = rule.out;
  node->first = left->first;
  node->last = right->last;
  node->rule_id = rule.id;
  node->split = left->last;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

Derivation make_cover(const CoverRule& rule, Derivation antecedent) {
  if (antecedent->kind != rule.in) {
    throw std::invalid_argument("make_cover: antecedent does not match rule " +
                                std::string(rule.id));
  }
  auto node = std::make_shared<DerivationNode>();
  node->type = DerivationNode::Type::kCover;
  node->kind = rule.out;
  node->first = antecedent->first;
  node->last = antecedent->last;
  node->rule_id = rule.id;
  node->direction = rule.direction;
  node->left = std::move(antecedent);
  return node;
}

namespace {

void collect_arcs(const DerivationNode& d, Vertex offset,
                  std::vector<Arc>& arcs) {
  switch (d.type) {
    case DerivationNode::Type::kAxiom:
      return;
    case DerivationNode::Type::kConcat:
      collect_arcs(*d.left, offset, arcs);
      collect_arcs(*d.right, offset, arcs);
      return;
    case DerivationNode::Type::kCover:
      if (d.direction == Direction::kMinToMax) {
        arcs.push_back({d.first - offset, d.last - offset});
      } else {
        arcs.push_back({d.last - offset, d.first - offset});
      }
      collect_arcs(*d.left, offset, arcs);
      return;
  }
}

// Enumerates derivations of one item, pruned by a derivability chart so that
// dead rule instances are never expanded.
class Enumerator {
 public:
  Enumerator(const Family& f, int n)
      : family_(f), derivable_(fill_chart<BooleanSemiring>(f, n)) {}

  void item(Vertex i, Vertex k, ItemKind kind,
            const DerivationVisitor& visit) const {
    if (!derivable_.at(i, k, kind)) return;
    if (kind == ItemKind::kElementary) {
      visit(make_axiom(i));
      return;
    }
    for (const ConcatRule& rule : family_.concat_rules) {
      if (rule.out != kind) continue;
      for (Vertex j = i + 1; j < k; ++j) {
        if (!width_admits(rule.left, j - i) ||
            !width_admits(rule.right, k - j) ||
            !derivable_.at(i, j, rule.left) ||
            !derivable_.at(j, k, rule.right)) {
          continue;
        }
        item(i, j, rule.left, [&](const Derivation& left) {
          item(j, k, rule.right, [&](const Derivation& right) {
            visit(make_concat(rule, left, right));
          });
        });
      }
    }
    for (const CoverRule& rule : family_.cover_rules) {
      if (rule.out != kind) continue;
      item(i, k, rule.in, [&](const Derivation& antecedent) {
        visit(make_cover(rule, antecedent));
      });
    }
  }

 private:
  const Family& family_;
  Chart<BooleanSemiring> derivable_;
};

}  // namespace

Digraph realize(const DerivationNode& d) {
  std::vector<Arc> arcs;
  collect_arcs(d, d.first - 1, arcs);
  return Digraph(d.last - d.first + 1, std::move(arcs));
}

void for_each_derivation(const Family& f, int n,
                         const DerivationVisitor& visit, int cap) {
  if (n < 2 || n > cap) {
    throw std::out_of_range("derivation enumeration needs 2 <= n <= " +
                            std::to_string(cap) + ", got " +
                            std::to_string(n));
  }
  Enumerator enumerator(f, n);
  for (ItemKind kind : kAllGraphClasses) {
    if (f.is_goal(kind)) enumerator.item(1, n, kind, visit);
  }
}

std::vector<Derivation> derivations(const Family& f, int n, int cap) {
  std::vector<Derivation> out;
  for_each_derivation(
      f, n, [&](const Derivation& d) { out.push_back(d); }, cap);
  return out;
}

}  // namespace ncdag
