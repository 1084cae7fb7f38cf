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

// Bottom-up tabulation over a family's deduction system.
//
// Spans are filled in order of increasing width. Within a span, the
// non-covered kinds are computed first from concatenations over all split
// points, then MaxMinCovered, then MinMaxCovered. The last ordering lets the
// unrestricted family's antiparallel cover rule read a final same-span
// MaxMinCovered value.

#ifndef NCDAG_ENGINE_H_
#define NCDAG_ENGINE_H_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncdag/chart.h"
#include "ncdag/digraph.h"
#include "ncdag/family.h"
#include "ncdag/semiring.h"

namespace ncdag {

// A node of a derivation tree. Axioms are Elementary items over (i, i+1);
// concatenations have two children meeting at `split`; covers have one.
struct DerivationNode {
  enum class Type { kAxiom, kConcat, kCover };

  Type type = Type::kAxiom;
  ItemKind kind = ItemKind::kElementary;
  Vertex first = 0;
  Vertex last = 0;
  std::string_view rule_id;
  Vertex split = 0;
  Direction direction = Direction::kMinToMax;
  std::shared_ptr<const DerivationNode> left;
  std::shared_ptr<const DerivationNode> right;
};

using Derivation = std::shared_ptr<const DerivationNode>;

Derivation make_axiom(Vertex i);
Derivation make_concat(const ConcatRule& rule, Derivation left,
                       Derivation right);
Derivation make_cover(const CoverRule& rule, Derivation antecedent);

// The graph whose arcs are exactly those added by cover nodes, relabeled so
// that the root span starts at vertex 1.
Digraph realize(const DerivationNode& d);
inline Digraph realize(const Derivation& d) { return realize(*d); }

template <typename W, typename S>
concept EdgeWeightFn = std::invocable<const W&, Vertex, Vertex> &&
    std::convertible_to<std::invoke_result_t<const W&, Vertex, Vertex>,
                        typename S::value_type>;

namespace internal {

inline Vertex first_split(ItemKind left, Vertex i) {
  return i + min_span_width(left);
}

inline Vertex last_split(ItemKind left, ItemKind right, Vertex i, Vertex k) {
  Vertex hi = k - min_span_width(right);
  if (left == ItemKind::kElementary) hi = std::min(hi, i + 1);
  return hi;
}

inline Vertex clamp_first_split(ItemKind right, Vertex lo, Vertex k) {
  return right == ItemKind::kElementary ? std::max(lo, k - 1) : lo;
}

template <Semiring S>
void apply_cover(const Family& f, Chart<S>& chart, Vertex i, Vertex k,
                 ItemKind target,
                 const std::vector<typename S::value_type>& arc_weight,
                 bool record) {
  using Source = Backpointer::Source;
  auto& cell = chart.at(i, k, target);
  for (std::size_t r = 0; r < f.cover_rules.size(); ++r) {
    const CoverRule& rule = f.cover_rules[r];
    if (rule.out != target) continue;
    chart.add_times_applications(1);
    const auto& antecedent = chart.at(i, k, rule.in);
    if (S::is_zero(antecedent)) continue;
    const auto& w = arc_weight[rule.direction == Direction::kMinToMax ? 0 : 1];
    if constexpr (S::kSelective) {
      if (record) {
        auto candidate = S::times(antecedent, w);
        if (S::better(candidate, cell)) {
          cell = std::move(candidate);
          chart.backpointer(i, k, target) = {Source::kCover,
                                             static_cast<std::uint16_t>(r), 0};
        }
        continue;
      }
    }
    S::add_product(cell, antecedent, w);
  }
}

}  // namespace internal

// Fills the chart for `f` on n vertices. `weight(src, dst)` is the semiring
// value of arc (src, dst). Backpointers are only kept for selective
// semirings; ties go to the lower rule id, then the smaller split vertex.
template <Semiring S, typename W>
  requires EdgeWeightFn<W, S>
Chart<S> fill_chart(const Family& f, int n, const W& weight,
                    bool record_backpointers = false) {
  using Source = Backpointer::Source;
  using value_type = typename S::value_type;
  const bool record = S::kSelective && record_backpointers;
  Chart<S> chart(n, record);

  std::vector<value_type> arc_weight(2);
  for (int width = 1; width < n; ++width) {
    for (Vertex i = 1; i + width <= n; ++i) {
      const Vertex k = i + width;
      if (width == 1) {
        chart.at(i, k, ItemKind::kElementary) = S::one();
        if (record) {
          chart.backpointer(i, k, ItemKind::kElementary).source = Source::kAxiom;
        }
      } else {
        for (std::size_t r = 0; r < f.concat_rules.size(); ++r) {
          const ConcatRule& rule = f.concat_rules[r];
          auto& cell = chart.at(i, k, rule.out);
          const Vertex hi = internal::last_split(rule.left, rule.right, i, k);
          Vertex j = internal::clamp_first_split(
              rule.right, internal::first_split(rule.left, i), k);
          for (; j <= hi; ++j) {
            chart.add_times_applications(1);
            const value_type& a = chart.at(i, j, rule.left);
            if (S::is_zero(a)) continue;
            const value_type& b = chart.at(j, k, rule.right);
            if (S::is_zero(b)) continue;
            if constexpr (S::kSelective) {
              if (record) {
                value_type candidate = S::times(a, b);
                if (S::better(candidate, cell)) {
                  cell = std::move(candidate);
                  chart.backpointer(i, k, rule.out) = {
                      Source::kConcat, static_cast<std::uint16_t>(r), j};
                }
                continue;
              }
            }
            S::add_product(cell, a, b);
          }
        }
      }
      arc_weight[0] = weight(i, k);
      arc_weight[1] = weight(k, i);
      internal::apply_cover(f, chart, i, k, ItemKind::kMaxMinCovered,
                            arc_weight, record);
      internal::apply_cover(f, chart, i, k, ItemKind::kMinMaxCovered,
                            arc_weight, record);
    }
  }
  return chart;
}

// Fill with every arc weighted `one`, as for counting.
template <Semiring S>
Chart<S> fill_chart(const Family& f, int n) {
  return fill_chart<S>(f, n, [](Vertex, Vertex) { return S::one(); });
}

// Plus over the family's goal kinds at (1, n).
template <Semiring S>
typename S::value_type goal_value(const Chart<S>& chart, const Family& f) {
  auto total = S::zero();
  for (ItemKind k : f.goal_kinds) {
    total = S::plus(total, chart.at(1, chart.n(), k));
  }
  return total;
}

namespace internal {

template <Semiring S>
Derivation follow(const Chart<S>& chart, const Family& f, Vertex i, Vertex k,
                  ItemKind kind) {
  using Source = Backpointer::Source;
  const Backpointer& bp = chart.backpointer(i, k, kind);
  switch (bp.source) {
    case Source::kAxiom:
      return make_axiom(i);
    case Source::kConcat: {
      const ConcatRule& rule = f.concat_rules.at(bp.rule);
      return make_concat(rule, follow(chart, f, i, bp.split, rule.left),
                         follow(chart, f, bp.split, k, rule.right));
    }
    case Source::kCover: {
      const CoverRule& rule = f.cover_rules.at(bp.rule);
      return make_cover(rule, follow(chart, f, i, k, rule.in));
    }
    case Source::kNone:
      break;
  }
  throw std::logic_error("backtrace: cell without a backpointer");
}

}  // namespace internal

// The derivation selected by the chart at (1, n). Among goal kinds with the
// same value the first in enum order wins. Throws std::invalid_argument when
// no backpointers were recorded and std::domain_error when the goal is zero.
template <SelectiveSemiring S>
Derivation backtrace(const Chart<S>& chart, const Family& f) {
  if (!chart.has_backpointers()) {
    throw std::invalid_argument("backtrace: chart has no backpointers");
  }
  const Vertex n = chart.n();
  bool found = false;
  ItemKind best = ItemKind::kElementary;
  for (ItemKind k : kAllGraphClasses) {
    if (!f.is_goal(k)) continue;
    if (S::is_zero(chart.at(1, n, k))) continue;
    if (!found || S::better(chart.at(1, n, k), chart.at(1, n, best))) {
      best = k;
      found = true;
    }
  }
  if (!found) {
    throw std::domain_error("backtrace: family has no member on " +
                            std::to_string(n) + " vertices");
  }
  return internal::follow(chart, f, 1, n, best);
}

inline constexpr int kDefaultEnumerationCap = 8;

using DerivationVisitor = std::function<void(const Derivation&)>;

// Visits every complete derivation of a goal item at (1, n) exactly once:
// goal kinds in enum order, then rule id, then split vertex, with the left
// antecedent varying slowest. Throws std::out_of_range if n is outside
// [2, cap].
void for_each_derivation(const Family& f, int n,
                         const DerivationVisitor& visit,
                         int cap = kDefaultEnumerationCap);

// Convenience for small n.
std::vector<Derivation> derivations(const Family& f, int n,
                                    int cap = kDefaultEnumerationCap);

}  // namespace ncdag

#endif  // NCDAG_ENGINE_H_
