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

#include "ncdag/analyses.h"

#include <stdexcept>
#include <string>

#include "ncdag/engine.h"

namespace ncdag {

ScoreTable::ScoreTable(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("ScoreTable: n must be >= 1, got " +
                                std::to_string(n));
  }
}

void ScoreTable::set(Vertex src, Vertex dst, double score) {
  if (src < 1 || src > n_ || dst < 1 || dst > n_) {
    throw std::invalid_argument("ScoreTable: arc endpoint out of range");
  }
  if (src == dst) {
    throw std::invalid_argument("ScoreTable: self-loop on vertex " +
                                std::to_string(src));
  }
  if (!scores_.emplace(std::pair{src, dst}, score).second) {
    throw std::invalid_argument("ScoreTable: duplicate arc (" +
                                std::to_string(src) + "," +
                                std::to_string(dst) + ")");
  }
}

double ScoreTable::score(Vertex src, Vertex dst) const {
  auto it = scores_.find({src, dst});
  return it == scores_.end() ? 0.0 : it->second;
}

double ScoreTable::total(const Digraph& g) const {
  double sum = 0.0;
  for (const Arc& a : g.arcs()) sum += score(a.src, a.dst);
  return sum;
}

Natural count(FamilyName name, int n) {
  if (n < 1) {
    throw std::invalid_argument("count: n must be >= 1, got " +
                                std::to_string(n));
  }
  if (n == 1) return 1;
  const Family& f = family(name);
  return goal_value(fill_chart<CountingSemiring>(f, n), f);
}

std::array<Natural, kNumGraphClasses> count_by_class(FamilyName name, int n) {
  if (n < 2) {
    throw std::invalid_argument("count_by_class: n must be >= 2, got " +
                                std::to_string(n));
  }
  const Family& f = family(name);
  auto chart = fill_chart<CountingSemiring>(f, n);
  std::array<Natural, kNumGraphClasses> out;
  for (ItemKind k : kAllGraphClasses) {
    out[index_of(k)] = f.is_goal(k) ? chart.at(1, n, k) : Natural(0);
  }
  return out;
}

DecodeResult decode(FamilyName name, const ScoreTable& scores) {
  const int n = scores.n();
  if (n == 1) return {Digraph(1), 0.0};
  const Family& f = family(name);
  using S = SparseMaxPlusSemiring;
  auto chart = fill_chart<S>(
      f, n,
      [&](Vertex src, Vertex dst) { return S::arc(scores.score(src, dst)); },
      /*record_backpointers=*/true);
  Digraph graph = realize(backtrace(chart, f));
  const double total = scores.total(graph);
  return {std::move(graph), total};
}

}  // namespace ncdag
