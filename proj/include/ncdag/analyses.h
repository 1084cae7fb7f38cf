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

#ifndef NCDAG_ANALYSES_H_
#define NCDAG_ANALYSES_H_

#include <array>
#include <map>
#include <utility>

#include "ncdag/digraph.h"
#include "ncdag/family.h"
#include "ncdag/semiring.h"

namespace ncdag {

// Edge-factored scores over ordered vertex pairs; unlisted pairs score 0.
class ScoreTable {
 public:
  explicit ScoreTable(int n);

  int n() const { return n_; }

  // Throws std::invalid_argument for out-of-range pairs, self-loops, and
  // pairs that were already set.
  void set(Vertex src, Vertex dst, double score);
  double score(Vertex src, Vertex dst) const;
  const std::map<std::pair<Vertex, Vertex>, double>& entries() const {
    return scores_;
  }

  // Sum of the listed scores of g's arcs, in arc order.
  double total(const Digraph& g) const;

 private:
  int n_;
  std::map<std::pair<Vertex, Vertex>, double> scores_;
};

struct DecodeResult {
  Digraph graph;
  double score = 0.0;
};

// Number of members of family `name` on n vertices; n = 1 gives 1.
// Throws std::invalid_argument for n < 1.
Natural count(FamilyName name, int n);

// Members per class at (1, n). Kinds that are not goals of the family map to
// zero, so the values always sum to count(name, n). Requires n >= 2.
std::array<Natural, kNumGraphClasses> count_by_class(FamilyName name, int n);

// Highest-scoring member under the table's edge-factored scores. Among
// members with equal score the one with fewest arcs is returned, so an
// all-zero table decodes to the empty graph.
DecodeResult decode(FamilyName name, const ScoreTable& scores);

}  // namespace ncdag

#endif  // NCDAG_ANALYSES_H_
