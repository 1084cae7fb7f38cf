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

// Brute-force family membership for small n. Every arc configuration is
// generated and filtered through the core-model predicates; nothing here
// touches the chart engine.

#ifndef NCDAG_ORACLE_H_
#define NCDAG_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ncdag/analyses.h"
#include "ncdag/digraph.h"
#include "ncdag/family.h"

namespace ncdag {

struct OracleConfig {
  FamilyName family;
  int n;
};

// 5 for directed families (4^10 configurations), 6 for undirected ones.
int oracle_cap(FamilyName family);

// Members in canonical order: lexicographic over per-pair states, pairs
// sorted by (min, max), states none < forward < backward < both. Throws
// std::out_of_range if n is outside [1, oracle_cap].
std::vector<Digraph> oracle_enumerate(const OracleConfig& cfg);

std::uint64_t oracle_count(const OracleConfig& cfg);

// First member in the given order with the maximal total score.
DecodeResult best_member(std::span<const Digraph> members,
                         const ScoreTable& scores);

DecodeResult oracle_best(const OracleConfig& cfg, const ScoreTable& scores);

// Family predicates checked directly on a graph.
bool is_member(FamilyName family, const Digraph& g);

}  // namespace ncdag

#endif  // NCDAG_ORACLE_H_
