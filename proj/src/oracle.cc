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

#include "ncdag/oracle.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace ncdag {

int oracle_cap(FamilyName family) { return is_undirected(family) ? 6 : 5; }

bool is_member(FamilyName family, const Digraph& g) {
  if (!is_noncrossing(g)) return false;
  if (is_undirected(family)) {
    for (const Arc& a : g.arcs()) {
      if (a.src > a.dst) return false;
    }
  }
  if (!permits_cycles(family) && !is_acyclic(g)) return false;
  if (requires_connectivity(family) && !is_weakly_connected(g)) return false;
  return true;
}

std::vector<Digraph> oracle_enumerate(const OracleConfig& cfg) {
  const int n = cfg.n;
  if (n < 1 || n > oracle_cap(cfg.family)) {
    throw std::out_of_range("oracle: n must be in [1, " +
                            std::to_string(oracle_cap(cfg.family)) +
                            "] for family " +
                            std::string(to_string(cfg.family)) + ", got " +
                            std::to_string(n));
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  // none, forward, backward, both
  const int states = is_undirected(cfg.family) ? 2 : 4;

  std::vector<Digraph> members;
  std::vector<int> state(pairs.size(), 0);
  std::vector<Arc> arcs;
  while (true) {
    arcs.clear();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [u, v] = pairs[p];
      if (state[p] & 1) arcs.push_back({u, v});
      if (state[p] & 2) arcs.push_back({v, u});
    }
    Digraph g(n, arcs);
    if (is_member(cfg.family, g)) members.push_back(std::move(g));

    // Odometer with the last pair varying fastest.
    std::size_t p = pairs.size();
    while (p > 0 && state[p - 1] == states - 1) state[--p] = 0;
    if (p == 0) break;
    ++state[p - 1];
  }
  return members;
}

std::uint64_t oracle_count(const OracleConfig& cfg) {
  return oracle_enumerate(cfg).size();
}

DecodeResult best_member(std::span<const Digraph> members,
                         const ScoreTable& scores) {
  if (members.empty()) {
    throw std::domain_error("oracle: empty member set");
  }
  std::size_t best = 0;
  double best_score = scores.total(members[0]);
  for (std::size_t m = 1; m < members.size(); ++m) {
    const double s = scores.total(members[m]);
    if (s > best_score) {
      best = m;
      best_score = s;
    }
  }
  return {members[best], best_score};
}

DecodeResult oracle_best(const OracleConfig& cfg, const ScoreTable& scores) {
  if (scores.n() != cfg.n) {
    throw std::invalid_argument("oracle_best: score table is for n=" +
                                std::to_string(scores.n()));
  }
  const auto members = oracle_enumerate(cfg);
  return best_member(members, scores);
}

}  // namespace ncdag
