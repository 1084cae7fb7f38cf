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

#include "ncdag/digraph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace ncdag {

std::ostream& operator<<(std::ostream& os, const Arc& arc) {
  return os << '(' << arc.src << ',' << arc.dst << ')';
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 1) {
    throw std::invalid_argument("Digraph: vertex count must be positive, got " +
                                std::to_string(n_));
  }
  for (const Arc& a : arcs_) {
    if (a.src < 1 || a.src > n_ || a.dst < 1 || a.dst > n_) {
      throw std::invalid_argument("Digraph: arc endpoint out of range");
    }
    if (a.src == a.dst) {
      throw std::invalid_argument("Digraph: self-loop on vertex " +
                                  std::to_string(a.src));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw std::invalid_argument("Digraph: duplicate arc");
  }
}

bool Digraph::has_arc(Vertex src, Vertex dst) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{src, dst});
}

Digraph Digraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (const Arc& a : arcs_) flipped.push_back({a.dst, a.src});
  return Digraph(n_, std::move(flipped));
}

std::ostream& operator<<(std::ostream& os, const Digraph& g) {
  os << "n=" << g.n() << " {";
  bool first = true;
  for (const Arc& a : g.arcs()) {
    if (!first) os << ',';
    first = false;
    os << a;
  }
  return os << '}';
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kMinMaxCovered: return "MinMaxCovered";
    case GraphClass::kMaxMinCovered: return "MaxMinCovered";
    case GraphClass::kMinMaxConnected: return "MinMaxConnected";
    case GraphClass::kMaxMinConnected: return "MaxMinConnected";
    case GraphClass::kMixConnected: return "MixConnected";
    case GraphClass::kElementary: return "Elementary";
    case GraphClass::kUnconnected: return "Unconnected";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, GraphClass c) {
  return os << to_string(c);
}

GraphClass mirrored(GraphClass c) {
  switch (c) {
    case GraphClass::kMinMaxCovered: return GraphClass::kMaxMinCovered;
    case GraphClass::kMaxMinCovered: return GraphClass::kMinMaxCovered;
    case GraphClass::kMinMaxConnected: return GraphClass::kMaxMinConnected;
    case GraphClass::kMaxMinConnected: return GraphClass::kMinMaxConnected;
    default: return c;
  }
}

bool arcs_cross(const Arc& a, const Arc& b) {
  auto [p, q] = std::minmax(a.src, a.dst);
  auto [r, s] = std::minmax(b.src, b.dst);
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

bool is_noncrossing(const Digraph& g) {
  auto arcs = g.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (arcs_cross(arcs[x], arcs[y])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::vector<Vertex>> successors(const Digraph& g) {
  std::vector<std::vector<Vertex>> out(g.n() + 1);
  for (const Arc& a : g.arcs()) out[a.src].push_back(a.dst);
  return out;
}

}  // namespace

bool is_acyclic(const Digraph& g) {
  // Kahn's algorithm: a cycle leaves vertices with nonzero in-degree.
  std::vector<int> indegree(g.n() + 1, 0);
  for (const Arc& a : g.arcs()) ++indegree[a.dst];
  auto succ = successors(g);
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : succ[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == g.n();
}

namespace {

// Union-find over the underlying undirected graph.
class Components {
 public:
  explicit Components(const Digraph& g) : parent_(g.n() + 1), count_(g.n()) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const Arc& a : g.arcs()) {
      Vertex x = find(a.src);
      Vertex y = find(a.dst);
      if (x != y) {
        parent_[x] = y;
        --count_;
      }
    }
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  int count() const { return count_; }

 private:
  std::vector<Vertex> parent_;
  int count_;
};

}  // namespace

bool is_weakly_connected(const Digraph& g) {
  return Components(g).count() == 1;
}

bool has_undirected_path(const Digraph& g, Vertex u, Vertex v) {
  Components components(g);
  return components.find(u) == components.find(v);
}

bool has_directed_path(const Digraph& g, Vertex from, Vertex to) {
  auto succ = successors(g);
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<Vertex> stack = {from};
  seen[from] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (Vertex w : succ[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

GraphClass classify(const Digraph& g) {
  const int n = g.n();
  if (n < 2) {
    throw std::invalid_argument("classify: needs at least 2 vertices");
  }
  const bool forward_cover = g.has_arc(1, n);
  const bool backward_cover = g.has_arc(n, 1);
  if (forward_cover && backward_cover) {
    throw std::invalid_argument("classify: both covering arcs form a 2-cycle");
  }
  if (forward_cover) return GraphClass::kMinMaxCovered;
  if (backward_cover) return GraphClass::kMaxMinCovered;
  if (has_undirected_path(g, 1, n)) {
    if (has_directed_path(g, 1, n)) return GraphClass::kMinMaxConnected;
    if (has_directed_path(g, n, 1)) return GraphClass::kMaxMinConnected;
    return GraphClass::kMixConnected;
  }
  return n == 2 ? GraphClass::kElementary : GraphClass::kUnconnected;
}

}  // namespace ncdag
