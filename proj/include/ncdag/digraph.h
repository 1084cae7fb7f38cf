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

#ifndef NCDAG_DIGRAPH_H_
#define NCDAG_DIGRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace ncdag {

// Vertices are labeled 1..n, left to right along the spine.
using Vertex = int;

struct Arc {
  Vertex src = 0;
  Vertex dst = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::ostream& operator<<(std::ostream& os, const Arc& arc);

// A simple digraph on vertices 1..n. Arcs are kept sorted by (src, dst) and
// free of duplicates and self-loops; the constructor enforces this.
class Digraph {
 public:
  explicit Digraph(int n, std::vector<Arc> arcs = {});
  Digraph(int n, std::initializer_list<Arc> arcs)
      : Digraph(n, std::vector<Arc>(arcs)) {}

  int n() const { return n_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  bool has_arc(Vertex src, Vertex dst) const;

  // Every arc flipped; keeps noncrossing and acyclic graphs in their class.
  Digraph reversed() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph&, const Digraph&) = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

std::ostream& operator<<(std::ostream& os, const Digraph& g);

// The seven classes of noncrossing acyclic digraphs with at least two
// vertices. The enumerator order is also the chart's kind order.
enum class GraphClass {
  kMinMaxCovered,
  kMaxMinCovered,
  kMinMaxConnected,
  kMaxMinConnected,
  kMixConnected,
  kElementary,
  kUnconnected,
};

inline constexpr std::size_t kNumGraphClasses = 7;

inline constexpr std::array<GraphClass, kNumGraphClasses> kAllGraphClasses = {
    GraphClass::kMinMaxCovered,   GraphClass::kMaxMinCovered,
    GraphClass::kMinMaxConnected, GraphClass::kMaxMinConnected,
    GraphClass::kMixConnected,    GraphClass::kElementary,
    GraphClass::kUnconnected,
};

constexpr std::size_t index_of(GraphClass c) {
  return static_cast<std::size_t>(c);
}

std::string_view to_string(GraphClass c);
std::ostream& operator<<(std::ostream& os, GraphClass c);

// Swaps the min/max orientation of a class; mix, elementary and unconnected
// are fixed points.
GraphClass mirrored(GraphClass c);

// Two arcs cross iff their spans properly interleave. Arcs sharing an
// endpoint, including antiparallel pairs, never cross.
bool arcs_cross(const Arc& a, const Arc& b);

bool is_noncrossing(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool is_weakly_connected(const Digraph& g);

// True iff a directed path from `from` to `to` exists (length >= 0).
bool has_directed_path(const Digraph& g, Vertex from, Vertex to);

// True iff `u` and `v` lie in the same weakly connected component.
bool has_undirected_path(const Digraph& g, Vertex u, Vertex v);

// Classifies a noncrossing acyclic digraph. A graph that is not edge-covered
// counts as connected when its extremal vertices 1 and n are joined by an
// undirected path; other vertices may stay isolated. Throws
// std::invalid_argument if n < 2 or if both covering arcs (1,n) and (n,1)
// are present.
GraphClass classify(const Digraph& g);

}  // namespace ncdag

#endif  // NCDAG_DIGRAPH_H_
