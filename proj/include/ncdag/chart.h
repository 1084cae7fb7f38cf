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

#ifndef NCDAG_CHART_H_
#define NCDAG_CHART_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncdag/digraph.h"
#include "ncdag/family.h"
#include "ncdag/semiring.h"

namespace ncdag {

// Which rule instance produced a cell's selected value.
struct Backpointer {
  enum class Source : std::uint8_t { kNone, kAxiom, kConcat, kCover };

  Source source = Source::kNone;
  // Index into Family::concat_rules or Family::cover_rules.
  std::uint16_t rule = 0;
  // Shared vertex of a concatenation; unused otherwise.
  Vertex split = 0;
};

// Dense table of semiring values over spans 1 <= i < j <= n and the seven
// item kinds, i.e. exactly 7 * n * (n - 1) / 2 cells.
template <Semiring S>
class Chart {
 public:
  using value_type = typename S::value_type;

  Chart(int n, bool record_backpointers) : n_(n) {
    if (n < 2) {
      throw std::invalid_argument("Chart: needs at least 2 vertices, got " +
                                  std::to_string(n));
    }
    row_offset_.resize(n + 1, 0);
    std::size_t offset = 0;
    for (Vertex i = 1; i < n; ++i) {
      row_offset_[i] = offset;
      offset += static_cast<std::size_t>(n - i);
    }
    cells_.assign(offset * kNumGraphClasses, Slot{S::zero()});
    if (record_backpointers) backpointers_.resize(cells_.size());
  }

  int n() const { return n_; }
  std::size_t cell_count() const { return cells_.size(); }
  bool has_backpointers() const { return !backpointers_.empty(); }

  const value_type& at(Vertex i, Vertex j, ItemKind k) const {
    return cells_[index(i, j, k)].value;
  }
  value_type& at(Vertex i, Vertex j, ItemKind k) {
    return cells_[index(i, j, k)].value;
  }

  const Backpointer& backpointer(Vertex i, Vertex j, ItemKind k) const {
    return backpointers_.at(index(i, j, k));
  }
  Backpointer& backpointer(Vertex i, Vertex j, ItemKind k) {
    return backpointers_.at(index(i, j, k));
  }

  // Rule instances evaluated while filling.
  std::size_t times_applications() const { return times_applications_; }
  void add_times_applications(std::size_t count) {
    times_applications_ += count;
  }

 private:
  // Wrapped so that a bool carrier does not hit std::vector<bool>.
  struct Slot {
    value_type value;
  };

  std::size_t index(Vertex i, Vertex j, ItemKind k) const {
    return (row_offset_[i] + static_cast<std::size_t>(j - i - 1)) *
               kNumGraphClasses +
           index_of(k);
  }

  int n_;
  std::vector<std::size_t> row_offset_;
  std::vector<Slot> cells_;
  std::vector<Backpointer> backpointers_;
  std::size_t times_applications_ = 0;
};

}  // namespace ncdag

#endif  // NCDAG_CHART_H_
