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

#ifndef NCDAG_IO_H_
#define NCDAG_IO_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncdag/analyses.h"
#include "ncdag/digraph.h"

namespace ncdag {

// Malformed input document; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses {"n": int, "arcs": [{"src": int, "dst": int, "score": number}, ...]}.
ScoreTable parse_score_file(std::string_view text);
ScoreTable read_score_file(const std::string& path);

// One-line JSON {"n":..,"score":..,"arcs":[{"src":..,"dst":..},...]}; the
// score key is present only when given. Arcs come out sorted by (src, dst).
std::string graph_json(const Digraph& g,
                       std::optional<double> score = std::nullopt);

}  // namespace ncdag

#endif  // NCDAG_IO_H_
