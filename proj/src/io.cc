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

#include "ncdag/io.h"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace ncdag {
namespace {

using nlohmann::json;

int read_int(const json& obj, const char* key, const std::string& where) {
  const std::string field = where.empty() ? key : where + "." + key;
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + field + "\"");
  if (!it->is_number_integer()) {
    throw InputError("field \"" + field + "\" must be an integer");
  }
  const auto value = it->get<std::int64_t>();
  if (value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    throw InputError("field \"" + field + "\" is out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

ScoreTable parse_score_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level must be an object");

  const int n = read_int(doc, "n", "");
  if (n < 1) throw InputError("field \"n\" must be >= 1");
  ScoreTable table(n);

  auto arcs = doc.find("arcs");
  if (arcs == doc.end()) throw InputError("missing field \"arcs\"");
  if (!arcs->is_array()) throw InputError("field \"arcs\" must be an array");

  for (std::size_t idx = 0; idx < arcs->size(); ++idx) {
    const json& entry = (*arcs)[idx];
    const std::string where = "arcs[" + std::to_string(idx) + "]";
    if (!entry.is_object()) throw InputError(where + " must be an object");
    const int src = read_int(entry, "src", where);
    const int dst = read_int(entry, "dst", where);
    if (src < 1 || src > n) {
      throw InputError("field \"" + where + ".src\" must be in 1..n");
    }
    if (dst < 1 || dst > n) {
      throw InputError("field \"" + where + ".dst\" must be in 1..n");
    }
    if (src == dst) {
      throw InputError("field \"" + where + "\" is a self-loop");
    }
    auto score = entry.find("score");
    if (score == entry.end()) {
      throw InputError("missing field \"" + where + ".score\"");
    }
    if (!score->is_number()) {
      throw InputError("field \"" + where + ".score\" must be a number");
    }
    if (table.entries().contains({src, dst})) {
      throw InputError("field \"" + where + "\" duplicates arc (" +
                       std::to_string(src) + "," + std::to_string(dst) + ")");
    }
    table.set(src, dst, score->get<double>());
  }
  return table;
}

ScoreTable read_score_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open score file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_score_file(buffer.str());
}

std::string graph_json(const Digraph& g, std::optional<double> score) {
  nlohmann::ordered_json out;
  out["n"] = g.n();
  if (score) out["score"] = *score;
  auto arcs = nlohmann::ordered_json::array();
  for (const Arc& a : g.arcs()) {
    nlohmann::ordered_json arc;
    arc["src"] = a.src;
    arc["dst"] = a.dst;
    arcs.push_back(std::move(arc));
  }
  out["arcs"] = std::move(arcs);
  return out.dump();
}

}  // namespace ncdag
