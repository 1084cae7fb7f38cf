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

#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace ncdag {
namespace {

using ::testing::HasSubstr;

std::string error_of(const std::string& text) {
  try {
    parse_score_file(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ScoreFileTest, Parses) {
  const ScoreTable t = parse_score_file(
      R"({"n": 3, "arcs": [{"src": 1, "dst": 3, "score": -1.5},
                           {"src": 3, "dst": 2, "score": 4}]})");
  EXPECT_EQ(t.n(), 3);
  EXPECT_EQ(t.score(1, 3), -1.5);
  EXPECT_EQ(t.score(3, 2), 4.0);
  EXPECT_EQ(t.score(2, 3), 0.0);
}

TEST(ScoreFileTest, ErrorsNameTheField) {
  EXPECT_THAT(error_of("{"), HasSubstr("not valid JSON"));
  EXPECT_THAT(error_of("[]"), HasSubstr("object"));
  EXPECT_THAT(error_of(R"({"arcs": []})"), HasSubstr("\"n\""));
  EXPECT_THAT(error_of(R"({"n": 0, "arcs": []})"), HasSubstr("\"n\""));
  EXPECT_THAT(error_of(R"({"n": 2.5, "arcs": []})"), HasSubstr("\"n\""));
  EXPECT_THAT(error_of(R"({"n": 2})"), HasSubstr("\"arcs\""));
  EXPECT_THAT(error_of(R"({"n": 2, "arcs": {}})"), HasSubstr("\"arcs\""));
  EXPECT_THAT(
      error_of(R"({"n": 2, "arcs": [{"src": 1, "dst": 3, "score": 1}]})"),
      HasSubstr("arcs[0].dst"));
  EXPECT_THAT(error_of(R"({"n": 2, "arcs": [{"dst": 2, "score": 1}]})"),
              HasSubstr("arcs[0].src"));
  EXPECT_THAT(
      error_of(R"({"n": 2, "arcs": [{"src": 1, "dst": 2, "score": "x"}]})"),
      HasSubstr("arcs[0].score"));
  EXPECT_THAT(error_of(R"({"n": 2, "arcs": [{"src": 1, "dst": 2}]})"),
              HasSubstr("arcs[0].score"));
  EXPECT_THAT(
      error_of(R"({"n": 2, "arcs": [{"src": 2, "dst": 2, "score": 1}]})"),
      HasSubstr("self-loop"));
  EXPECT_THAT(error_of(R"({"n": 2, "arcs": [{"src": 1, "dst": 2, "score": 1},
                                            {"src": 1, "dst": 2, "score": 2}]})"),
              HasSubstr("arcs[1]"));
}

TEST(ScoreFileTest, MissingFile) {
  EXPECT_THROW(read_score_file("/nonexistent/scores.json"), InputError);
}

TEST(GraphJsonTest, Format) {
  EXPECT_EQ(graph_json(Digraph(2, {{2, 1}}), 3.0),
            R"({"n":2,"score":3.0,"arcs":[{"src":2,"dst":1}]})");
  EXPECT_EQ(graph_json(Digraph(3)), R"({"n":3,"arcs":[]})");
  EXPECT_EQ(graph_json(Digraph(3, {{3, 1}, {1, 2}}), -0.5),
            R"({"n":3,"score":-0.5,"arcs":[{"src":1,"dst":2},{"src":3,"dst":1}]})");
}

}  // namespace
}  // namespace ncdag
