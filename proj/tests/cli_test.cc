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

#include "ncdag/cli.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace ncdag::cli {
namespace {

using ::testing::HasSubstr;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = std::filesystem::temp_directory_path() /
            ("ncdag_cli_test_" + std::to_string(counter_++) + ".json");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

TEST(CountCommandTest, PrintsExactCount) {
  EXPECT_EQ(run_cli({"count", "--family", "acyclic", "--n", "6"}).out,
            "101551\n");
  EXPECT_EQ(run_cli({"count", "--family", "digraph", "--n", "9"}).out,
            "201889939456\n");
}

TEST(CountCommandTest, PerClass) {
  const Result r =
      run_cli({"count", "--family", "acyclic", "--n", "4", "--per-class"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out,
            "MinMaxCovered\t106\nMaxMinCovered\t106\nMinMaxConnected\t17\n"
            "MaxMinConnected\t17\nMixConnected\t38\nElementary\t0\n"
            "Unconnected\t51\n");
}

TEST(CountCommandTest, BadArguments) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"count", "--family", "acyclic", "--n", "0"},
           {"count", "--family", "tree", "--n", "3"},
           {"count", "--family", "acyclic"},
           {"count", "--family", "acyclic", "--n", "x"},
           {},
           {"frobnicate"}}) {
    const Result r = run_cli(args);
    EXPECT_EQ(r.status, kUsageError);
    EXPECT_THAT(r.err, HasSubstr("ncdag"));
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(DecodeCommandTest, PrintsOptimum) {
  TempFile file(R"({"n": 2, "arcs": [{"src": 1, "dst": 2, "score": 2.0},
                                     {"src": 2, "dst": 1, "score": 3.0}]})");
  const Result r =
      run_cli({"decode", "--family", "acyclic", "--input", file.path()});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out, "{\"n\":2,\"score\":3.0,\"arcs\":[{\"src\":2,\"dst\":1}]}\n");
}

TEST(DecodeCommandTest, EmptyScoreList) {
  TempFile file(R"({"n": 3, "arcs": []})");
  const Result r =
      run_cli({"decode", "--family", "acyclic", "--input", file.path()});
  EXPECT_EQ(r.out, "{\"n\":3,\"score\":0.0,\"arcs\":[]}\n");
}

TEST(DecodeCommandTest, MalformedFileNamesField) {
  TempFile file(R"({"n": 3, "arcs": [{"src": 1, "dst": 9, "score": 1}]})");
  const Result r =
      run_cli({"decode", "--family", "acyclic", "--input", file.path()});
  EXPECT_EQ(r.status, kUsageError);
  EXPECT_THAT(r.err, HasSubstr("arcs[0].dst"));
  EXPECT_EQ(run_cli({"decode", "--family", "acyclic", "--input",
                     "/nonexistent.json"})
                .status,
            kUsageError);
}

TEST(EnumerateCommandTest, OneLinePerMember) {
  const Result two = run_cli({"enumerate", "--family", "acyclic", "--n", "2"});
  EXPECT_EQ(two.status, kOk);
  EXPECT_EQ(line_count(two.out), 3u);
  EXPECT_THAT(two.out, HasSubstr("{\"n\":2,\"arcs\":[]}\n"));
  EXPECT_EQ(line_count(
                run_cli({"enumerate", "--family", "undirected", "--n", "3"}).out),
            8u);
  EXPECT_EQ(run_cli({"enumerate", "--family", "acyclic", "--n", "1"}).out,
            "{\"n\":1,\"arcs\":[]}\n");
}

TEST(EnumerateCommandTest, CapEnforced) {
  EXPECT_EQ(run_cli({"enumerate", "--family", "acyclic", "--n", "9"}).status,
            kUsageError);
}

TEST(VerifyCommandTest, AcyclicPasses) {
  const Result r = run_cli({"verify", "--family", "acyclic", "--max-n", "5"});
  EXPECT_EQ(r.status, kOk) << r.out;
  EXPECT_THAT(r.out, HasSubstr("all checks passed"));
  EXPECT_THAT(r.out, Not(HasSubstr("FAIL")));
}

TEST(VerifyCommandTest, ConnectedAcyclicReportsCounts) {
  const Result r =
      run_cli({"verify", "--family", "connected-acyclic", "--max-n", "4"});
  EXPECT_EQ(r.status, kOk) << r.out;
  EXPECT_THAT(r.out, HasSubstr("connected-acyclic\t2\tcount\t2\t2\tPASS"));
  EXPECT_THAT(r.out, HasSubstr("connected-acyclic\t3\tcount\t18\t18\tPASS"));
  EXPECT_THAT(r.out, HasSubstr("connected-acyclic\t4\tcount\t242\t242\tPASS"));
}

TEST(VerifyCommandTest, OracleCapEnforced) {
  EXPECT_EQ(run_cli({"verify", "--family", "acyclic", "--max-n", "9"}).status,
            kUsageError);
  EXPECT_EQ(run_cli({"verify", "--family", "acyclic", "--max-n", "1"}).status,
            kUsageError);
}

TEST(ToolTest, ExitCodesFromTheBinary) {
  auto status_of = [](const std::string& args) {
    const std::string cmd =
        std::string(NCDAG_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status_of("count --family acyclic --n 3"), 0);
  EXPECT_EQ(status_of("count --family acyclic --n 0"), 2);
  EXPECT_EQ(status_of("enumerate --family acyclic --n 9"), 2);
  EXPECT_EQ(status_of("verify --family acyclic --max-n 9"), 2);
}

}  // namespace
}  // namespace ncdag::cli
