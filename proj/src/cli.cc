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

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ncdag/analyses.h"
#include "ncdag/engine.h"
#include "ncdag/io.h"
#include "ncdag/oracle.h"

namespace ncdag::cli {
namespace {

constexpr int kDecodeTrials = 25;

struct Options {
  std::string family;
  int n = 0;
  bool per_class = false;
  std::string input;
  int max_n = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FamilyName family_or_throw(const std::string& name) {
  auto parsed = parse_family_name(name);
  if (!parsed) throw UsageError("unknown family '" + name + "'");
  return *parsed;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const FamilyName name = family_or_throw(opt.family);
  if (opt.n < 1) throw UsageError("--n must be >= 1");
  if (!opt.per_class) {
    out << count(name, opt.n) << '\n';
    return kOk;
  }
  if (opt.n < 2) throw UsageError("--per-class needs --n >= 2");
  const auto by_class = count_by_class(name, opt.n);
  for (GraphClass c : kAllGraphClasses) {
    out << to_string(c) << '\t' << by_class[index_of(c)] << '\n';
  }
  return kOk;
}

int cmd_decode(const Options& opt, std::ostream& out) {
  const FamilyName name = family_or_throw(opt.family);
  const ScoreTable scores = read_score_file(opt.input);
  const DecodeResult best = decode(name, scores);
  out << graph_json(best.graph, best.score) << '\n';
  return kOk;
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const FamilyName name = family_or_throw(opt.family);
  if (opt.n < 1 || opt.n > kDefaultEnumerationCap) {
    throw UsageError("--n must be in 1.." +
                     std::to_string(kDefaultEnumerationCap));
  }
  if (opt.n == 1) {
    out << graph_json(Digraph(1)) << '\n';
    return kOk;
  }
  for_each_derivation(family(name), opt.n, [&](const Derivation& d) {
    out << graph_json(realize(d)) << '\n';
  });
  return kOk;
}

ScoreTable random_scores(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-5, 5);
  ScoreTable table(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) table.set(u, v, dist(rng));
    }
  }
  return table;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const FamilyName name = family_or_throw(opt.family);
  const int cap = oracle_cap(name);
  if (opt.max_n < 2 || opt.max_n > cap) {
    throw UsageError("--max-n must be in 2.." + std::to_string(cap) +
                     " for family " + opt.family);
  }
  const Family& f = family(name);
  bool all_ok = true;
  auto report = [&](int n, const char* check, const std::string& engine,
                    const std::string& oracle, bool ok) {
    all_ok = all_ok && ok;
    out << opt.family << '\t' << n << '\t' << check << '\t' << engine << '\t'
        << oracle << '\t' << (ok ? "PASS" : "FAIL") << '\n';
  };

  out << "family\tn\tcheck\tengine\toracle\tstatus\n";
  for (int n = 2; n <= opt.max_n; ++n) {
    const auto members = oracle_enumerate({name, n});
    const std::set<Digraph> expected(members.begin(), members.end());

    const Natural engine_count = count(name, n);
    report(n, "count", engine_count.str(), std::to_string(members.size()),
           engine_count == members.size());

    std::set<Digraph> image;
    std::size_t derivation_total = 0;
    for_each_derivation(f, n, [&](const Derivation& d) {
      ++derivation_total;
      image.insert(realize(d));
    });
    const std::size_t duplicates = derivation_total - image.size();
    report(n, "enumerate",
           std::to_string(image.size()) + " distinct, " +
               std::to_string(duplicates) + " duplicate",
           std::to_string(expected.size()),
           duplicates == 0 && image == expected);

    std::mt19937 rng(static_cast<unsigned>(1000 * static_cast<int>(name) + n));
    int optimal = 0;
    for (int trial = 0; trial < kDecodeTrials; ++trial) {
      const ScoreTable scores = random_scores(n, rng);
      const DecodeResult got = decode(name, scores);
      const DecodeResult want = best_member(members, scores);
      if (got.score == want.score && is_member(name, got.graph) &&
          scores.total(got.graph) == got.score) {
        ++optimal;
      }
    }
    report(n, "decode", std::to_string(optimal) + "/" +
                            std::to_string(kDecodeTrials) + " optimal",
           std::to_string(kDecodeTrials), optimal == kDecodeTrials);
  }
  out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  return all_ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Tabulation of noncrossing digraph families", "ncdag"};
  app.require_subcommand(1);
  Options opt;

  const std::string families =
      "acyclic | connected-acyclic | digraph | undirected | "
      "connected-undirected";

  auto* count_cmd = app.add_subcommand("count", "Count members on n vertices");
  count_cmd->add_option("--family", opt.family, families)->required();
  count_cmd->add_option("--n", opt.n, "Number of vertices")->required();
  count_cmd->add_flag("--per-class", opt.per_class,
                      "Print one class<TAB>count line per class");

  auto* decode_cmd =
      app.add_subcommand("decode", "Highest-scoring member for a score file");
  decode_cmd->add_option("--family", opt.family, families)->required();
  decode_cmd->add_option("--input", opt.input, "Score file (JSON)")
      ->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Print every member, one per line");
  enumerate_cmd->add_option("--family", opt.family, families)->required();
  enumerate_cmd->add_option("--n", opt.n, "Number of vertices")->required();

  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the engine against brute-force enumeration");
  verify_cmd->add_option("--family", opt.family, families)->required();
  verify_cmd->add_option("--max-n", opt.max_n, "Largest n to check")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ncdag: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(opt, out);
    if (decode_cmd->parsed()) return cmd_decode(opt, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
  } catch (const UsageError& e) {
    err << "ncdag: " << e.what() << '\n' << app.help();
    return kUsageError;
  } catch (const InputError& e) {
    err << "ncdag: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "ncdag: " << e.what() << '\n';
    return kEmptyFamily;
  }
  return kUsageError;
}

}  // namespace ncdag::cli
