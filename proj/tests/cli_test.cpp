// Copyright 2026 The pidom Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pidom/pidom.hpp"
#include "pidom_cli.hpp"

namespace pidom {
namespace {

using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  [[nodiscard]] json report() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "pidom");
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(PIDOM_DATA_DIR) + "/" + name; }
std::string test_data(const std::string& name) { return std::string(PIDOM_TEST_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("pidom_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("millis");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

TEST(Cli, SolveCycle) {
  const CliRun r = run({"solve", "--param", "pid", "--family", "cycle:9"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = r.report();
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["version"], cli::kVersion);
  EXPECT_EQ(j["input"]["n"], 9);
  ASSERT_EQ(j["results"].size(), 1u);
  const json& res = j["results"][0];
  EXPECT_EQ(res["parameter"], "pid");
  EXPECT_EQ(res["value"], 5);
  EXPECT_EQ(res["status"], "optimal");
  for (const char* key : {"witness", "nodes", "millis", "reason"}) EXPECT_TRUE(res.contains(key)) << key;
}

TEST(Cli, SolveWitnessReverifies) {
  for (const char* method : {"brute", "bnb"}) {
    const CliRun r = run({"solve", "--family", "jewel:2", "--method", method});
    ASSERT_EQ(r.code, 0) << r.err;
    const json res = r.report()["results"][0];
    EXPECT_EQ(res["value"], 12);
    const CliRun v = run({"verify", "--labeling", res["witness"].get<std::string>(), "--check", "pid", "--family", "jewel:2"});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_EQ(v.report()["results"][0]["ok"], true);
  }
}

TEST(Cli, SolveOtherParameters) {
  struct Case {
    const char* param;
    const char* family;
    int value;
  };
  for (const Case& c : {Case{"gamma", "complete:6", 1}, Case{"roman2", "kpartite:3,3,3,3", 3},
                        Case{"roman", "kpartite:3,3,3", 4}, Case{"fd2", "cycle:6", 3}, Case{"im", "cycle:6", 2}}) {
    const CliRun r = run({"solve", "--param", c.param, "--family", c.family});
    ASSERT_EQ(r.code, 0) << c.param << r.err;
    EXPECT_EQ(r.report()["results"][0]["value"], c.value) << c.param;
  }
  const json im = run({"solve", "--param", "im", "--family", "cycle:6"}).report()["results"][0];
  EXPECT_EQ(im["witness"].size(), 2u);
}

TEST(Cli, SolveGraph6AndEdges) {
  EXPECT_EQ(run({"solve", "--graph6", "Bw"}).report()["results"][0]["value"], 2);
  const std::string path = temp_file("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(run({"solve", "--edges", path}).report()["results"][0]["value"], 3);
}

TEST(Cli, SolveMaxWeight) {
  const CliRun r = run({"solve", "--family", "cycle:9", "--max-weight", "4"});
  EXPECT_EQ(r.code, 0);
  const json res = r.report()["results"][0];
  EXPECT_EQ(res["status"], "budget-proved-infeasible");
  EXPECT_EQ(res["value"], 5);
  EXPECT_TRUE(res["witness"].is_null());
}

TEST(Cli, BudgetExhaustedExitCode) {
  const CliRun r = run({"solve", "--family", "jewel:4", "--method", "bnb", "--node-limit", "2"});
  EXPECT_EQ(r.code, cli::kExitBudget);
  EXPECT_EQ(r.report()["results"][0]["status"], "timeout");
}

TEST(Cli, CapRefusalIsUsageError) {
  const CliRun r = run({"solve", "--family", "path:20", "--method", "brute"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  EXPECT_EQ(run({"solve", "--family", "path:13", "--method", "brute", "--cap", "12"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "path:12", "--method", "brute", "--cap", "12"}).code, 0);
}

TEST(Cli, EnvironmentCap) {
  ::setenv("PIDOM_BRUTE_CAP", "4", 1);
  const CliRun r = run({"solve", "--family", "path:6", "--method", "brute"});
  ::unsetenv("PIDOM_BRUTE_CAP");
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "path:6", "--method", "brute"}).code, 0);
}

TEST(Cli, VerifyReportsViolations) {
  const CliRun ok = run({"verify", "--labeling", "1,0,1", "--check", "pid", "--family", "path:3"});
  EXPECT_EQ(ok.code, 0);
  const CliRun bad = run({"verify", "--labeling", "2,0,0", "--check", "pid", "--family", "path:3"});
  EXPECT_EQ(bad.code, cli::kExitFailure);
  const json v = bad.report()["results"][0]["violations"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["vertex"], 2);
  EXPECT_EQ(v[0]["observed"], 0);
  EXPECT_EQ(run({"verify", "--labeling", "2,0,0", "--check", "roman", "--family", "path:3"}).code, cli::kExitFailure);
  EXPECT_EQ(run({"verify", "--labeling", "0,2,0", "--check", "roman", "--family", "path:3"}).code, 0);
  EXPECT_EQ(run({"verify", "--labeling", "1,0", "--family", "path:3"}).code, cli::kExitUsage);
}

TEST(Cli, GenerateFormats) {
  const CliRun g6 = run({"generate", "--family", "cycle:5"});
  EXPECT_EQ(g6.code, 0);
  EXPECT_EQ(g6.out, "Dhc\n");
  const CliRun edges = run({"generate", "--family", "path:3", "--out", "edges"});
  EXPECT_EQ(edges.out, "3 2\n0 1\n1 2\n");
}

TEST(Cli, GenerateThenSolveMatchesClosedForm) {
  for (const char* family : {"path:7", "cycle:8", "star:6", "wheel:7", "kpartite:2,5", "kpartite:3,4",
                             "kpartite:3,3,4", "threshold:00101", "split:6", "jewel:1", "complete:5"}) {
    const std::string g6 = run({"generate", "--family", family}).out;
    const json solved = run({"solve", "--graph6", g6.substr(0, g6.size() - 1)}).report();
    const json ch = run({"characterize", "--family", family}).report();
    ASSERT_EQ(ch["results"][0]["rule"], "closed_form");
    EXPECT_EQ(ch["results"][0]["value"], solved["results"][0]["value"]) << family;
    EXPECT_EQ(ch["conclusion"]["conclusion"], "pid-equals") << family;
  }
}

TEST(Cli, CharacterizeGraphInput) {
  const json k333 = run({"characterize", "--family", "kpartite:3,3,3"}).report();
  EXPECT_EQ(k333["conclusion"]["value"], 3);
  const json c6 = run({"characterize", "--graph6", encode_graph6(make(FamilySpec::cycle(6)))}).report();
  EXPECT_EQ(c6["conclusion"]["conclusion"], "pid-equals");
  EXPECT_EQ(c6["conclusion"]["reason"], "pid3-2fair-triple");
  const json q3 = run({"characterize", "--graph6", "Gr`HOk"}).report();
  EXPECT_EQ(q3["conclusion"]["conclusion"], "pid-equals");
  EXPECT_EQ(q3["conclusion"]["value"], 4);
  const json p7 = run({"characterize", "--family", "path:9"}).report();
  EXPECT_EQ(p7["conclusion"]["value"], 5);
  const json petersen = run({"characterize", "--graph6", "IheA@GUAo"}).report();
  EXPECT_EQ(petersen["conclusion"]["conclusion"], "pid-equals");
  EXPECT_EQ(petersen["conclusion"]["value"], 4);
  const json r5 = run({"characterize", "--graph6", "G}qzp{"}).report();
  EXPECT_EQ(r5["conclusion"]["conclusion"], "pid-between");
  EXPECT_EQ(r5["conclusion"]["lower"], 4);
  EXPECT_EQ(r5["conclusion"]["upper"], 8);
}

TEST(Cli, ReduceEmitsGraphAndRoles) {
  const CliRun r = run({"reduce", "--x3c", test_data("x3c_q1_yes.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json res = r.report()["results"][0];
  EXPECT_EQ(res["k"], 8);
  EXPECT_EQ(res["n"], 57);
  EXPECT_EQ(res["bipartite"], true);
  EXPECT_EQ(res["roles"].size(), 57u);
  EXPECT_EQ(res["roles"][0]["role"], "element-anchor");
  EXPECT_EQ(decode_graph6(res["graph6"].get<std::string>()).order(), 57u);

  const json r2 = run({"reduce", "--x3c", test_data("x3c_q1_yes.txt"), "--target", "roman2", "--k", "7"}).report();
  EXPECT_EQ(r2["results"][0]["n"], 11);
  EXPECT_EQ(r2["results"][0]["k"], 7);
  EXPECT_EQ(run({"reduce", "--x3c", test_data("x3c_q1_yes.txt"), "--k", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"reduce", "--x3c", "/nonexistent/x3c.txt"}).code, cli::kExitUsage);
}

TEST(Cli, CorpusTableRows) {
  const CliRun r = run({"corpus", "--file", data("table1_small.g6"), "--assert-pid-equals-n"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = r.report();
  ASSERT_EQ(j["results"].size(), 3u);
  for (const auto& line : j["results"]) {
    EXPECT_EQ(line["ok"], true);
    EXPECT_EQ(line["checks"]["pid_equals_n"], true);
    EXPECT_EQ(line["pid"]["value"], line["n"]);
  }
}

TEST(Corpus, CubicSandwich) {
  const CliRun r = run({"corpus", "--file", data("cubic_small.g6"), "--assert-cubic-bounds"});
  EXPECT_EQ(r.code, 0) << r.out;
  for (const auto& line : r.report()["results"]) EXPECT_EQ(line["checks"]["cubic_bounds"], true);
}

TEST(Cli, CorpusReportsAllFailures) {
  const std::string path = temp_file("mixed.g6", "Bw\nnot-graph6\nG}qzp{\nDhc\n");
  const CliRun r = run({"corpus", "--file", path, "--assert-pid-equals-n"});
  EXPECT_EQ(r.code, cli::kExitFailure);
  const json res = r.report()["results"];
  ASSERT_EQ(res.size(), 4u);
  EXPECT_EQ(res[0]["ok"], false);
  EXPECT_TRUE(res[1].contains("error"));
  EXPECT_EQ(res[2]["ok"], true);
  EXPECT_EQ(res[3]["ok"], false);
  EXPECT_EQ(res[3]["line"], 4);
}

TEST(Cli, ReportsAreStableModuloTiming) {
  json a = run({"solve", "--family", "kc:3,2,5,1", "--method", "bnb"}).report();
  json b = run({"solve", "--family", "kc:3,2,5,1", "--method", "bnb"}).report();
  strip_timing(a);
  strip_timing(b);
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--param", "xyz", "--family", "path:3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "path:3", "--graph6", "Bw"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--family", "cycle:2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--graph6", "B "}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--param", "gamma", "--method", "bnb", "--family", "path:3"}).code, cli::kExitUsage);
}

TEST(Cli, HelpMentionsEnvironment) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PIDOM_BRUTE_CAP"), std::string::npos);
  EXPECT_NE(r.out.find("PIDOM_TIME_LIMIT"), std::string::npos);
}

}  // namespace
}  // namespace pidom
