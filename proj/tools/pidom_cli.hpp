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

#ifndef PIDOM_TOOLS_PIDOM_CLI_HPP
#define PIDOM_TOOLS_PIDOM_CLI_HPP

// Command-line front end. run() is the whole program; main() only forwards
// argv so the tests can drive it in-process.
//
// Exit codes: 0 success, 1 assertion or verification failure, 2 usage or
// input error, 3 budget exhausted.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pidom/pidom.hpp"

namespace pidom::cli {

inline constexpr const char* kVersion = "pidom 0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

using nlohmann::ordered_json;

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t env_size(const char* name, std::size_t fallback) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("environment variable ") + name + " is not a non-negative integer");
    }
  }
  return fallback;
}

inline std::optional<double> env_seconds(const char* name) {
  if (const char* v = std::getenv(name); v != nullptr && *v != '\0') {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("environment variable ") + name + " is not a number");
    }
  }
  return std::nullopt;
}

struct GraphInput {
  std::string graph6;
  std::string edges_file;
  std::string family;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--graph6", graph6, "graph in graph6 format");
    auto* b = cmd->add_option("--edges", edges_file, "edge-list file (\"n m\" then m lines \"u v\")");
    auto* c = cmd->add_option("--family", family, "family spec, e.g. cycle:9, jewel:3, kc:3,2,5,1");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  [[nodiscard]] bool given() const { return !graph6.empty() || !edges_file.empty() || !family.empty(); }

  [[nodiscard]] std::optional<FamilySpec> spec() const {
    if (family.empty()) return std::nullopt;
    return parse_family_spec(family);
  }

  [[nodiscard]] Graph load() const {
    if (!graph6.empty()) return decode_graph6(graph6);
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) throw UsageError("cannot open edge-list file " + edges_file);
      return read_edge_list(in);
    }
    if (!family.empty()) return make(parse_family_spec(family));
    throw UsageError("one of --graph6, --edges, --family is required");
  }

  [[nodiscard]] ordered_json describe(const Graph& g) const {
    ordered_json j;
    if (!graph6.empty()) {
      j["source"] = "graph6";
      j["value"] = graph6;
    } else if (!edges_file.empty()) {
      j["source"] = "edges";
      j["value"] = edges_file;
    } else {
      j["source"] = "family";
      j["value"] = family;
    }
    j["n"] = g.order();
    j["m"] = g.size();
    return j;
  }
};

struct BudgetFlags {
  std::optional<std::size_t> max_weight;
  std::optional<double> time_limit;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::size_t> cap;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-weight", max_weight, "decide pid <= W");
    cmd->add_option("--time-limit", time_limit, "search time limit in seconds");
    cmd->add_option("--node-limit", node_limit, "search node limit");
    cmd->add_option("--cap", cap, "brute-force vertex cap");
  }

  [[nodiscard]] SearchBudget budget() const {
    SearchBudget b;
    b.max_weight = max_weight;
    if (auto t = time_limit ? time_limit : env_seconds("PIDOM_TIME_LIMIT")) b.time_limit = std::chrono::duration<double>(*t);
    b.node_limit = node_limit;
    return b;
  }

  [[nodiscard]] std::size_t brute_cap() const { return cap.value_or(env_size("PIDOM_BRUTE_CAP", kDefaultBruteForceCap)); }
};

inline double millis(std::chrono::nanoseconds d) { return static_cast<double>(d.count()) / 1e6; }

inline ordered_json witness_json(const Witness& w) {
  if (const auto* f = std::get_if<Labeling>(&w)) return format_labeling(*f);
  if (const auto* s = std::get_if<VertexSet>(&w)) {
    ordered_json a = ordered_json::array();
    for (Vertex v : *s) a.push_back(v);
    return a;
  }
  if (const auto* m = std::get_if<EdgeSet>(&w)) {
    ordered_json a = ordered_json::array();
    for (const Edge& e : *m) a.push_back({e.u, e.v});
    return a;
  }
  return nullptr;
}

inline ordered_json result_json(const std::string& parameter, const SolveResult& r, const std::string& method) {
  ordered_json j;
  j["parameter"] = parameter;
  j["value"] = r.value;
  j["witness"] = witness_json(r.witness);
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes_explored;
  j["reason"] = method;
  j["millis"] = millis(r.elapsed);
  return j;
}

inline ordered_json report(const std::string& command) {
  ordered_json j;
  j["version"] = kVersion;
  j["command"] = command;
  return j;
}

inline ordered_json verdict_json(const Verdict& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v.violations) a.push_back({{"vertex", x.vertex}, {"observed", x.observed}});
  return a;
}

// pid by the requested method; "auto" picks brute force up to the cap.
inline SolveResult solve_pid(const Graph& g, const std::string& method, const BudgetFlags& flags, std::string& used) {
  const std::size_t cap = flags.brute_cap();
  const bool brute = method == "brute" || (method == "auto" && g.order() <= cap && !flags.max_weight &&
                                            !flags.time_limit && !flags.node_limit);
  if (brute) {
    used = "bruteforce";
    return pid_bruteforce(g, cap);
  }
  used = "branch-and-bound";
  return pid_branch_bound(g, flags.budget());
}

inline int cmd_solve(const std::string& param, const std::string& method, const GraphInput& input,
                     const BudgetFlags& flags, std::ostream& out) {
  const Graph g = input.load();
  const std::size_t cap = flags.brute_cap();
  SolveResult r;
  std::string used = "bruteforce";
  if (param == "pid") {
    r = solve_pid(g, method, flags, used);
  } else {
    if (method == "bnb") throw UsageError("--method bnb is only available for --param pid");
    if (param == "gamma") r = gamma_exact(g, cap);
    else if (param == "roman") r = roman_exact(g, cap);
    else if (param == "roman2") r = roman2_exact(g, cap);
    else if (param == "fd2") r = fd2_exact(g, cap);
    else if (param == "im") {
      r = max_induced_matching(g, cap);
      used = "branch";
    } else {
      throw UsageError("unknown parameter " + param);
    }
  }
  ordered_json j = report("solve");
  j["input"] = input.describe(g);
  j["results"] = ordered_json::array({result_json(param, r, used)});
  out << j.dump(2) << '\n';
  return r.status == SolveStatus::kTimeout ? kExitBudget : kExitOk;
}

inline int cmd_verify(const std::string& labeling, const std::string& check, const GraphInput& input,
                      std::ostream& out) {
  const Graph g = input.load();
  const Labeling f = parse_labeling(labeling);
  if (f.size() != g.order()) {
    throw UsageError("labeling has " + std::to_string(f.size()) + " entries, graph has " +
                     std::to_string(g.order()) + " vertices");
  }
  Verdict v;
  if (check == "pid") v = check_pid(g, f);
  else if (check == "roman") v = check_roman(g, f);
  else if (check == "roman2") v = check_roman2(g, f);
  else throw UsageError("unknown check " + check);
  ordered_json j = report("verify");
  j["input"] = input.describe(g);
  ordered_json r;
  r["parameter"] = check;
  r["ok"] = v.ok();
  r["weight"] = weight(f);
  r["witness"] = format_labeling(f);
  r["violations"] = verdict_json(v);
  j["results"] = ordered_json::array({r});
  out << j.dump(2) << '\n';
  return v.ok() ? kExitOk : kExitFailure;
}

inline int cmd_generate(const std::string& family, const std::string& format, std::ostream& out) {
  const Graph g = make(parse_family_spec(family));
  if (format == "graph6") {
    out << encode_graph6(g) << '\n';
  } else if (format == "edges") {
    write_edge_list(out, g);
  } else {
    throw UsageError("unknown output format " + format);
  }
  return kExitOk;
}

inline ordered_json characterization_json(const std::string& rule_group, const CharacterizationResult& c) {
  ordered_json j;
  j["parameter"] = "pid";
  j["rule"] = rule_group;
  j["conclusion"] = to_string(c.conclusion);
  j["value"] = c.value;
  if (const auto* f = std::get_if<Labeling>(&c.witness)) j["witness"] = format_labeling(*f);
  else if (const auto* s = std::get_if<VertexSet>(&c.witness)) j["witness"] = witness_json(*s);
  else j["witness"] = nullptr;
  j["reason"] = c.reason;
  return j;
}

inline int cmd_characterize(const GraphInput& input, const BudgetFlags& flags, std::ostream& out) {
  const Graph g = input.load();
  ordered_json j = report("characterize");
  j["input"] = input.describe(g);
  ordered_json results = ordered_json::array();

  std::size_t lower = 0;
  std::size_t upper = g.order();
  std::string lower_reason = "bound-trivial";
  std::string upper_reason = "bound-trivial";
  std::optional<CharacterizationResult> exact;

  auto absorb = [&](const CharacterizationResult& c) {
    if (c.conclusion == Conclusion::kPidEquals && !exact) exact = c;
    if (c.conclusion == Conclusion::kPidAtLeast && c.value > lower) {
      lower = c.value;
      lower_reason = c.reason;
    }
  };

  if (auto spec = input.spec()) {
    const auto c = closed_form(*spec);
    results.push_back(characterization_json("closed_form", c));
    absorb(c);
  }
  if (g.order() >= 2 && is_connected(g)) {
    const auto c2 = test_pid2(g);
    results.push_back(characterization_json("test_pid2", c2));
    absorb(c2);
    if (c2.conclusion != Conclusion::kPidEquals) {
      const auto c3 = test_pid3(g);
      results.push_back(characterization_json("test_pid3", c3));
      absorb(c3);
    }
  }
  if (is_connected(g)) {
    const Bounds b = bounds(g, flags.brute_cap());
    ordered_json bj;
    bj["parameter"] = "pid";
    bj["rule"] = "bounds";
    bj["lower"] = b.lower;
    bj["upper"] = b.upper;
    bj["lower_reason"] = b.lower_reason;
    bj["upper_reason"] = b.upper_reason;
    results.push_back(bj);
    if (b.lower > lower) {
      lower = b.lower;
      lower_reason = b.lower_reason;
    }
    if (b.upper < upper) {
      upper = b.upper;
      upper_reason = b.upper_reason;
    }
  }
  j["results"] = results;

  ordered_json conclusion;
  if (exact) {
    conclusion["conclusion"] = "pid-equals";
    conclusion["value"] = exact->value;
    conclusion["reason"] = exact->reason;
  } else if (lower == upper) {
    conclusion["conclusion"] = "pid-equals";
    conclusion["value"] = lower;
    conclusion["reason"] = lower_reason + "+" + upper_reason;
  } else {
    conclusion["conclusion"] = "pid-between";
    conclusion["lower"] = lower;
    conclusion["upper"] = upper;
    conclusion["reason"] = lower_reason + "+" + upper_reason;
  }
  j["conclusion"] = conclusion;
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_reduce(const std::string& file, const std::string& target, std::optional<std::size_t> k,
                      std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open X3C file " + file);
  const X3CInstance inst = read_x3c(in);
  ReductionOutput red;
  if (target == "pid") {
    if (k) throw UsageError("--k only applies to --target roman2");
    red = reduce_x3c(inst);
  } else if (target == "roman2") {
    red = reduce_x3c_roman2(inst, k);
  } else {
    throw UsageError("unknown reduction target " + target);
  }
  ordered_json j = report("reduce");
  j["input"] = {{"source", "x3c"}, {"value", file}, {"q", inst.q}, {"t", inst.triples.size()}};
  ordered_json r;
  r["target"] = target;
  r["n"] = red.graph.order();
  r["m"] = red.graph.size();
  r["k"] = red.k ? ordered_json(*red.k) : ordered_json(nullptr);
  r["bipartite"] = is_bipartite(red.graph);
  r["graph6"] = encode_graph6(red.graph);
  ordered_json roles = ordered_json::array();
  for (std::size_t v = 0; v < red.roles.size(); ++v)
    roles.push_back({{"vertex", v}, {"role", to_string(red.roles[v].kind)}, {"owner", red.roles[v].owner}});
  r["roles"] = roles;
  j["results"] = ordered_json::array({r});
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline int cmd_corpus(const std::string& file, bool assert_pid_n, bool assert_cubic, const BudgetFlags& flags,
                      std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open corpus file " + file);
  const std::size_t cap = flags.brute_cap();
  ordered_json j = report("corpus");
  j["input"] = {{"source", "corpus"}, {"value", file}};
  ordered_json results = ordered_json::array();
  bool failed = false;
  bool inconclusive = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    ordered_json r;
    r["line"] = line_no;
    r["graph6"] = line;
    Graph g;
    try {
      g = decode_graph6(line);
    } catch (const Graph6Error& e) {
      r["error"] = e.what();
      r["ok"] = false;
      failed = true;
      results.push_back(r);
      continue;
    }
    const std::size_t n = g.order();
    r["n"] = n;
    r["m"] = g.size();
    r["regular_degree"] = (n > 0 && is_regular(g, g.degree(0))) ? ordered_json(g.degree(0)) : ordered_json(nullptr);

    SolveResult s;
    std::string used;
    if (n <= cap && !flags.max_weight && !flags.time_limit && !flags.node_limit) {
      s = pid_bruteforce(g, cap);
      used = "bruteforce";
    } else {
      SearchBudget b = flags.budget();
      if (assert_pid_n && !b.max_weight && n > 0) b.max_weight = n - 1;
      s = pid_branch_bound(g, b);
      used = "branch-and-bound";
    }
    r["pid"] = result_json("pid", s, used);
    bool ok = true;
    if (s.status == SolveStatus::kTimeout) inconclusive = true;

    ordered_json checks;
    if (assert_pid_n) {
      if (s.status == SolveStatus::kTimeout) {
        checks["pid_equals_n"] = "inconclusive";
      } else {
        const bool pass = s.value == n;
        checks["pid_equals_n"] = pass;
        ok = ok && pass;
      }
    }
    if (assert_cubic) {
      if (!is_regular(g, 3) || !is_connected(g)) {
        checks["cubic_bounds"] = "skipped";
      } else if (s.status != SolveStatus::kOptimal) {
        checks["cubic_bounds"] = "inconclusive";
      } else {
        const std::size_t im = max_induced_matching(g, std::max(cap, n)).value;
        const Labeling upper = cubic_upper_labeling(g, std::max(cap, n));
        const std::size_t lo = (2 * n + 4) / 5;
        const bool pass = lo <= s.value && s.value <= n - 2 * im && n - 2 * im <= (2 * n) / 3 &&
                          check_pid(g, upper).ok() && weight(upper) == n - 2 * im;
        checks["cubic_bounds"] = pass;
        checks["im"] = im;
        ok = ok && pass;
      }
    }
    if (const auto* f = std::get_if<Labeling>(&s.witness); f && s.status == SolveStatus::kOptimal) {
      ok = ok && check_pid(g, *f).ok();
    }
    r["checks"] = checks;
    r["ok"] = ok;
    failed = failed || !ok;
    results.push_back(r);
  }
  j["results"] = results;
  out << j.dump(2) << '\n';
  if (failed) return kExitFailure;
  return inconclusive ? kExitBudget : kExitOk;
}

}  // namespace detail

/// Runs the tool on `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Exact perfect Italian domination toolkit", "pidom"};
  app.footer(
      "Environment:\n"
      "  PIDOM_BRUTE_CAP   default brute-force vertex cap (14)\n"
      "  PIDOM_TIME_LIMIT  default search time limit in seconds (none)\n"
      "Exit codes: 0 ok, 1 assertion/verification failure, 2 usage error, 3 budget exhausted");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string param = "pid";
  std::string method = "auto";
  GraphInput solve_input;
  BudgetFlags solve_budget;
  auto* solve = app.add_subcommand("solve", "compute pid, gamma, roman, roman2, fd2 or im exactly");
  solve->add_option("--param", param, "parameter")->check(CLI::IsMember({"pid", "gamma", "roman", "roman2", "fd2", "im"}));
  solve->add_option("--method", method, "brute, bnb or auto")->check(CLI::IsMember({"brute", "bnb", "auto"}));
  solve_input.add_to(solve);
  solve_budget.add_to(solve);

  std::string labeling;
  std::string check = "pid";
  GraphInput verify_input;
  auto* verify = app.add_subcommand("verify", "check a labeling");
  verify->add_option("--labeling", labeling, "comma-separated labels, e.g. 1,0,1")->required();
  verify->add_option("--check", check, "pid, roman or roman2")->check(CLI::IsMember({"pid", "roman", "roman2"}));
  verify_input.add_to(verify);

  std::string gen_family;
  std::string gen_format = "graph6";
  auto* generate = app.add_subcommand("generate", "print a family member");
  generate->add_option("--family", gen_family, "family spec")->required();
  generate->add_option("--out", gen_format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));

  GraphInput char_input;
  BudgetFlags char_budget;
  auto* characterize = app.add_subcommand("characterize", "closed forms, pid = 2 / pid = 3 tests and bounds");
  char_input.add_to(characterize);
  characterize->add_option("--cap", char_budget.cap, "matching vertex cap for the cubic upper bound");

  std::string x3c_file;
  std::string target = "pid";
  std::optional<std::size_t> target_k;
  auto* reduce = app.add_subcommand("reduce", "build the reduction graph of an X3C instance");
  reduce->add_option("--x3c", x3c_file, "X3C instance file")->required();
  reduce->add_option("--target", target, "pid or roman2")->check(CLI::IsMember({"pid", "roman2"}));
  reduce->add_option("--k", target_k, "target weight recorded for roman2");

  std::string corpus_file;
  bool assert_pid_n = false;
  bool assert_cubic = false;
  BudgetFlags corpus_budget;
  auto* corpus = app.add_subcommand("corpus", "solve every graph6 line of a file");
  corpus->add_option("--file", corpus_file, "graph6 corpus, one graph per line")->required();
  corpus->add_flag("--assert-pid-equals-n", assert_pid_n, "fail unless pid = n");
  corpus->add_flag("--assert-cubic-bounds", assert_cubic, "check the cubic sandwich on cubic lines");
  corpus_budget.add_to(corpus);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      if (!solve_input.given()) throw UsageError("solve: one of --graph6, --edges, --family is required");
      return cmd_solve(param, method, solve_input, solve_budget, out);
    }
    if (*verify) {
      if (!verify_input.given()) throw UsageError("verify: one of --graph6, --edges, --family is required");
      return cmd_verify(labeling, check, verify_input, out);
    }
    if (*generate) return cmd_generate(gen_family, gen_format, out);
    if (*characterize) {
      if (!char_input.given()) throw UsageError("characterize: one of --graph6, --edges, --family is required");
      return cmd_characterize(char_input, char_budget, out);
    }
    if (*reduce) return cmd_reduce(x3c_file, target, target_k, out);
    if (*corpus) return cmd_corpus(corpus_file, assert_pid_n, assert_cubic, corpus_budget, out);
  } catch (const std::exception& e) {
    err << "pidom: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pidom::cli

#endif  // PIDOM_TOOLS_PIDOM_CLI_HPP
