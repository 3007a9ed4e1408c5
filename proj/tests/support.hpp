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

#ifndef PIDOM_TESTS_SUPPORT_HPP
#define PIDOM_TESTS_SUPPORT_HPP

// Reference oracles for the test suites. They share nothing with the library
// beyond Graph::edges(): adjacency is rebuilt as a dense matrix, labelings
// are decoded from a base-3 counter, and every predicate is written out
// from its definition.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pidom/pidom.hpp"

namespace pidom::testing {

// Frozen graph6 strings produced by networkx 3.x (nx.to_graph6_bytes with
// header=False) for the named graphs in natural vertex order.
inline constexpr const char* kNxK1 = "@";
inline constexpr const char* kNxK2 = "A_";
inline constexpr const char* kNxK3 = "Bw";
inline constexpr const char* kNxC5 = "Dhc";
inline constexpr const char* kNxPetersen = "IheA@GUAo";
inline constexpr const char* kNxPath70Prefix = "~?@EhCGGC@";

struct Table1Row {
  int k;
  std::size_t n;
  std::size_t m;
  const char* graph6;
};

inline const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {5, 8, 20, "G}qzp{"},
      {6, 12, 36, "KvyCJlmF_{kN"},
      {7, 24, 84, "WsaCC???Wg_qK@WBGQOVS@woL`aES@pHC[`a[CFBRW?Nq??"},
      {8, 12, 48, "K~~LnNwFy^e~"},
  };
  return rows;
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const Graph& g) {
  Matrix a(g.order(), std::vector<bool>(g.order(), false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

inline int label_at(std::uint64_t code, std::size_t v) {
  for (std::size_t i = 0; i < v; ++i) code /= 3;
  return static_cast<int>(code % 3);
}

inline std::vector<int> decode_labels(std::uint64_t code, std::size_t n) {
  std::vector<int> f(n);
  for (std::size_t v = 0; v < n; ++v) {
    f[v] = static_cast<int>(code % 3);
    code /= 3;
  }
  return f;
}

enum class Rule { kPid, kRoman2, kRoman };

inline bool accepts(const Matrix& a, const std::vector<int>& f, Rule rule) {
  const std::size_t n = f.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (f[v] != 0) continue;
    int sum = 0;
    bool has_two = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!a[v][u]) continue;
      sum += f[u];
      has_two = has_two || f[u] == 2;
    }
    if (rule == Rule::kPid && sum != 2) return false;
    if (rule == Rule::kRoman2 && sum < 2) return false;
    if (rule == Rule::kRoman && !has_two) return false;
  }
  return true;
}

inline std::size_t oracle_labeling_min(const Graph& g, Rule rule) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::size_t best = 2 * n + 1;
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto f = decode_labels(code, n);
    std::size_t w = 0;
    for (int x : f) w += static_cast<std::size_t>(x);
    if (w < best && accepts(a, f, rule)) best = w;
  }
  return best;
}

inline std::size_t oracle_pid(const Graph& g) { return oracle_labeling_min(g, Rule::kPid); }
inline std::size_t oracle_roman2(const Graph& g) { return oracle_labeling_min(g, Rule::kRoman2); }
inline std::size_t oracle_roman(const Graph& g) { return oracle_labeling_min(g, Rule::kRoman); }

// Smallest |S| over subsets accepted by `ok(mask)`.
inline std::size_t oracle_subset_min(std::size_t n, const std::function<bool(std::uint64_t)>& ok) {
  std::size_t best = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < best && ok(mask)) best = size;
  }
  return best;
}

inline std::size_t oracle_gamma(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.order();
  return oracle_subset_min(n, [&](std::uint64_t s) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      bool seen = false;
      for (std::size_t u = 0; u < n; ++u) seen = seen || (a[v][u] && ((s >> u) & 1U));
      if (!seen) return false;
    }
    return true;
  });
}

inline std::size_t oracle_fd2(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.order();
  return oracle_subset_min(n, [&](std::uint64_t s) {
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v) & 1U) continue;
      int count = 0;
      for (std::size_t u = 0; u < n; ++u) count += (a[v][u] && ((s >> u) & 1U)) ? 1 : 0;
      if (count != 2) return false;
    }
    return true;
  });
}

// Maximum induced matching by include/skip recursion over the edge list.
inline std::size_t oracle_im(const Graph& g) {
  const Matrix a = adjacency(g);
  const auto& edges = g.edges();
  std::vector<Edge> chosen;
  std::size_t best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (chosen.size() + (edges.size() - i) <= best) return;
    if (i == edges.size()) {
      best = chosen.size();
      return;
    }
    const Edge e = edges[i];
    bool compatible = true;
    for (const Edge& c : chosen) {
      for (Vertex x : {e.u, e.v})
        for (Vertex y : {c.u, c.v}) compatible = compatible && x != y && !a[x][y];
    }
    if (compatible) {
      chosen.push_back(e);
      go(i + 1);
      chosen.pop_back();
    }
    go(i + 1);
  };
  go(0);
  return best;
}

inline bool oracle_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  const Matrix a = adjacency(g);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u)
      if (a[v][u] && !seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

// Random spanning tree plus independent extra edges with probability p.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    const std::size_t u = pick(rng);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    present[u][v] = true;
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!present[u][v] && coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, std::move(edges));
}

// Graph on n vertices whose edge set is given by the bits of `mask` over the
// pairs in graph6 order (0,1), (0,2), (1,2), (0,3), ...
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, std::move(edges));
}

// Every generator instance with order at most max_n (jewel, kc, split and
// fish included when they fit).
inline std::vector<FamilySpec> family_specs(std::size_t max_n) {
  std::vector<FamilySpec> out;
  auto keep = [&](const FamilySpec& s) {
    if (family_order(s) <= max_n) out.push_back(s);
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    keep(FamilySpec::path(n));
    keep(FamilySpec::complete(n));
    if (n >= 3) keep(FamilySpec::cycle(n));
    if (n >= 2) keep(FamilySpec::star(n));
    if (n >= 4) keep(FamilySpec::wheel(n));
  }
  for (std::size_t a = 1; a <= max_n; ++a)
    for (std::size_t b = a; a + b <= max_n; ++b) {
      keep(FamilySpec::multipartite({a, b}));
      for (std::size_t c = b; a + b + c <= max_n; ++c) keep(FamilySpec::multipartite({a, b, c}));
    }
  for (const char* bits : {"01", "001", "0101", "0011", "00101", "011", "0001", "010101", "0010", "00011", "0100111"})
    keep(FamilySpec::threshold(bits));
  for (std::size_t l = 1; l <= 6; ++l) keep(FamilySpec::jewel(l));
  keep(FamilySpec::kc(3, 2, 5, 1));
  for (std::size_t l = 6; l <= 12; ++l) keep(FamilySpec::split(l));
  for (std::size_t l = 1; l <= 6; ++l) keep(FamilySpec::fish(l));
  return out;
}

inline Graph hypercube3() {
  const Graph k2 = complete_graph(2);
  return cartesian_product(cartesian_product(k2, k2), k2);
}

inline Graph prism3() { return cartesian_product(complete_graph(3), complete_graph(2)); }

}  // namespace pidom::testing

#endif  // PIDOM_TESTS_SUPPORT_HPP
