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

#ifndef PIDOM_GRAPH_HPP
#define PIDOM_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pidom {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free subset of the vertices of some graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw std::invalid_argument("VertexSet: duplicate member");
    }
  }

  [[nodiscard]] std::span<const Vertex> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  /// Indicator vector of length n; throws if a member is >= n.
  [[nodiscard]] std::vector<char> mask(std::size_t n) const {
    std::vector<char> in(n, 0);
    for (Vertex v : members_) {
      if (v >= n) throw std::invalid_argument("VertexSet: member out of range");
      in[v] = 1;
    }
    return in;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> init) : EdgeSet(std::vector<Edge>(init)) {}
  explicit EdgeSet(std::vector<Edge> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  [[nodiscard]] std::span<const Edge> members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted. For n <= 64 a bit row per vertex is kept as
/// well so that small-graph predicates reduce to popcounts.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
  /// repeated edges.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u == e.v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
      if (e.v >= n_) throw std::invalid_argument("Graph: endpoint " + std::to_string(e.v) + " out of range");
      if (i > 0 && edges_[i - 1] == e) {
        throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
      }
    }
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    if (n_ <= 64) {
      rows_.assign(n_, 0);
      for (const Edge& e : edges_) {
        rows_[e.u] |= std::uint64_t{1} << e.v;
        rows_[e.v] |= std::uint64_t{1} << e.u;
      }
    }
  }

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    if (!rows_.empty()) return (rows_[a] >> b) & 1U;
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  /// Neighborhood bitmask; only available when order() <= 64.
  [[nodiscard]] std::uint64_t row(Vertex v) const { return rows_.at(v); }
  [[nodiscard]] bool has_rows() const { return !rows_.empty() || n_ == 0; }

  [[nodiscard]] std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
  }
  [[nodiscard]] std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n_);
    for (std::size_t v = 0; v < n_; ++v) d[v] = adj_[v].size();
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> rows_;
};

// ---------------------------------------------------------------------------
// Elementary graphs used throughout the tests and generators.

inline Graph edgeless(std::size_t n) { return Graph(n, {}); }

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

// ---------------------------------------------------------------------------
// Graph algebra. Every operation returns a new graph.

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> e;
  e.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.size());
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (!g.has_edge(i, j)) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

/// Vertices of h are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  for (const Edge& x : h.edges()) e.emplace_back(x.u + shift, x.v + shift);
  return Graph(g.order() + h.order(), std::move(e));
}

/// Disjoint union plus every pair between V(g) and V(h).
inline Graph join(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.order());
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  for (const Edge& x : h.edges()) e.emplace_back(x.u + shift, x.v + shift);
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = 0; b < h.order(); ++b) e.emplace_back(a, b + shift);
  return Graph(g.order() + h.order(), std::move(e));
}

/// Vertex (a, b) is numbered a * h.order() + b.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.order();
  auto id = [nh](Vertex a, Vertex b) { return static_cast<Vertex>(a * nh + b); };
  std::vector<Edge> e;
  for (Vertex a = 0; a < g.order(); ++a)
    for (const Edge& x : h.edges()) e.emplace_back(id(a, x.u), id(a, x.v));
  for (const Edge& x : g.edges())
    for (Vertex b = 0; b < nh; ++b) e.emplace_back(id(x.u, b), id(x.v, b));
  return Graph(g.order() * nh, std::move(e));
}

/// Adds vertex n adjacent only to v. Returns the graph and the new id.
inline std::pair<Graph, Vertex> attach_pendant(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("attach_pendant: vertex " + std::to_string(v) + " out of range");
  const auto fresh = static_cast<Vertex>(g.order());
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  e.emplace_back(v, fresh);
  return {Graph(g.order() + 1, std::move(e)), fresh};
}

/// Induced subgraph on `keep` (relabelled in ascending order).
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index(g.order(), static_cast<Vertex>(-1));
  Vertex next = 0;
  for (Vertex v : keep) {
    if (v >= g.order()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    index[v] = next++;
  }
  std::vector<Edge> e;
  for (const Edge& x : g.edges())
    if (index[x.u] != static_cast<Vertex>(-1) && index[x.v] != static_cast<Vertex>(-1))
      e.emplace_back(index[x.u], index[x.v]);
  return Graph(keep.size(), std::move(e));
}

// ---------------------------------------------------------------------------
// Structural queries.

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline bool is_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

/// Proper 2-coloring (BFS, smallest vertex of each component gets color 0),
/// or nullopt when the graph has an odd cycle.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// ---------------------------------------------------------------------------
// Edge-list text format: "n m" then m lines "u v"; '#' starts a comment.

inline Graph read_edge_list(std::istream& in) {
  std::string text;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line;
    text += '\n';
  }
  std::istringstream tokens(text);
  long long n = 0;
  long long m = 0;
  if (!(tokens >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: bad header, expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(tokens >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (tokens >> extra) throw std::invalid_argument("edge list: trailing data after last edge");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace pidom

#endif  // PIDOM_GRAPH_HPP
