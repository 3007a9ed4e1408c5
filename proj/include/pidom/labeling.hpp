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

#ifndef PIDOM_LABELING_HPP
#define PIDOM_LABELING_HPP

// Ground-truth predicates for the labeling and vertex-set conditions. Every
// solver witness is re-checked through these.

#include <bit>
#include <initializer_list>
#include <span>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pidom/graph.hpp"

namespace pidom {

/// Vertex labeling with values in {0,1,2}, indexed by vertex id.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::size_t n, std::uint8_t fill = 0) : values_(n, fill) { check_range(); }
  explicit Labeling(std::vector<std::uint8_t> values) : values_(std::move(values)) { check_range(); }
  Labeling(std::initializer_list<int> init) {
    values_.reserve(init.size());
    for (int v : init) values_.push_back(static_cast<std::uint8_t>(v < 0 ? 255 : v));
    check_range();
  }

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] int operator[](std::size_t v) const { return values_[v]; }
  [[nodiscard]] std::span<const std::uint8_t> values() const { return values_; }

  void set(std::size_t v, int value) {
    if (value < 0 || value > 2) throw std::invalid_argument("Labeling: value outside {0,1,2}");
    values_.at(v) = static_cast<std::uint8_t>(value);
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;
  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  void check_range() const {
    for (auto v : values_)
      if (v > 2) throw std::invalid_argument("Labeling: value outside {0,1,2}");
  }

  std::vector<std::uint8_t> values_;
};

inline std::size_t weight(const Labeling& f) {
  std::size_t w = 0;
  for (auto v : f.values()) w += v;
  return w;
}

/// "1,0,1" form.
inline std::string format_labeling(const Labeling& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ',';
    out += static_cast<char>('0' + f[i]);
  }
  return out;
}

inline Labeling parse_labeling(std::string_view text) {
  std::vector<std::uint8_t> values;
  bool expect_digit = true;
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    if (expect_digit) {
      if (c < '0' || c > '2') throw std::invalid_argument(std::string("labeling: expected 0, 1 or 2, got '") + c + "'");
      values.push_back(static_cast<std::uint8_t>(c - '0'));
      expect_digit = false;
    } else {
      if (c != ',') throw std::invalid_argument("labeling: expected ','");
      expect_digit = true;
    }
  }
  if (expect_digit && !values.empty()) throw std::invalid_argument("labeling: trailing ','");
  return Labeling(std::move(values));
}

/// One failing vertex and the quantity observed there (neighborhood weight,
/// neighbor count in the set, or for matchings the conflicting vertex).
struct Violation {
  Vertex vertex = 0;
  long observed = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

namespace detail {

inline void require_same_order(const Graph& g, const Labeling& f) {
  if (f.size() != g.order()) {
    throw std::invalid_argument("labeling has length " + std::to_string(f.size()) + ", graph has order " +
                                std::to_string(g.order()));
  }
}

inline long neighborhood_weight(const Graph& g, const Labeling& f, Vertex v) {
  long s = 0;
  for (Vertex w : g.neighbors(v)) s += f[w];
  return s;
}

template <typename Accept>
Verdict check_zero_vertices(const Graph& g, const Labeling& f, Accept accept) {
  require_same_order(g, f);
  Verdict verdict;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] != 0) continue;
    if (!accept(v)) verdict.violations.push_back({v, neighborhood_weight(g, f, v)});
  }
  return verdict;
}

}  // namespace detail

/// Every 0-labeled vertex has neighborhood weight exactly 2.
inline Verdict check_pid(const Graph& g, const Labeling& f) {
  return detail::check_zero_vertices(g, f, [&](Vertex v) { return detail::neighborhood_weight(g, f, v) == 2; });
}

/// Every 0-labeled vertex has neighborhood weight at least 2.
inline Verdict check_roman2(const Graph& g, const Labeling& f) {
  return detail::check_zero_vertices(g, f, [&](Vertex v) { return detail::neighborhood_weight(g, f, v) >= 2; });
}

/// Every 0-labeled vertex has a neighbor labeled 2.
inline Verdict check_roman(const Graph& g, const Labeling& f) {
  return detail::check_zero_vertices(g, f, [&](Vertex v) {
    for (Vertex w : g.neighbors(v))
      if (f[w] == 2) return true;
    return false;
  });
}

/// Boolean fast path of check_pid without allocation.
inline bool is_pid(const Graph& g, const Labeling& f) {
  detail::require_same_order(g, f);
  for (Vertex v = 0; v < g.order(); ++v)
    if (f[v] == 0 && detail::neighborhood_weight(g, f, v) != 2) return false;
  return true;
}

/// Every vertex outside s has exactly k neighbors in s. For k >= 1 this
/// implies s dominates g.
inline Verdict check_k_fair(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw std::invalid_argument("check_k_fair: k must be >= 1");
  const auto in = s.mask(g.order());
  Verdict verdict;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    long count = 0;
    for (Vertex w : g.neighbors(v)) count += in[w];
    if (count != k) verdict.violations.push_back({v, count});
  }
  return verdict;
}

/// Boolean form of check_k_fair; uses adjacency bit rows when available.
inline bool is_k_fair(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw std::invalid_argument("is_k_fair: k must be >= 1");
  if (g.order() <= 64) {
    std::uint64_t set = 0;
    for (Vertex v : s) {
      if (v >= g.order()) throw std::invalid_argument("VertexSet: member out of range");
      set |= std::uint64_t{1} << v;
    }
    for (Vertex v = 0; v < g.order(); ++v)
      if (!((set >> v) & 1U) && std::popcount(g.row(v) & set) != k) return false;
    return true;
  }
  return check_k_fair(g, s, k).ok();
}

inline Verdict check_perfect_dominating(const Graph& g, const VertexSet& s) { return check_k_fair(g, s, 1); }

/// Edges of m are pairwise disjoint and no edge of g joins two of them.
inline Verdict check_induced_matching(const Graph& g, const EdgeSet& m) {
  std::vector<long> owner(g.order(), -1);
  Verdict verdict;
  long index = 0;
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("check_induced_matching: {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} is not an edge");
    }
    for (Vertex end : {e.u, e.v}) {
      if (owner[end] >= 0) verdict.violations.push_back({end, end});
      owner[end] = index;
    }
    ++index;
  }
  for (const Edge& e : g.edges()) {
    if (owner[e.u] >= 0 && owner[e.v] >= 0 && owner[e.u] != owner[e.v]) verdict.violations.push_back({e.u, e.v});
  }
  return verdict;
}

enum class Satisfaction {
  kOutSatisfied,
  kInSatisfied,
  kMixed,
  kUnsatisfied,
  kNotZero,
};

inline const char* to_string(Satisfaction s) {
  switch (s) {
    case Satisfaction::kOutSatisfied: return "out-satisfied";
    case Satisfaction::kInSatisfied: return "in-satisfied";
    case Satisfaction::kMixed: return "mixed";
    case Satisfaction::kUnsatisfied: return "unsatisfied";
    case Satisfaction::kNotZero: return "not-zero";
  }
  return "?";
}

/// Where the neighborhood weight of a 0-labeled vertex v comes from,
/// relative to the vertex set `inside`.
inline Satisfaction satisfaction(const Graph& g, const Labeling& f, Vertex v, const VertexSet& inside) {
  detail::require_same_order(g, f);
  if (v >= g.order()) throw std::out_of_range("satisfaction: vertex " + std::to_string(v) + " out of range");
  if (f[v] != 0) return Satisfaction::kNotZero;
  const auto in = inside.mask(g.order());
  long in_sum = 0;
  long out_sum = 0;
  for (Vertex w : g.neighbors(v)) (in[w] ? in_sum : out_sum) += f[w];
  if (in_sum + out_sum != 2) return Satisfaction::kUnsatisfied;
  if (in_sum == 0) return Satisfaction::kOutSatisfied;
  if (out_sum == 0) return Satisfaction::kInSatisfied;
  return Satisfaction::kMixed;
}

/// Labeling with 1 on s and 0 elsewhere.
inline Labeling indicator(std::size_t n, const VertexSet& s) {
  Labeling f(n);
  for (Vertex v : s) f.set(v, 1);
  return f;
}

}  // namespace pidom

#endif  // PIDOM_LABELING_HPP
