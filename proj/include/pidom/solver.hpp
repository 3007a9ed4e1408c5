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

#ifndef PIDOM_SOLVER_HPP
#define PIDOM_SOLVER_HPP

// Exact solvers.
//
// The *_exact and *_bruteforce functions are definitional enumerations kept
// as oracles; they refuse inputs above a vertex cap. pid_branch_bound is the
// engineered search and has no size limit beyond its budget.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"

namespace pidom {

inline constexpr std::size_t kDefaultBruteForceCap = 14;

enum class SolveStatus {
  kOptimal,
  kBudgetProvedInfeasible,
  kTimeout,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kBudgetProvedInfeasible: return "budget-proved-infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "?";
}

using Witness = std::variant<std::monostate, Labeling, VertexSet, EdgeSet>;

/// For kBudgetProvedInfeasible, value is max_weight + 1 (a proven lower
/// bound) and the witness is empty. For kTimeout, value and witness are the
/// best valid labeling found so far.
struct SolveResult {
  std::size_t value = 0;
  Witness witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  SolveStatus status = SolveStatus::kOptimal;
};

struct SearchBudget {
  std::optional<std::size_t> max_weight;
  std::optional<std::chrono::duration<double>> time_limit;
  std::optional<std::uint64_t> node_limit;
};

class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what_for, std::size_t n, std::size_t cap)
      : std::length_error(what_for + ": order " + std::to_string(n) + " exceeds brute-force cap " +
                          std::to_string(cap)) {}
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline void require_cap(const char* name, const Graph& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded(name, g.order(), cap);
  if (g.order() > 63) throw CapExceeded(name, g.order(), 63);
}

enum class LabelRule { kPerfectItalian, kRoman2, kRoman };

// Odometer over all 3^n labelings in lexicographic order (vertex 0 most
// significant) with incremental neighborhood sums. Returns the first
// minimum-weight labeling accepted by the rule.
inline SolveResult enumerate_labelings(const Graph& g, LabelRule rule) {
  const auto start = Clock::now();
  const std::size_t n = g.order();
  std::vector<std::uint8_t> f(n, 0);
  std::vector<int> sum(n, 0);
  std::vector<int> twos(n, 0);
  std::vector<char> bad(n, 0);
  std::size_t bad_count = 0;
  std::size_t w = 0;

  auto is_bad = [&](Vertex v) {
    if (f[v] != 0) return false;
    switch (rule) {
      case LabelRule::kPerfectItalian: return sum[v] != 2;
      case LabelRule::kRoman2: return sum[v] < 2;
      case LabelRule::kRoman: return twos[v] == 0;
    }
    return true;
  };
  auto refresh = [&](Vertex v) {
    const char b = is_bad(v) ? 1 : 0;
    if (b != bad[v]) {
      bad_count += b ? 1 : std::size_t(-1);
      bad[v] = b;
    }
  };
  auto change = [&](Vertex v, std::uint8_t to) {
    const int delta = int(to) - int(f[v]);
    const int dtwo = (to == 2 ? 1 : 0) - (f[v] == 2 ? 1 : 0);
    w = w + to - f[v];
    f[v] = to;
    for (Vertex u : g.neighbors(v)) {
      sum[u] += delta;
      twos[u] += dtwo;
      refresh(u);
    }
    refresh(v);
  };
  for (Vertex v = 0; v < n; ++v) refresh(v);

  std::size_t best = n + 1;
  std::vector<std::uint8_t> witness;
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (bad_count == 0 && w < best) {
      best = w;
      witness = f;
    }
    // Advance the odometer.
    std::size_t pos = n;
    while (pos > 0 && f[pos - 1] == 2) {
      change(static_cast<Vertex>(pos - 1), 0);
      --pos;
    }
    if (pos == 0) break;
    change(static_cast<Vertex>(pos - 1), static_cast<std::uint8_t>(f[pos - 1] + 1));
  }

  SolveResult r;
  r.value = best;
  r.witness = Labeling(std::move(witness));
  r.nodes_explored = visited;
  r.elapsed = Clock::now() - start;
  r.status = SolveStatus::kOptimal;
  return r;
}

// Smallest subset (by size, then by mask value) accepted by `accept`.
template <typename Accept>
SolveResult enumerate_subsets(const Graph& g, Accept accept) {
  const auto start = Clock::now();
  const std::size_t n = g.order();
  std::uint64_t visited = 0;
  for (std::size_t s = 0; s <= n; ++s) {
    if (s == 0) {
      ++visited;
      if (accept(std::uint64_t{0})) return {0, VertexSet{}, visited, Clock::now() - start, SolveStatus::kOptimal};
      continue;
    }
    std::uint64_t mask = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
      ++visited;
      if (accept(mask)) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
          if ((mask >> v) & 1U) members.push_back(v);
        return {s, VertexSet(std::move(members)), visited, Clock::now() - start, SolveStatus::kOptimal};
      }
      // Next mask with the same popcount (Gosper).
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  throw std::logic_error("enumerate_subsets: no accepted subset");
}

}  // namespace detail

/// Exhaustive minimum over all 3^n labelings; the witness is the
/// lexicographically smallest minimum-weight PID-function.
inline SolveResult pid_bruteforce(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  detail::require_cap("pid_bruteforce", g, cap);
  return detail::enumerate_labelings(g, detail::LabelRule::kPerfectItalian);
}

inline SolveResult roman2_exact(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  detail::require_cap("roman2_exact", g, cap);
  return detail::enumerate_labelings(g, detail::LabelRule::kRoman2);
}

inline SolveResult roman_exact(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  detail::require_cap("roman_exact", g, cap);
  return detail::enumerate_labelings(g, detail::LabelRule::kRoman);
}

/// Domination number; witness is a minimum dominating VertexSet.
inline SolveResult gamma_exact(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  detail::require_cap("gamma_exact", g, cap);
  const std::size_t n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return detail::enumerate_subsets(g, [&](std::uint64_t set) {
    std::uint64_t covered = set;
    for (Vertex v = 0; v < n; ++v)
      if ((set >> v) & 1U) covered |= g.row(v);
    return covered == all;
  });
}

/// Minimum 2-fair dominating set. V itself always qualifies.
inline SolveResult fd2_exact(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  detail::require_cap("fd2_exact", g, cap);
  const std::size_t n = g.order();
  return detail::enumerate_subsets(g, [&](std::uint64_t set) {
    for (Vertex v = 0; v < n; ++v)
      if (!((set >> v) & 1U) && std::popcount(g.row(v) & set) != 2) return false;
    return true;
  });
}

namespace detail {

// Maximum independent set in the edge-conflict graph (edges sharing an
// endpoint or joined by an edge), by include/exclude branching.
class InducedMatchingSearch {
 public:
  explicit InducedMatchingSearch(const Graph& g) : edges_(g.edges().begin(), g.edges().end()) {
    const std::size_t m = edges_.size();
    words_ = (m + 63) / 64;
    conflict_.assign(m, Bits(words_, 0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Edge& a = edges_[i];
        const Edge& b = edges_[j];
        const bool clash = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v || g.has_edge(a.u, b.u) ||
                           g.has_edge(a.u, b.v) || g.has_edge(a.v, b.u) || g.has_edge(a.v, b.v);
        if (clash) {
          set(conflict_[i], j);
          set(conflict_[j], i);
        }
      }
    }
  }

  EdgeSet run() {
    Bits candidates(words_, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) set(candidates, i);
    std::vector<std::size_t> chosen;
    recurse(candidates, chosen);
    std::vector<Edge> out;
    for (std::size_t i : best_) out.push_back(edges_[i]);
    return EdgeSet(std::move(out));
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  using Bits = std::vector<std::uint64_t>;

  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
  static std::size_t count(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  void recurse(const Bits& candidates, std::vector<std::size_t>& chosen) {
    ++nodes_;
    const std::size_t left = count(candidates);
    if (left == 0) {
      if (chosen.size() > best_.size() || best_.empty()) best_ = chosen;
      return;
    }
    if (chosen.size() + left <= best_.size()) return;
    std::size_t pick = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      if (candidates[w]) {
        pick = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates[w]));
        break;
      }
    }
    Bits with = candidates;
    for (std::size_t w = 0; w < words_; ++w) with[w] &= ~conflict_[pick][w];
    with[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
    chosen.push_back(pick);
    recurse(with, chosen);
    chosen.pop_back();
    Bits without = candidates;
    without[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
    recurse(without, chosen);
  }

  std::vector<Edge> edges_;
  std::size_t words_ = 0;
  std::vector<Bits> conflict_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Maximum induced (strong) matching; witness is an EdgeSet.
inline SolveResult max_induced_matching(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  if (g.order() > cap) throw CapExceeded("max_induced_matching", g.order(), cap);
  const auto start = detail::Clock::now();
  detail::InducedMatchingSearch search(g);
  EdgeSet m = search.run();
  SolveResult r;
  r.value = m.size();
  r.witness = std::move(m);
  r.nodes_explored = search.nodes();
  r.elapsed = detail::Clock::now() - start;
  return r;
}

/// Labels the endpoints of a maximum induced matching 0 and all other
/// vertices 1; valid on cubic graphs with weight n - 2 im(g).
inline Labeling cubic_upper_labeling(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  if (!is_regular(g, 3)) throw std::invalid_argument("cubic_upper_labeling: graph is not 3-regular");
  const auto m = std::get<EdgeSet>(max_induced_matching(g, cap).witness);
  Labeling f(g.order(), 1);
  for (const Edge& e : m) {
    f.set(e.u, 0);
    f.set(e.v, 0);
  }
  return f;
}

namespace detail {

// Depth-first search over partial labelings with constraint propagation.
//
// Every vertex v keeps the weight of its assigned neighbors (sum) and the
// number of unassigned neighbors (open). A 0-labeled vertex needs its
// remaining neighbors to contribute exactly 2 - sum; an unassigned vertex may
// only take 0 when sum <= 2 <= sum + 2 * open, and no value larger than the
// residual of any 0-labeled neighbor.
class PidSearch {
 public:
  PidSearch(const Graph& g, std::size_t bound, Clock::time_point deadline, bool timed, std::uint64_t node_limit)
      : g_(g),
        n_(g.order()),
        label_(n_, kUnset),
        sum_(n_, 0),
        open_(n_, 0),
        best_(bound),
        deadline_(deadline),
        timed_(timed),
        node_limit_(node_limit),
        mark_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) open_[v] = static_cast<int>(g.degree(v));
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  /// Searches for labelings of weight < bound. Returns false on budget stop.
  bool run() {
    if (!propagate_all()) return true;
    descend(0);
    return !stopped_;
  }

  [[nodiscard]] std::size_t best() const { return best_; }
  [[nodiscard]] const std::optional<Labeling>& witness() const { return witness_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::int8_t kUnset = -1;

  void assign(Vertex v, int value) {
    label_[v] = static_cast<std::int8_t>(value);
    weight_ += static_cast<std::size_t>(value);
    for (Vertex w : g_.neighbors(v)) {
      sum_[w] += value;
      --open_[w];
      queue_.push_back(w);
    }
    queue_.push_back(v);
    trail_.push_back(v);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Vertex v = trail_.back();
      trail_.pop_back();
      const int value = label_[v];
      for (Vertex w : g_.neighbors(v)) {
        sum_[w] -= value;
        ++open_[w];
      }
      weight_ -= static_cast<std::size_t>(value);
      label_[v] = kUnset;
    }
  }

  [[nodiscard]] bool zero_allowed(Vertex v) const { return sum_[v] <= 2 && sum_[v] + 2 * open_[v] >= 2; }

  // Bitmask over {0,1,2} of values v can still take.
  [[nodiscard]] unsigned domain(Vertex v) const {
    int cap = 2;
    for (Vertex w : g_.neighbors(v))
      if (label_[w] == 0) cap = std::min(cap, 2 - sum_[w]);
    if (cap < 0) return 0;
    unsigned d = zero_allowed(v) ? 1U : 0U;
    if (cap >= 1) d |= 2U;
    if (cap >= 2) d |= 4U;
    return d;
  }

  bool force(Vertex v, int value) {
    if (label_[v] != kUnset) return label_[v] == value;
    if (!((domain(v) >> value) & 1U)) return false;
    assign(v, value);
    return true;
  }

  bool propagate_all() {
    for (Vertex v = 0; v < n_; ++v) queue_.push_back(v);
    return propagate();
  }

  bool propagate() {
    bool ok = true;
    while (ok && !queue_.empty()) {
      const Vertex v = queue_.back();
      queue_.pop_back();
      if (label_[v] == 0) {
        const int need = 2 - sum_[v];
        if (need < 0 || need > 2 * open_[v] || (open_[v] == 0 && need != 0)) {
          ok = false;
        } else if (need == 0 && open_[v] > 0) {
          for (Vertex w : g_.neighbors(v))
            if (label_[w] == kUnset && !force(w, 0)) {
              ok = false;
              break;
            }
        } else if (open_[v] == 1) {
          for (Vertex w : g_.neighbors(v))
            if (label_[w] == kUnset) {
              ok = force(w, need);
              break;
            }
        } else if (need == 1) {
          for (Vertex w : g_.neighbors(v))
            if (label_[w] == kUnset) queue_.push_back(w);
        }
      } else if (label_[v] == kUnset) {
        const unsigned d = domain(v);
        if (d == 0) {
          ok = false;
        } else if ((d & (d - 1)) == 0) {
          assign(v, std::countr_zero(d));
        }
      }
    }
    queue_.clear();
    return ok;
  }

  // Additional weight any completion must still place, from disjoint
  // demand regions: a vertex that cannot be 0 needs weight 1 on itself; a
  // 0-labeled vertex needs its residual on its open neighbors; an open
  // vertex seeing less than 2 needs weight 1 in its open closed
  // neighborhood.
  std::size_t lower_bound() {
    ++stamp_;
    std::size_t lb = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (label_[v] == kUnset && !zero_allowed(v)) {
        ++lb;
        mark_[v] = stamp_;
      }
    }
    auto region_free = [&](Vertex v, bool closed) {
      if (closed && mark_[v] == stamp_) return false;
      for (Vertex w : g_.neighbors(v))
        if (label_[w] == kUnset && mark_[w] == stamp_) return false;
      return true;
    };
    auto claim = [&](Vertex v, bool closed) {
      if (closed) mark_[v] = stamp_;
      for (Vertex w : g_.neighbors(v))
        if (label_[w] == kUnset) mark_[w] = stamp_;
    };
    for (Vertex v = 0; v < n_; ++v) {
      if (label_[v] == 0 && sum_[v] < 2 && region_free(v, false)) {
        lb += static_cast<std::size_t>(2 - sum_[v]);
        claim(v, false);
      }
    }
    for (Vertex v : order_) {
      if (label_[v] == kUnset && sum_[v] < 2 && zero_allowed(v) && region_free(v, true)) {
        ++lb;
        claim(v, true);
      }
    }
    return lb;
  }

  bool out_of_budget() {
    if (stopped_) return true;
    if (node_limit_ && nodes_ >= node_limit_) stopped_ = true;
    if (timed_ && (nodes_ & 255U) == 0 && Clock::now() >= deadline_) stopped_ = true;
    return stopped_;
  }

  void descend(std::size_t cursor) {
    while (cursor < n_ && label_[order_[cursor]] != kUnset) ++cursor;
    if (cursor == n_) {
      if (weight_ < best_) {
        std::vector<std::uint8_t> values(n_);
        for (Vertex v = 0; v < n_; ++v) values[v] = static_cast<std::uint8_t>(label_[v]);
        Labeling f(std::move(values));
        if (!is_pid(g_, f)) throw std::logic_error("PidSearch: propagation accepted an invalid labeling");
        best_ = weight_;
        witness_ = std::move(f);
      }
      return;
    }
    const Vertex v = order_[cursor];
    const unsigned d = domain(v);
    for (int value = 0; value <= 2; ++value) {
      if (!((d >> value) & 1U)) continue;
      ++nodes_;
      if (out_of_budget()) return;
      const std::size_t mark = trail_.size();
      assign(v, value);
      if (propagate() && weight_ + lower_bound() < best_) descend(cursor + 1);
      undo_to(mark);
      if (stopped_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::int8_t> label_;
  std::vector<int> sum_;
  std::vector<int> open_;
  std::vector<Vertex> order_;
  std::vector<Vertex> trail_;
  std::vector<Vertex> queue_;
  std::size_t weight_ = 0;
  std::size_t best_;
  std::optional<Labeling> witness_;
  Clock::time_point deadline_;
  bool timed_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace detail

/// Exact pid by branch and bound, one connected component at a time.
///
/// Without max_weight the incumbent starts at the all-ones labeling. With
/// max_weight = W the search only accepts labelings of weight <= W and
/// reports kBudgetProvedInfeasible when none exists. Stopping on the time or
/// node limit yields kTimeout, never a wrong value.
inline SolveResult pid_branch_bound(const Graph& g, const SearchBudget& budget = {}) {
  const auto start = detail::Clock::now();
  const bool timed = budget.time_limit.has_value();
  const auto deadline =
      timed ? start + std::chrono::duration_cast<detail::Clock::duration>(*budget.time_limit) : start;
  const std::uint64_t node_limit = budget.node_limit.value_or(0);
  const std::size_t n = g.order();

  SolveResult result;
  auto finish = [&](SolveResult r) {
    r.elapsed = detail::Clock::now() - start;
    return r;
  };
  const auto comps = components(g);
  std::vector<Graph> parts;
  std::vector<std::size_t> part_lb;
  parts.reserve(comps.size());
  for (const auto& c : comps) {
    parts.push_back(induced_subgraph(g, c));
    const std::size_t nc = parts.back().order();
    const std::size_t delta = parts.back().max_degree();
    part_lb.push_back((2 * nc + delta + 1) / (delta + 2));
  }
  std::size_t lb_rest = 0;
  for (auto lb : part_lb) lb_rest += lb;

  Labeling combined(n, 1);
  std::size_t total = 0;
  bool timed_out = false;
  const bool bounded = budget.max_weight.has_value();
  const std::size_t cap_weight = budget.max_weight.value_or(n);

  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& part = parts[i];
    const std::size_t nc = part.order();
    lb_rest -= part_lb[i];
    // Exclusive bound for this component: strictly below the incumbent.
    std::size_t bound = nc + 1;
    if (bounded) {
      const std::size_t used = total + lb_rest;
      if (used > cap_weight) {
        result.status = SolveStatus::kBudgetProvedInfeasible;
        result.value = cap_weight + 1;
        return finish(result);
      }
      bound = std::min(bound, cap_weight - used + 1);
    }
    std::size_t remaining_nodes = 0;
    if (node_limit) {
      if (result.nodes_explored >= node_limit) {
        timed_out = true;
        total += nc;
        continue;
      }
      remaining_nodes = node_limit - result.nodes_explored;
    }
    if (timed_out) {
      total += nc;
      continue;
    }
    std::optional<Labeling> witness;
    std::size_t value = nc;
    if (bound > nc) {
      // The all-ones labeling is a valid incumbent.
      witness = Labeling(nc, 1);
      bound = nc;
    }
    detail::PidSearch search(part, bound, deadline, timed, remaining_nodes);
    const bool complete = search.run();
    result.nodes_explored += search.nodes();
    if (search.witness()) {
      witness = search.witness();
      value = search.best();
    }
    if (!complete) timed_out = true;
    if (!witness) {
      if (complete) {
        result.status = SolveStatus::kBudgetProvedInfeasible;
        result.value = cap_weight + 1;
        return finish(result);
      }
      total += nc;  // falls back to all-ones for this component
      continue;
    }
    std::size_t k = 0;
    for (Vertex v : comps[i]) combined.set(v, (*witness)[k++]);
    total += value;
  }

  result.value = total;
  result.witness = combined;
  result.status = timed_out ? SolveStatus::kTimeout : SolveStatus::kOptimal;
  if (!timed_out && bounded && total > cap_weight) {
    result.status = SolveStatus::kBudgetProvedInfeasible;
    result.value = cap_weight + 1;
    result.witness = std::monostate{};
  }
  return finish(result);
}

}  // namespace pidom

#endif  // PIDOM_SOLVER_HPP
