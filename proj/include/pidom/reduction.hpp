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

#ifndef PIDOM_REDUCTION_HPP
#define PIDOM_REDUCTION_HPP

// Exact cover by 3-sets -> perfect Italian domination.
//
// Layout of reduce_x3c output (q, t from the instance, k = 6q + 2t):
//   0 .. 3q-1                 element anchors x_1 .. x_3q
//   3q .. 3q+t-1              set vertices c_1 .. c_t
//   then per element i        y_i, M_i (k vertices), T_i (k vertices)
//   then per set j            c'_j, c''_j
//
// Every anchor x_i doubles as the x vertex of its own fish gadget F_k.

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"

namespace pidom {

class ReductionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ground set {1..3q} and an ordered family of 3-element subsets.
struct X3CInstance {
  std::size_t q = 0;
  std::vector<std::array<std::size_t, 3>> triples;

  void validate() const {
    if (q == 0) throw ReductionError("x3c: q must be positive");
    if (triples.empty()) throw ReductionError("x3c: at least one triple required");
    for (const auto& tr : triples) {
      for (std::size_t e : tr)
        if (e < 1 || e > 3 * q) throw ReductionError("x3c: element " + std::to_string(e) + " outside 1..3q");
      if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2]) throw ReductionError("x3c: triple repeats an element");
    }
  }
};

/// Indices into X3CInstance::triples, sorted.
struct Cover {
  std::vector<std::size_t> indices;

  friend bool operator==(const Cover&, const Cover&) = default;
};

inline bool is_exact_cover(const X3CInstance& inst, const Cover& cover) {
  std::vector<int> hits(3 * inst.q + 1, 0);
  for (std::size_t j : cover.indices) {
    if (j >= inst.triples.size()) return false;
    for (std::size_t e : inst.triples[j]) ++hits[e];
  }
  return std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
}

enum class RoleKind {
  kElementAnchor,
  kSetVertex,
  kSetPendant,
  kFishY,
  kFishM,
  kFishT,
  kGadgetPath,
  kGadgetCycle,
};

inline const char* to_string(RoleKind r) {
  switch (r) {
    case RoleKind::kElementAnchor: return "element-anchor";
    case RoleKind::kSetVertex: return "set-vertex";
    case RoleKind::kSetPendant: return "set-pendant";
    case RoleKind::kFishY: return "fish-y";
    case RoleKind::kFishM: return "fish-M";
    case RoleKind::kFishT: return "fish-T";
    case RoleKind::kGadgetPath: return "gadget-path";
    case RoleKind::kGadgetCycle: return "gadget-cycle";
  }
  return "?";
}

/// `owner` is the 1-based element for element/fish roles and the 0-based
/// triple index for set/gadget roles.
struct Role {
  RoleKind kind = RoleKind::kElementAnchor;
  std::size_t owner = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

struct ReductionOutput {
  Graph graph;
  std::optional<std::size_t> k;
  std::vector<Role> roles;
  X3CInstance instance;

  std::vector<Vertex> element_anchor;                // by element - 1
  std::vector<Vertex> set_vertex;                    // by triple index
  std::vector<std::array<Vertex, 2>> set_pendants;   // by triple index
  std::vector<Vertex> fish_y;                        // by element - 1
};

/// Elements 0..3q-1, then triples 3q..3q+t-1; edges are memberships.
inline Graph incidence_graph(const X3CInstance& inst) {
  inst.validate();
  const std::size_t elements = 3 * inst.q;
  std::vector<Edge> e;
  for (std::size_t j = 0; j < inst.triples.size(); ++j)
    for (std::size_t x : inst.triples[j]) e.emplace_back(static_cast<Vertex>(x - 1), static_cast<Vertex>(elements + j));
  return Graph(elements + inst.triples.size(), std::move(e));
}

inline ReductionOutput reduce_x3c(const X3CInstance& inst) {
  const Graph h = incidence_graph(inst);
  const std::size_t elements = 3 * inst.q;
  const std::size_t t = inst.triples.size();
  const std::size_t k = 6 * inst.q + 2 * t;

  ReductionOutput out;
  out.k = k;
  out.instance = inst;
  std::vector<Edge> e(h.edges().begin(), h.edges().end());
  for (std::size_t i = 0; i < elements; ++i) {
    out.element_anchor.push_back(static_cast<Vertex>(i));
    out.roles.push_back({RoleKind::kElementAnchor, i + 1});
  }
  for (std::size_t j = 0; j < t; ++j) {
    out.set_vertex.push_back(static_cast<Vertex>(elements + j));
    out.roles.push_back({RoleKind::kSetVertex, j});
  }
  auto next = static_cast<Vertex>(elements + t);
  for (std::size_t i = 0; i < elements; ++i) {
    const Vertex x = out.element_anchor[i];
    const Vertex y = next++;
    out.fish_y.push_back(y);
    out.roles.push_back({RoleKind::kFishY, i + 1});
    for (std::size_t m = 0; m < k; ++m) {
      const Vertex mv = next++;
      e.emplace_back(x, mv);
      e.emplace_back(y, mv);
      out.roles.push_back({RoleKind::kFishM, i + 1});
    }
    for (std::size_t m = 0; m < k; ++m) {
      e.emplace_back(y, next++);
      out.roles.push_back({RoleKind::kFishT, i + 1});
    }
  }
  for (std::size_t j = 0; j < t; ++j) {
    const Vertex c = out.set_vertex[j];
    const Vertex p1 = next++;
    const Vertex p2 = next++;
    e.emplace_back(c, p1);
    e.emplace_back(c, p2);
    out.set_pendants.push_back({p1, p2});
    out.roles.push_back({RoleKind::kSetPendant, j});
    out.roles.push_back({RoleKind::kSetPendant, j});
  }
  out.graph = Graph(next, std::move(e));
  return out;
}

/// Weight-k PID-function built from an exact cover.
inline Labeling forward_labeling(const X3CInstance& inst, const Cover& cover, const ReductionOutput& red) {
  if (!is_exact_cover(inst, cover)) throw ReductionError("forward_labeling: cover is not exact");
  if (red.set_pendants.size() != inst.triples.size() || red.fish_y.size() != 3 * inst.q) {
    throw ReductionError("forward_labeling: reduction output does not match the instance");
  }
  Labeling f(red.graph.order());
  std::vector<char> chosen(inst.triples.size(), 0);
  for (std::size_t j : cover.indices) chosen[j] = 1;
  for (std::size_t j = 0; j < inst.triples.size(); ++j) {
    if (chosen[j]) {
      f.set(red.set_vertex[j], 2);
    } else {
      f.set(red.set_pendants[j][0], 1);
      f.set(red.set_pendants[j][1], 1);
    }
  }
  for (Vertex y : red.fish_y) f.set(y, 2);
  return f;
}

/// Reads the cover {j : f(c_j) = 2} off a PID-function of weight <= k.
/// Throws if f is not such a function, or if it labels an anchor nonzero.
inline Cover extract_cover(const ReductionOutput& red, const Labeling& f) {
  if (!red.k) throw ReductionError("extract_cover: reduction has no target weight");
  if (f.size() != red.graph.order()) throw ReductionError("extract_cover: labeling length mismatch");
  if (!is_pid(red.graph, f)) throw ReductionError("extract_cover: labeling is not a PID-function");
  if (weight(f) > *red.k) throw ReductionError("extract_cover: labeling exceeds the target weight");
  for (Vertex x : red.element_anchor) {
    if (f[x] != 0) {
      throw ReductionError("extract_cover: anchor " + std::to_string(x) +
                           " labeled nonzero at weight <= k (fish gadget forces weight > k)");
    }
  }
  Cover cover;
  for (std::size_t j = 0; j < red.set_vertex.size(); ++j)
    if (f[red.set_vertex[j]] == 2) cover.indices.push_back(j);
  if (!is_exact_cover(red.instance, cover)) {
    throw std::logic_error("extract_cover: recovered family is not an exact cover");
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Fish gadget enumeration.

struct FishReport {
  std::size_t ell = 0;
  std::size_t min_weight_x1 = 0;       // f(x) = 1
  std::size_t min_weight_x2 = 0;       // f(x) = 2
  std::size_t min_out_satisfied = 0;   // f(x) = 0, outside supplies 2
  std::size_t min_in_satisfied = 0;    // f(x) = 0, gadget supplies 2
  std::size_t min_neither = 0;         // f(x) = 0, 1 from each side

  [[nodiscard]] bool large_bounds_hold() const {
    return min_weight_x1 >= ell + 2 && min_weight_x2 >= ell + 4;
  }
  [[nodiscard]] bool satisfaction_optima_hold() const {
    return min_out_satisfied == 2 && min_in_satisfied == 4 && min_neither == 3;
  }
};

/// Exhaustive minima over all labelings of F_ell (3 <= ell <= 5). Vertex x
/// is the only one with outside neighbors; its outside contribution is
/// modeled as a fixed phantom weight.
inline FishReport verify_fish_props(std::size_t ell) {
  if (ell < 3 || ell > 5) throw std::invalid_argument("verify_fish_props: ell must be in [3,5]");
  const std::size_t n = 2 * ell + 2;
  // x = 0, y = 1, M = 2..ell+1, T = ell+2..2ell+1 (same layout as make(fish)).
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex i = 0; i < ell; ++i) {
    const Vertex m = 2 + i;
    const auto t = static_cast<Vertex>(2 + ell + i);
    adj[0].push_back(m);
    adj[m].push_back(0);
    adj[1].push_back(m);
    adj[m].push_back(1);
    adj[1].push_back(t);
    adj[t].push_back(1);
  }

  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  FishReport report{ell, kInf, kInf, kInf, kInf, kInf};
  std::vector<int> f(n, 0);
  while (true) {
    bool inner_ok = true;
    for (Vertex v = 1; v < n && inner_ok; ++v) {
      if (f[v] != 0) continue;
      int s = 0;
      for (Vertex w : adj[v]) s += f[w];
      inner_ok = s == 2;
    }
    if (inner_ok) {
      std::size_t w = 0;
      for (int value : f) w += static_cast<std::size_t>(value);
      int x_sum = 0;
      for (Vertex u : adj[0]) x_sum += f[u];
      auto keep = [w](std::size_t& slot) { slot = std::min(slot, w); };
      if (f[0] == 1) keep(report.min_weight_x1);
      if (f[0] == 2) keep(report.min_weight_x2);
      if (f[0] == 0 && x_sum == 0) keep(report.min_out_satisfied);
      if (f[0] == 0 && x_sum == 2) keep(report.min_in_satisfied);
      if (f[0] == 0 && x_sum == 1) keep(report.min_neither);
    }
    std::size_t pos = 0;
    while (pos < n && f[pos] == 2) f[pos++] = 0;
    if (pos == n) break;
    ++f[pos];
  }
  return report;
}

// ---------------------------------------------------------------------------
// Roman {2} variant: each set vertex becomes a 2-vertex path p0-p1 followed
// by a 6-cycle g0..g5 with chord g0-g3. p0 takes the set's memberships, p1 is
// adjacent to p0 and g0. Elements keep ids 0..3q-1; gadget j occupies
// 3q + 8j .. 3q + 8j + 7 as p0 p1 g0 .. g5.

inline ReductionOutput reduce_x3c_roman2(const X3CInstance& inst, std::optional<std::size_t> k = std::nullopt) {
  inst.validate();
  const std::size_t elements = 3 * inst.q;
  const std::size_t t = inst.triples.size();
  ReductionOutput out;
  out.k = k;
  out.instance = inst;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < elements; ++i) {
    out.element_anchor.push_back(static_cast<Vertex>(i));
    out.roles.push_back({RoleKind::kElementAnchor, i + 1});
  }
  for (std::size_t j = 0; j < t; ++j) {
    const auto base = static_cast<Vertex>(elements + 8 * j);
    const Vertex p0 = base;
    const Vertex p1 = base + 1;
    out.set_vertex.push_back(p0);
    for (std::size_t x : inst.triples[j]) e.emplace_back(static_cast<Vertex>(x - 1), p0);
    e.emplace_back(p0, p1);
    e.emplace_back(p1, base + 2);
    for (Vertex c = 0; c < 6; ++c) e.emplace_back(base + 2 + c, base + 2 + (c + 1) % 6);
    e.emplace_back(base + 2, base + 5);
    out.roles.push_back({RoleKind::kGadgetPath, j});
    out.roles.push_back({RoleKind::kGadgetPath, j});
    for (int c = 0; c < 6; ++c) out.roles.push_back({RoleKind::kGadgetCycle, j});
  }
  out.graph = Graph(elements + 8 * t, std::move(e));
  return out;
}

// ---------------------------------------------------------------------------
// Text format: "q t" then t lines of three elements.

inline X3CInstance read_x3c(std::istream& in) {
  X3CInstance inst;
  std::size_t t = 0;
  if (!(in >> inst.q >> t)) throw ReductionError("x3c: expected header \"q t\"");
  for (std::size_t j = 0; j < t; ++j) {
    std::array<std::size_t, 3> tr{};
    if (!(in >> tr[0] >> tr[1] >> tr[2])) throw ReductionError("x3c: expected " + std::to_string(t) + " triples");
    inst.triples.push_back(tr);
  }
  std::string extra;
  if (in >> extra) throw ReductionError("x3c: trailing data after last triple");
  inst.validate();
  return inst;
}

inline void write_x3c(std::ostream& out, const X3CInstance& inst) {
  out << inst.q << ' ' << inst.triples.size() << '\n';
  for (const auto& tr : inst.triples) out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
}

}  // namespace pidom

#endif  // PIDOM_REDUCTION_HPP
