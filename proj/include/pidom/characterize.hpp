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

#ifndef PIDOM_CHARACTERIZE_HPP
#define PIDOM_CHARACTERIZE_HPP

// Polynomial characterizations of pid = 2 and pid = 3, closed forms for the
// generated families, and a priori bounds.
//
// Rule ids (the `reason` strings) are stable and appear in CLI reports:
//   pid2-dominating-vertex   a vertex adjacent to all others (label 2)
//   pid2-dominating-pair     u, v each adjacent to all of V - {u, v} (1, 1)
//   pid2-none                neither structure exists
//   pid3-2fair-triple        a 3-set that every outside vertex sees twice
//   pid3-none                no such 3-set
//   closed-form-*            family formulas (see closed_form)
//   bound-degree             ceil(2n / (maxdeg + 2))
//   bound-trivial            n
//   bound-cubic-matching     n - 2 im(g)

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "pidom/families.hpp"
#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"
#include "pidom/solver.hpp"

namespace pidom {

enum class Conclusion {
  kPidEquals,
  kPidAtMost,
  kPidAtLeast,
  kUnknown,
};

inline const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::kPidEquals: return "pid-equals";
    case Conclusion::kPidAtMost: return "pid-at-most";
    case Conclusion::kPidAtLeast: return "pid-at-least";
    case Conclusion::kUnknown: return "unknown";
  }
  return "?";
}

struct CharacterizationResult {
  Conclusion conclusion = Conclusion::kUnknown;
  std::size_t value = 0;
  std::variant<std::monostate, Labeling, VertexSet> witness;
  std::string reason;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_connected_nontrivial(const Graph& g, const char* name) {
  if (g.order() < 2) throw PreconditionError(std::string(name) + ": graph must have at least 2 vertices");
  if (!is_connected(g)) throw PreconditionError(std::string(name) + ": graph must be connected");
}

}  // namespace detail

/// pid(g) = 2 iff g is the join of K_1, 2K_1 or K_2 with some graph.
inline CharacterizationResult test_pid2(const Graph& g) {
  detail::require_connected_nontrivial(g, "test_pid2");
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) {
      Labeling f(n);
      f.set(v, 2);
      return {Conclusion::kPidEquals, 2, std::move(f), "pid2-dominating-vertex"};
    }
  }
  // u must see everything except possibly v, and vice versa.
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) + 2 < n) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) + 2 < n) continue;
      bool ok = true;
      for (Vertex w = 0; w < n && ok; ++w)
        if (w != u && w != v) ok = g.has_edge(u, w) && g.has_edge(v, w);
      if (ok) {
        Labeling f(n);
        f.set(u, 1);
        f.set(v, 1);
        return {Conclusion::kPidEquals, 2, std::move(f), "pid2-dominating-pair"};
      }
    }
  }
  return {Conclusion::kPidAtLeast, 3, std::monostate{}, "pid2-none"};
}

/// First 3-subset (lexicographic) that is 2-fair dominating in g.
inline std::optional<VertexSet> find_2fair_triple(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        VertexSet s{a, b, c};
        if (is_k_fair(g, s, 2)) return s;
      }
  return std::nullopt;
}

/// First 3-subset (lexicographic) that is a perfect dominating set of the
/// complement of g. Agrees with find_2fair_triple on connected graphs.
inline std::optional<VertexSet> find_perfect_dominating_triple_in_complement(const Graph& g) {
  const Graph h = complement(g);
  const auto n = static_cast<Vertex>(h.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        VertexSet s{a, b, c};
        if (is_k_fair(h, s, 1)) return s;
      }
  return std::nullopt;
}

/// For connected g with pid(g) > 2: pid(g) = 3 iff g has a 2-fair
/// dominating set of size 3. Throws PreconditionError if pid(g) = 2.
inline CharacterizationResult test_pid3(const Graph& g) {
  detail::require_connected_nontrivial(g, "test_pid3");
  if (test_pid2(g).conclusion == Conclusion::kPidEquals) {
    throw PreconditionError("test_pid3: graph has pid 2");
  }
  if (auto s = find_2fair_triple(g)) {
    return {Conclusion::kPidEquals, 3, *s, "pid3-2fair-triple"};
  }
  return {Conclusion::kPidAtLeast, 4, std::monostate{}, "pid3-none"};
}

/// Exact pid of a generated family member, or kUnknown outside the covered
/// table. Never extrapolates.
inline CharacterizationResult closed_form(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  auto equals = [](std::size_t v, const char* rule) {
    return CharacterizationResult{Conclusion::kPidEquals, v, std::monostate{}, rule};
  };
  switch (spec.kind) {
    case FamilyKind::kPath: return equals((p[0] + 2) / 2, "closed-form-path");
    case FamilyKind::kCycle: return equals((p[0] + 1) / 2, "closed-form-cycle");
    case FamilyKind::kComplete:
      if (p[0] == 1) return equals(1, "closed-form-trivial");
      return equals(2, "closed-form-complete");
    case FamilyKind::kStar: return equals(2, "closed-form-star");
    case FamilyKind::kWheel: return equals(2, "closed-form-wheel");
    case FamilyKind::kCompleteMultipartite: {
      if (p.size() == 2 && (p[0] == 2 || p[1] == 2)) return equals(2, "closed-form-k2n");
      for (std::size_t part : p)
        if (part < 3) return {Conclusion::kUnknown, 0, std::monostate{}, "closed-form-uncovered"};
      if (p.size() == 2) return equals(4, "closed-form-bipartite");
      if (p.size() == 3) return equals(3, "closed-form-tripartite");
      if (p.size() >= 4) return equals(family_order(spec), "closed-form-multipartite");
      return {Conclusion::kUnknown, 0, std::monostate{}, "closed-form-uncovered"};
    }
    case FamilyKind::kThreshold:
      if (spec.bits.size() >= 2 && spec.bits.back() == '1') return equals(2, "closed-form-threshold");
      return {Conclusion::kUnknown, 0, std::monostate{}, "closed-form-uncovered"};
    case FamilyKind::kJewel: return equals(family_order(spec), "closed-form-jewel");
    case FamilyKind::kKC: return equals(family_order(spec), "closed-form-kc");
    case FamilyKind::kSplit: return equals(family_order(spec), "closed-form-split");
    case FamilyKind::kFish: return {Conclusion::kUnknown, 0, std::monostate{}, "closed-form-uncovered"};
  }
  return {Conclusion::kUnknown, 0, std::monostate{}, "closed-form-uncovered"};
}

struct Bounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::string lower_reason;
  std::string upper_reason;
};

/// lower = ceil(2n / (maxdeg + 2)); upper = n, or n - 2 im(g) for cubic g
/// within the matching cap.
inline Bounds bounds(const Graph& g, std::size_t cap = kDefaultBruteForceCap) {
  if (!is_connected(g)) throw PreconditionError("bounds: graph must be connected");
  const std::size_t n = g.order();
  const std::size_t delta = g.max_degree();
  Bounds b;
  b.lower = (2 * n + delta + 1) / (delta + 2);
  b.lower_reason = "bound-degree";
  b.upper = n;
  b.upper_reason = "bound-trivial";
  if (n > 0 && is_regular(g, 3) && n <= cap) {
    b.upper = n - 2 * max_induced_matching(g, cap).value;
    b.upper_reason = "bound-cubic-matching";
  }
  return b;
}

}  // namespace pidom

#endif  // PIDOM_CHARACTERIZE_HPP
