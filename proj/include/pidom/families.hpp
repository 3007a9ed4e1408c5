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

#ifndef PIDOM_FAMILIES_HPP
#define PIDOM_FAMILIES_HPP

// Deterministic generators for the parametric families.
//
// Vertex layouts are part of the contract (graph6 output is reproducible):
//
//   path n        0-1-...-(n-1)
//   cycle n       path plus {0, n-1}
//   complete n    K_n
//   star n        center 0, leaves 1..n-1
//   wheel n       hub 0, cycle 1..n-1 in order
//   kpartite      parts consecutive in declaration order
//   threshold s   vertex i is symbol i; '1' joins all previous vertices
//   jewel l       0=u 1=v 2=x 3=x-mate 4=y 5=y-mate 6=u-pendant 7=v-pendant,
//                 then x-chain/y-chain pendants in pairs: 8=x1 9=y1 10=x2 ...
//   kc a,r,b,s    r parts of size a, then s parts of size b (each cycled in
//                 ascending order)
//   split l       K_l on 0..l-1, x=l ~ {0,1,2}, y=l+1 ~ {3}
//   fish l        0=x 1=y, M = 2..l+1, T = l+2..2l+1

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pidom/graph.hpp"

namespace pidom {

enum class FamilyKind {
  kPath,
  kCycle,
  kComplete,
  kStar,
  kWheel,
  kCompleteMultipartite,
  kThreshold,
  kJewel,
  kKC,
  kSplit,
  kFish,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<std::size_t> params;  // size / parts / (a,r,b,s) / l
  std::string bits;                 // threshold only

  static FamilySpec path(std::size_t n) { return {FamilyKind::kPath, {n}, {}}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::kCycle, {n}, {}}; }
  static FamilySpec complete(std::size_t n) { return {FamilyKind::kComplete, {n}, {}}; }
  static FamilySpec star(std::size_t n) { return {FamilyKind::kStar, {n}, {}}; }
  static FamilySpec wheel(std::size_t n) { return {FamilyKind::kWheel, {n}, {}}; }
  static FamilySpec multipartite(std::vector<std::size_t> parts) {
    return {FamilyKind::kCompleteMultipartite, std::move(parts), {}};
  }
  static FamilySpec threshold(std::string bits) { return {FamilyKind::kThreshold, {}, std::move(bits)}; }
  static FamilySpec jewel(std::size_t l) { return {FamilyKind::kJewel, {l}, {}}; }
  static FamilySpec kc(std::size_t a, std::size_t r, std::size_t b, std::size_t s) {
    return {FamilyKind::kKC, {a, r, b, s}, {}};
  }
  static FamilySpec split(std::size_t l) { return {FamilyKind::kSplit, {l}, {}}; }
  static FamilySpec fish(std::size_t l) { return {FamilyKind::kFish, {l}, {}}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

inline void require_arity(const FamilySpec& spec, std::size_t count, const char* name) {
  require(spec.params.size() == count, std::string(name) + ": expected " + std::to_string(count) + " parameter(s)");
}

inline Graph make_path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph make_cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, std::move(e));
}

inline Graph make_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<Vertex> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<Vertex>(p));
  std::vector<Edge> e;
  for (Vertex j = 1; j < part_of.size(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return Graph(part_of.size(), std::move(e));
}

inline Graph make_jewel(std::size_t l) {
  constexpr Vertex u = 0, v = 1, x = 2, xm = 3, y = 4, ym = 5, pu = 6, pv = 7;
  std::vector<Edge> e = {{x, xm}, {y, ym}};
  for (Vertex mid : {x, xm, y, ym}) {
    e.emplace_back(u, mid);
    e.emplace_back(v, mid);
  }
  e.emplace_back(u, pu);
  e.emplace_back(v, pv);
  // Pendants x1, y1 of the degree-four supports.
  Vertex xc = 8, yc = 9;
  e.emplace_back(x, xc);
  e.emplace_back(y, yc);
  Vertex next = 10;
  for (std::size_t step = 2; step <= l; ++step) {
    // Widening: u and v take the current pendants, which get fresh pendants.
    for (Vertex chain : {xc, yc}) {
      e.emplace_back(u, chain);
      e.emplace_back(v, chain);
    }
    e.emplace_back(xc, next);
    e.emplace_back(yc, next + 1);
    xc = next;
    yc = next + 1;
    next += 2;
  }
  return Graph(next, std::move(e));
}

inline Graph make_kc(std::size_t a, std::size_t r, std::size_t b, std::size_t s) {
  std::vector<std::size_t> parts(r, a);
  parts.insert(parts.end(), s, b);
  Graph base = make_multipartite(parts);
  std::vector<Edge> e(base.edges().begin(), base.edges().end());
  for (std::size_t j = 0; j < s; ++j) {
    const auto start = static_cast<Vertex>(a * r + b * j);
    for (Vertex i = 0; i < b; ++i) e.emplace_back(start + i, start + static_cast<Vertex>((i + 1) % b));
  }
  return Graph(base.order(), std::move(e));
}

inline Graph make_split(std::size_t l) {
  Graph clique = complete_graph(l);
  std::vector<Edge> e(clique.edges().begin(), clique.edges().end());
  const auto x = static_cast<Vertex>(l);
  const auto y = static_cast<Vertex>(l + 1);
  e.emplace_back(x, 0);
  e.emplace_back(x, 1);
  e.emplace_back(x, 2);
  e.emplace_back(y, 3);
  return Graph(l + 2, std::move(e));
}

inline Graph make_fish(std::size_t l) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < l; ++i) {
    const Vertex m = 2 + i;
    const auto t = static_cast<Vertex>(2 + l + i);
    e.emplace_back(0, m);
    e.emplace_back(1, m);
    e.emplace_back(1, t);
  }
  return Graph(2 * l + 2, std::move(e));
}

inline Graph make_threshold(const std::string& bits) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < bits.size(); ++i)
    if (bits[i] == '1')
      for (Vertex j = 0; j < i; ++j) e.emplace_back(j, i);
  return Graph(bits.size(), std::move(e));
}

}  // namespace detail

/// Checks the validity range of `spec`; throws std::invalid_argument naming
/// the violated bound.
inline void validate(const FamilySpec& spec) {
  using detail::require;
  using detail::require_arity;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
      require_arity(spec, 1, "path");
      require(p[0] >= 1, "path: n must be >= 1");
      break;
    case FamilyKind::kCycle:
      require_arity(spec, 1, "cycle");
      require(p[0] >= 3, "cycle: n must be >= 3");
      break;
    case FamilyKind::kComplete:
      require_arity(spec, 1, "complete");
      require(p[0] >= 1, "complete: n must be >= 1");
      break;
    case FamilyKind::kStar:
      require_arity(spec, 1, "star");
      require(p[0] >= 2, "star: n must be >= 2");
      break;
    case FamilyKind::kWheel:
      require_arity(spec, 1, "wheel");
      require(p[0] >= 4, "wheel: n must be >= 4");
      break;
    case FamilyKind::kCompleteMultipartite:
      require(!p.empty(), "kpartite: at least one part required");
      for (std::size_t part : p) require(part >= 1, "kpartite: every part must have size >= 1");
      break;
    case FamilyKind::kThreshold:
      require(!spec.bits.empty(), "threshold: bitstring must be nonempty");
      require(spec.bits.find_first_not_of("01") == std::string::npos, "threshold: bitstring must be over {0,1}");
      break;
    case FamilyKind::kJewel:
      require_arity(spec, 1, "jewel");
      require(p[0] >= 1, "jewel: l must be >= 1");
      break;
    case FamilyKind::kKC:
      require_arity(spec, 4, "kc");
      require(p[2] > 4, "kc: b must be > 4");
      require(p[1] > 1, "kc: r must be > 1");
      require(p[0] > 2, "kc: a must be > 2");
      require(p[0] < p[2], "kc: a must be < b");
      require(p[3] >= 1, "kc: s must be >= 1");
      break;
    case FamilyKind::kSplit:
      require_arity(spec, 1, "split");
      require(p[0] >= 6, "split: l must be >= 6");
      break;
    case FamilyKind::kFish:
      require_arity(spec, 1, "fish");
      require(p[0] >= 1, "fish: l must be >= 1");
      break;
  }
}

inline Graph make(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath: return detail::make_path(p[0]);
    case FamilyKind::kCycle: return detail::make_cycle(p[0]);
    case FamilyKind::kComplete: return complete_graph(p[0]);
    case FamilyKind::kStar: return detail::make_multipartite({1, p[0] - 1});
    case FamilyKind::kWheel: return join(Graph(1, {}), detail::make_cycle(p[0] - 1));
    case FamilyKind::kCompleteMultipartite: return detail::make_multipartite(p);
    case FamilyKind::kThreshold: return detail::make_threshold(spec.bits);
    case FamilyKind::kJewel: return detail::make_jewel(p[0]);
    case FamilyKind::kKC: return detail::make_kc(p[0], p[1], p[2], p[3]);
    case FamilyKind::kSplit: return detail::make_split(p[0]);
    case FamilyKind::kFish: return detail::make_fish(p[0]);
  }
  throw std::logic_error("make: unknown family kind");
}

/// Order of make(spec) without building it.
inline std::size_t family_order(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kCompleteMultipartite: return std::accumulate(p.begin(), p.end(), std::size_t{0});
    case FamilyKind::kThreshold: return spec.bits.size();
    case FamilyKind::kJewel: return 10 + 2 * (p[0] - 1);
    case FamilyKind::kKC: return p[0] * p[1] + p[2] * p[3];
    case FamilyKind::kSplit: return p[0] + 2;
    case FamilyKind::kFish: return 2 * p[0] + 2;
    default: return p[0];
  }
}

// ---------------------------------------------------------------------------
// "family:params" strings, e.g. "jewel:3", "kc:3,2,5,1", "kpartite:3,3,3".

inline FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("family spec must look like name:params");
  const std::string name(text.substr(0, colon));
  const std::string args(text.substr(colon + 1));
  if (name == "threshold") {
    FamilySpec spec = FamilySpec::threshold(args);
    validate(spec);
    return spec;
  }

  std::vector<std::size_t> values;
  std::size_t start = 0;
  while (start <= args.size()) {
    const auto comma = args.find(',', start);
    const std::string token = args.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("family spec: bad integer '" + token + "' in '" + std::string(text) + "'");
    }
    values.push_back(std::stoull(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  FamilySpec spec;
  spec.params = std::move(values);
  if (name == "path") {
    spec.kind = FamilyKind::kPath;
  } else if (name == "cycle") {
    spec.kind = FamilyKind::kCycle;
  } else if (name == "complete") {
    spec.kind = FamilyKind::kComplete;
  } else if (name == "star") {
    spec.kind = FamilyKind::kStar;
  } else if (name == "wheel") {
    spec.kind = FamilyKind::kWheel;
  } else if (name == "kpartite" || name == "complete_multipartite") {
    spec.kind = FamilyKind::kCompleteMultipartite;
  } else if (name == "jewel") {
    spec.kind = FamilyKind::kJewel;
  } else if (name == "kc") {
    spec.kind = FamilyKind::kKC;
  } else if (name == "split" || name == "split_family") {
    spec.kind = FamilyKind::kSplit;
  } else if (name == "fish") {
    spec.kind = FamilyKind::kFish;
  } else {
    throw std::invalid_argument("family spec: unknown family '" + name + "'");
  }
  validate(spec);
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  std::string name;
  switch (spec.kind) {
    case FamilyKind::kPath: name = "path"; break;
    case FamilyKind::kCycle: name = "cycle"; break;
    case FamilyKind::kComplete: name = "complete"; break;
    case FamilyKind::kStar: name = "star"; break;
    case FamilyKind::kWheel: name = "wheel"; break;
    case FamilyKind::kCompleteMultipartite: name = "kpartite"; break;
    case FamilyKind::kThreshold: return "threshold:" + spec.bits;
    case FamilyKind::kJewel: name = "jewel"; break;
    case FamilyKind::kKC: name = "kc"; break;
    case FamilyKind::kSplit: name = "split"; break;
    case FamilyKind::kFish: name = "fish"; break;
  }
  std::string out = name + ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

}  // namespace pidom

#endif  // PIDOM_FAMILIES_HPP
