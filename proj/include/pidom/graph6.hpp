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

#ifndef PIDOM_GRAPH6_HPP
#define PIDOM_GRAPH6_HPP

// graph6 codec (short and 3-byte medium size prefixes).
//
// The payload is the upper triangle of the adjacency matrix read column by
// column, x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six bits per byte
// (most significant first), zero padded, and offset by 63.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pidom/graph.hpp"

namespace pidom {

inline constexpr std::size_t kGraph6MaxOrder = 258047;

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    kEmpty,
    kInvalidCharacter,
    kTruncatedPayload,
    kNonzeroPadding,
    kUnsupportedLongForm,
    kTrailingData,
    kOrderTooLarge,
  };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error("graph6: " + what), kind_(kind) {}
  [[nodiscard]] Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline int graph6_sextet(char c, std::size_t pos) {
  const auto b = static_cast<unsigned char>(c);
  if (b < 63 || b > 126) {
    throw Graph6Error(Graph6Error::Kind::kInvalidCharacter,
                      "character code " + std::to_string(b) + " at offset " + std::to_string(pos) +
                          " outside [63,126]");
  }
  return b - 63;
}

}  // namespace detail

inline Graph decode_graph6(std::string_view text) {
  using Kind = Graph6Error::Kind;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Kind::kEmpty, "empty string");

  std::size_t pos = 0;
  std::size_t n = 0;
  const int first = detail::graph6_sextet(text[0], 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') {
      throw Graph6Error(Kind::kUnsupportedLongForm, "long size form (n > 258047) is not supported");
    }
    if (text.size() < 4) throw Graph6Error(Kind::kTruncatedPayload, "truncated size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(detail::graph6_sextet(text[i], i));
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) {
    throw Graph6Error(Kind::kTruncatedPayload, "payload has " + std::to_string(text.size() - pos) +
                                                   " bytes, expected " + std::to_string(bytes));
  }
  if (text.size() - pos > bytes) {
    throw Graph6Error(Kind::kTrailingData, std::to_string(text.size() - pos - bytes) + " bytes after payload");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int sextet = detail::graph6_sextet(text[pos + b], pos + b);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (sextet >> shift) & 1;
      if (k >= bits) {
        if (set) throw Graph6Error(Kind::kNonzeroPadding, "nonzero padding bit");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, std::move(edges));
}

/// Canonical form: no header, minimal size prefix, zero padding.
inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error(Graph6Error::Kind::kOrderTooLarge, "order " + std::to_string(n) + " exceeds 258047");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int sextet = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      sextet = (sextet << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + sextet));
        sextet = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (sextet << (6 - filled))));
  return out;
}

}  // namespace pidom

#endif  // PIDOM_GRAPH6_HPP
