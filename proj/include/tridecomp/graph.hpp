// Copyright 2026 The tridecomp Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridecomp/errors.hpp"

namespace tridecomp {

using VertexId = std::uint32_t;

/// Unordered vertex pair stored as (smaller, larger). Loops are not
/// representable.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 1;

  static EdgeKey of(VertexId a, VertexId b) {
    if (a == b) {
      throw std::domain_error("loop at vertex " + std::to_string(a) +
                              " is not an edge");
    }
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
  }

  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

inline std::string to_string(const EdgeKey& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

/// Vertex triple with a < b < c.
struct Triangle {
  VertexId a = 0;
  VertexId b = 1;
  VertexId c = 2;

  static Triangle of(VertexId x, VertexId y, VertexId z) {
    std::array<VertexId, 3> s{x, y, z};
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) {
      throw std::domain_error("triangle needs three distinct vertices");
    }
    return Triangle{s[0], s[1], s[2]};
  }

  std::array<EdgeKey, 3> edges() const {
    return {EdgeKey{a, b}, EdgeKey{a, c}, EdgeKey{b, c}};
  }

  bool contains(const EdgeKey& e) const {
    auto has = [this](VertexId x) { return x == a || x == b || x == c; };
    return has(e.u) && has(e.v);
  }

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline std::string to_string(const Triangle& t) {
  return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
         std::to_string(t.c) + "}";
}

/// Loopless multigraph on vertices 0..order-1. Absent keys have
/// multiplicity zero; stored multiplicities are always positive.
class Multigraph {
 public:
  using EdgeMap = std::map<EdgeKey, unsigned>;

  Multigraph() = default;
  explicit Multigraph(std::size_t order) : order_(order) {}

  std::size_t order() const { return order_; }

  /// Total number of edge copies.
  std::size_t size() const { return size_; }

  const EdgeMap& edges() const { return edges_; }

  unsigned multiplicity(const EdgeKey& e) const {
    auto it = edges_.find(e);
    return it == edges_.end() ? 0U : it->second;
  }

  bool has_edge(const EdgeKey& e) const { return edges_.count(e) != 0; }
  bool adjacent(VertexId a, VertexId b) const {
    return a != b && has_edge(EdgeKey::of(a, b));
  }

  /// Adds copies of {a,b} whether or not the pair is already adjacent.
  /// Construction-time builder; augmentation goes through add_parallel.
  Multigraph& add_edge(VertexId a, VertexId b, unsigned copies = 1) {
    check_vertex(a);
    check_vertex(b);
    if (copies == 0) return *this;
    edges_[EdgeKey::of(a, b)] += copies;
    size_ += copies;
    return *this;
  }

  /// Removes copies of e; the key disappears when its multiplicity hits 0.
  Multigraph& remove_edge(const EdgeKey& e, unsigned copies = 1) {
    auto it = edges_.find(e);
    if (it == edges_.end() || it->second < copies) {
      throw std::domain_error("cannot remove " + std::to_string(copies) +
                              " copies of " + to_string(e));
    }
    it->second -= copies;
    size_ -= copies;
    if (it->second == 0) edges_.erase(it);
    return *this;
  }

  bool is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const auto& kv) { return kv.second == 1; });
  }

  void check_vertex(VertexId v) const {
    if (v >= order_) {
      throw std::domain_error("vertex " + std::to_string(v) +
                              " out of range for order " +
                              std::to_string(order_));
    }
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t order_ = 0;
  std::size_t size_ = 0;
  EdgeMap edges_;
};

/// Sum of multiplicities of edges incident to v.
inline std::size_t degree(const Multigraph& g, VertexId v) {
  g.check_vertex(v);
  std::size_t d = 0;
  for (const auto& [e, m] : g.edges()) {
    if (e.touches(v)) d += m;
  }
  return d;
}

inline std::vector<std::size_t> degrees(const Multigraph& g) {
  std::vector<std::size_t> d(g.order(), 0);
  for (const auto& [e, m] : g.edges()) {
    d[e.u] += m;
    d[e.v] += m;
  }
  return d;
}

/// Distinct neighbours of v, ascending.
inline std::vector<VertexId> neighbors(const Multigraph& g, VertexId v) {
  g.check_vertex(v);
  std::vector<VertexId> out;
  for (const auto& [e, m] : g.edges()) {
    if (e.touches(v)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Adjacency lists (distinct neighbours, ascending) for every vertex.
inline std::vector<std::vector<VertexId>> adjacency(const Multigraph& g) {
  std::vector<std::vector<VertexId>> adj(g.order());
  for (const auto& [e, m] : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

/// Returns g with `copies` more copies of an edge that is already present.
inline Multigraph add_parallel(Multigraph g, const EdgeKey& e,
                               unsigned copies = 1) {
  if (!g.has_edge(e)) {
    throw AugmentNonAdjacent("cannot add a parallel copy of " + to_string(e) +
                             ": endpoints are not adjacent");
  }
  g.add_edge(e.u, e.v, copies);
  return g;
}

/// Triangles whose three pairs are all present and that contain e,
/// ordered lexicographically.
inline std::vector<Triangle> triangles_through(const Multigraph& g,
                                               const EdgeKey& e) {
  std::vector<Triangle> out;
  if (!g.has_edge(e)) return out;
  for (VertexId w = 0; w < g.order(); ++w) {
    if (w == e.u || w == e.v) continue;
    if (g.adjacent(w, e.u) && g.adjacent(w, e.v)) {
      out.push_back(Triangle::of(e.u, e.v, w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Simple graph with the same adjacencies.
inline Multigraph underlying_simple(const Multigraph& g) {
  Multigraph s(g.order());
  for (const auto& [e, m] : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

inline Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

inline Multigraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::domain_error("a cycle needs at least 3 vertices");
  Multigraph g(n);
  for (VertexId i = 0; i < n; ++i) {
    g.add_edge(i, static_cast<VertexId>((i + 1) % n));
  }
  return g;
}

inline Multigraph graph_from_edges(
    std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Multigraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace tridecomp
