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
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tridecomp/decomposer.hpp"
#include "tridecomp/graph.hpp"

namespace tridecomp {

/// True when all vertices with at least one edge lie in one component.
inline bool is_connected_on_edges(const Multigraph& g) {
  const auto adj = adjacency(g);
  VertexId start = 0;
  bool any = false;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!adj[v].empty()) {
      start = v;
      any = true;
      break;
    }
  }
  if (!any) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!adj[v].empty() && !seen[v]) return false;
  }
  return true;
}

/// Connected (ignoring isolated vertices) with every degree even.
inline bool is_eulerian(const Multigraph& g) {
  const auto deg = degrees(g);
  if (std::any_of(deg.begin(), deg.end(), [](auto d) { return d % 2 != 0; })) {
    return false;
  }
  return is_connected_on_edges(g);
}

inline bool every_edge_on_triangle(const Multigraph& g) {
  for (const auto& [e, m] : g.edges()) {
    if (triangles_through(g, e).empty()) return false;
  }
  return true;
}

/// Eulerian, size divisible by 3, every edge on a triangle.
inline bool is_strongly_k3_divisible(const Multigraph& g) {
  return is_eulerian(g) && g.size() % 3 == 0 && every_edge_on_triangle(g);
}

/// Checks g against a claimed outer Hamilton cycle: the cycle is present,
/// there are 2n-3 edges, and the remaining edges are non-crossing chords.
inline bool is_maximal_outerplanar(const Multigraph& g,
                                   const std::vector<VertexId>& outer) {
  const std::size_t n = g.order();
  if (outer.size() != n) {
    throw std::domain_error("outer sequence is not a permutation of the vertices");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (outer[i] >= n || pos[outer[i]] != n) {
      throw std::domain_error("outer sequence is not a permutation of the vertices");
    }
    pos[outer[i]] = i;
  }
  if (n < 3 || !g.is_simple() || g.size() != 2 * n - 3) return false;

  std::set<EdgeKey> cycle;
  for (std::size_t i = 0; i < n; ++i) {
    const auto e = EdgeKey::of(outer[i], outer[(i + 1) % n]);
    if (!g.has_edge(e)) return false;
    cycle.insert(e);
  }
  std::vector<std::pair<std::size_t, std::size_t>> chords;
  for (const auto& [e, m] : g.edges()) {
    if (cycle.count(e)) continue;
    auto a = pos[e.u], b = pos[e.v];
    if (a > b) std::swap(a, b);
    chords.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      auto [a, b] = chords[i];
      auto [c, d] = chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

namespace detail {

class HamiltonSearch {
 public:
  explicit HamiltonSearch(const Multigraph& g)
      : adj_(adjacency(g)), used_(g.order(), false) {}

  std::optional<std::vector<VertexId>> run() {
    const std::size_t n = adj_.size();
    if (n < 3) return std::nullopt;
    path_.assign(1, 0);
    used_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const std::size_t n = adj_.size();
    const VertexId last = path_.back();
    if (path_.size() == n) {
      return std::binary_search(adj_[last].begin(), adj_[last].end(), VertexId{0});
    }
    for (VertexId w : adj_[last]) {
      if (used_[w]) continue;
      used_[w] = true;
      path_.push_back(w);
      if (stranded_free() && extend()) return true;
      path_.pop_back();
      used_[w] = false;
    }
    return false;
  }

  // An unvisited vertex with fewer than two usable neighbours (counting the
  // path ends) can never be threaded into the cycle.
  bool stranded_free() const {
    const VertexId last = path_.back();
    for (VertexId v = 0; v < adj_.size(); ++v) {
      if (used_[v]) continue;
      int open = 0;
      for (VertexId w : adj_[v]) {
        if (!used_[w] || w == last || w == 0) ++open;
      }
      if (open < 2) return false;
    }
    return true;
  }

  std::vector<std::vector<VertexId>> adj_;
  std::vector<bool> used_;
  std::vector<VertexId> path_;
};

}  // namespace detail

/// Hamilton cycle starting at vertex 0, found by backtracking.
inline std::optional<std::vector<VertexId>> find_hamiltonian_cycle(const Multigraph& g) {
  return detail::HamiltonSearch(g).run();
}

/// One end of an edge copy as seen from a vertex.
struct EdgeEnd {
  VertexId neighbor = 0;
  unsigned copy = 0;

  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Cyclic order of edge ends around each vertex.
struct RotationSystem {
  std::vector<std::vector<EdgeEnd>> rotations;

  std::size_t order() const { return rotations.size(); }
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct FaceTrace {
  std::vector<std::vector<VertexId>> faces;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  int euler_characteristic = 0;
  int genus = 0;

  std::size_t face_count() const { return faces.size(); }
};

/// The multigraph whose edge copies are the rotation's ends. Throws
/// std::domain_error unless every copy has exactly one end at each endpoint.
inline Multigraph rotation_graph(const RotationSystem& r) {
  const std::size_t n = r.order();
  std::map<std::pair<EdgeKey, unsigned>, std::pair<int, int>> ends;
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& end : r.rotations[v]) {
      if (end.neighbor >= n) {
        throw std::domain_error("rotation at " + std::to_string(v) +
                                " names vertex " + std::to_string(end.neighbor));
      }
      const auto e = EdgeKey::of(v, end.neighbor);
      auto& slot = ends[{e, end.copy}];
      (v == e.u ? slot.first : slot.second) += 1;
    }
  }
  Multigraph g(n);
  for (const auto& [key, count] : ends) {
    if (count.first != 1 || count.second != 1) {
      throw std::domain_error("copy " + std::to_string(key.second) + " of edge " +
                              to_string(key.first) +
                              " does not have exactly one end at each endpoint");
    }
    g.add_edge(key.first.u, key.first.v);
  }
  return g;
}

/// Traces faces: leave along an end, arrive at the matching end of the same
/// copy, and continue with the next end in the arrival vertex's rotation.
inline FaceTrace trace_faces(const RotationSystem& r) {
  const Multigraph g = rotation_graph(r);
  const std::size_t n = r.order();
  // position of end (neighbor, copy) in the rotation of each vertex
  std::vector<std::map<EdgeEnd, std::size_t>> where(n);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < r.rotations[v].size(); ++i) {
      where[v][r.rotations[v][i]] = i;
    }
  }
  std::vector<std::vector<bool>> used(n);
  for (VertexId v = 0; v < n; ++v) used[v].assign(r.rotations[v].size(), false);

  FaceTrace out;
  for (VertexId v0 = 0; v0 < n; ++v0) {
    for (std::size_t i0 = 0; i0 < r.rotations[v0].size(); ++i0) {
      if (used[v0][i0]) continue;
      std::vector<VertexId> face;
      VertexId v = v0;
      std::size_t i = i0;
      while (!used[v][i]) {
        used[v][i] = true;
        face.push_back(v);
        const EdgeEnd end = r.rotations[v][i];
        const VertexId w = end.neighbor;
        const std::size_t j = where[w].at(EdgeEnd{v, end.copy});
        v = w;
        i = (j + 1) % r.rotations[w].size();
      }
      out.faces.push_back(std::move(face));
    }
  }
  out.vertices = n;
  out.edges = g.size();
  out.euler_characteristic = static_cast<int>(n) - static_cast<int>(out.edges) +
                             static_cast<int>(out.faces.size());
  out.genus = (2 - out.euler_characteristic) / 2;
  return out;
}

/// Planarity certificate for a triangulation given as a face list: every
/// edge copy borders exactly two faces and V - E + F = 2.
inline bool check_planar_faces(const Multigraph& g,
                               const std::vector<std::vector<VertexId>>& faces) {
  std::map<EdgeKey, unsigned> sides;
  for (const auto& f : faces) {
    if (f.size() < 3) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId a = f[i], b = f[(i + 1) % f.size()];
      if (a >= g.order() || b >= g.order() || a == b) return false;
      ++sides[EdgeKey::of(a, b)];
    }
  }
  for (const auto& [e, m] : g.edges()) {
    if (sides[e] != 2 * m) return false;
  }
  for (const auto& [e, s] : sides) {
    if (!g.has_edge(e)) return false;
  }
  const long chi = static_cast<long>(g.order()) - static_cast<long>(g.size()) +
                   static_cast<long>(faces.size());
  return chi == 2;
}

}  // namespace tridecomp
