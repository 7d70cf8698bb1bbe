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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tridecomp/graph.hpp"

namespace tridecomp {

/// Multiset of triangles. Valid for g when every pair is covered exactly
/// multiplicity-many times.
struct Decomposition {
  std::vector<Triangle> triangles;

  void normalize() { std::sort(triangles.begin(), triangles.end()); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Every triple with all three pairs present, once each, lexicographic.
inline std::vector<Triangle> enumerate_triangles(const Multigraph& g) {
  const auto adj = adjacency(g);
  std::vector<Triangle> out;
  for (const auto& [e, m] : g.edges()) {
    for (VertexId c : adj[e.v]) {
      if (c > e.v && g.adjacent(e.u, c)) out.push_back(Triangle{e.u, e.v, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// First pair whose coverage by d differs from its multiplicity in g.
struct CoverageIssue {
  EdgeKey edge;
  unsigned expected = 0;
  unsigned found = 0;

  std::string describe() const {
    if (found < expected) {
      return "edge " + to_string(edge) + " undercovered (" +
             std::to_string(found) + " of " + std::to_string(expected) + ")";
    }
    return "edge " + to_string(edge) + " overcovered (" +
           std::to_string(found) + " of " + std::to_string(expected) + ")";
  }
};

inline std::optional<CoverageIssue> coverage_issue(const Multigraph& g,
                                                   const Decomposition& d) {
  std::map<EdgeKey, unsigned> cover;
  for (const auto& t : d.triangles) {
    if (t.c >= g.order()) {
      return CoverageIssue{EdgeKey{t.b, t.c}, 0, 1};
    }
    for (const auto& e : t.edges()) ++cover[e];
  }
  // Both maps are ordered, so the first mismatch in key order is reported.
  std::map<EdgeKey, std::pair<unsigned, unsigned>> all;
  for (const auto& [e, m] : g.edges()) all[e].first = m;
  for (const auto& [e, c] : cover) all[e].second = c;
  for (const auto& [e, pr] : all) {
    if (pr.first != pr.second) return CoverageIssue{e, pr.first, pr.second};
  }
  return std::nullopt;
}

inline bool check_decomposition(const Multigraph& g, const Decomposition& d) {
  return !coverage_issue(g, d).has_value();
}

struct RejectReason {
  enum class Kind { SizeNotDivisible, OddVertex, EdgeNotOnTriangle };
  Kind kind = Kind::SizeNotDivisible;
  VertexId vertex = 0;
  EdgeKey edge{};

  std::string describe() const {
    switch (kind) {
      case Kind::SizeNotDivisible:
        return "size not divisible by 3";
      case Kind::OddVertex:
        return "vertex " + std::to_string(vertex) + " has odd degree";
      case Kind::EdgeNotOnTriangle:
        return "edge " + to_string(edge) + " lies on no triangle";
    }
    return {};
  }

  friend bool operator==(const RejectReason&, const RejectReason&) = default;
};

/// Cheap necessary conditions for decomposability, checked in order: size,
/// degree parity (lowest odd vertex), then every edge on some triangle.
inline std::optional<RejectReason> fast_reject(const Multigraph& g) {
  if (g.size() % 3 != 0) return RejectReason{RejectReason::Kind::SizeNotDivisible};
  const auto deg = degrees(g);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (deg[v] % 2 != 0) {
      return RejectReason{RejectReason::Kind::OddVertex, v};
    }
  }
  const auto adj = adjacency(g);
  for (const auto& [e, m] : g.edges()) {
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.empty()) {
      return RejectReason{RejectReason::Kind::EdgeNotOnTriangle, 0, e};
    }
  }
  return std::nullopt;
}

namespace detail {

// Indexed view of a multigraph for the exact-cover search: present edges in
// key order, all triangles in lexicographic order, and incidence both ways.
struct TriangleIndex {
  std::vector<EdgeKey> edges;
  std::vector<int> multiplicity;
  std::vector<Triangle> triangles;
  std::vector<std::array<int, 3>> triangle_edges;
  std::vector<std::vector<int>> edge_triangles;

  explicit TriangleIndex(const Multigraph& g) {
    std::map<EdgeKey, int> index;
    for (const auto& [e, m] : g.edges()) {
      index.emplace(e, static_cast<int>(edges.size()));
      edges.push_back(e);
      multiplicity.push_back(static_cast<int>(m));
    }
    triangles = enumerate_triangles(g);
    edge_triangles.resize(edges.size());
    triangle_edges.reserve(triangles.size());
    for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
      const auto es = triangles[t].edges();
      std::array<int, 3> ids{index.at(es[0]), index.at(es[1]), index.at(es[2])};
      triangle_edges.push_back(ids);
      for (int id : ids) edge_triangles[id].push_back(t);
    }
  }
};

// Backtracking exact cover over edge copies. Branches on the uncovered edge
// with the fewest usable triangles (ties: lowest edge index), trying
// candidates in lexicographic order. Once a candidate's subtree is exhausted
// it is excluded from the sibling subtrees, which removes reorderings of the
// same multiset.
class ExactCoverSearch {
 public:
  explicit ExactCoverSearch(const TriangleIndex& index)
      : ExactCoverSearch(index, index.multiplicity) {}

  // Same triangle set, different multiplicities on the indexed edges. Used
  // when only copies of existing edges change between searches.
  ExactCoverSearch(const TriangleIndex& index, std::vector<int> multiplicity)
      : index_(index),
        residual_(std::move(multiplicity)),
        excluded_(index.triangles.size(), 0) {}

  std::optional<std::vector<int>> run() {
    chosen_.clear();
    if (search()) return chosen_;
    return std::nullopt;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  bool usable(int t) const {
    if (excluded_[t] != 0) return false;
    for (int e : index_.triangle_edges[t]) {
      if (residual_[e] <= 0) return false;
    }
    return true;
  }

  int capacity(int t) const {
    int cap = std::numeric_limits<int>::max();
    for (int e : index_.triangle_edges[t]) cap = std::min(cap, residual_[e]);
    return cap;
  }

  bool search() {
    ++nodes_;
    int best = -1;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (int e = 0; e < static_cast<int>(residual_.size()); ++e) {
      if (residual_[e] == 0) continue;
      std::size_t count = 0;
      int reach = 0;
      for (int t : index_.edge_triangles[e]) {
        if (!usable(t)) continue;
        ++count;
        reach += capacity(t);
      }
      if (reach < residual_[e]) return false;
      if (count < best_count) {
        best_count = count;
        best = e;
      }
    }
    if (best < 0) return true;

    std::vector<int> tried;
    bool found = false;
    for (int t : index_.edge_triangles[best]) {
      if (!usable(t)) continue;
      apply(t, -1);
      chosen_.push_back(t);
      if (search()) {
        found = true;
        break;
      }
      chosen_.pop_back();
      apply(t, +1);
      ++excluded_[t];
      tried.push_back(t);
    }
    for (int t : tried) --excluded_[t];
    return found;
  }

  void apply(int t, int delta) {
    for (int e : index_.triangle_edges[t]) residual_[e] += delta;
  }

  const TriangleIndex& index_;
  std::vector<int> residual_;
  std::vector<int> excluded_;
  std::vector<int> chosen_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Exact decision procedure with certificate. Deterministic: equal inputs
/// give equal certificates.
inline std::optional<Decomposition> find_decomposition(const Multigraph& g) {
  if (fast_reject(g)) return std::nullopt;
  if (g.size() == 0) return Decomposition{};
  const detail::TriangleIndex index(g);
  detail::ExactCoverSearch search(index);
  auto picked = search.run();
  if (!picked) return std::nullopt;
  Decomposition d;
  d.triangles.reserve(picked->size());
  for (int t : *picked) d.triangles.push_back(index.triangles[t]);
  d.normalize();
  return d;
}

}  // namespace tridecomp
