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
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tridecomp/analysis.hpp"
#include "tridecomp/augment.hpp"
#include "tridecomp/decomposer.hpp"
#include "tridecomp/graph.hpp"

namespace tridecomp {

/// A constructed graph together with the augmentation the construction
/// prescribes and a decomposition of the augmented multigraph.
struct ConstructionResult {
  std::string family;
  std::vector<long> params;
  Multigraph graph;
  Augmentation augmentation;
  Decomposition certificate;
  unsigned claimed_epsilon = 0;
  std::optional<std::vector<VertexId>> outer_cycle;
  std::optional<std::vector<std::vector<VertexId>>> faces;
  std::optional<RotationSystem> rotation;

  Multigraph augmented() const { return apply_augmentation(graph, augmentation); }
};

/// First violated invariant of a construction, or nullopt when the graph is
/// simple, the augmentation sits on existing edges, its size matches the
/// claim, the claim has the forced residue, and the certificate is valid.
inline std::optional<std::string> construction_issue(const ConstructionResult& r) {
  if (!r.graph.is_simple()) return "graph is not simple";
  for (const auto& e : r.augmentation) {
    if (!r.graph.has_edge(e)) {
      return "augmentation edge " + to_string(e) + " is not an edge of the graph";
    }
  }
  if (r.augmentation.size() != r.claimed_epsilon) {
    return "augmentation has " + std::to_string(r.augmentation.size()) +
           " edges but epsilon is " + std::to_string(r.claimed_epsilon);
  }
  if ((r.graph.size() + r.claimed_epsilon) % 3 != 0) {
    return "epsilon " + std::to_string(r.claimed_epsilon) +
           " does not make the size divisible by 3";
  }
  if (auto issue = coverage_issue(r.augmented(), r.certificate)) {
    return issue->describe();
  }
  return std::nullopt;
}

namespace detail {

// Accumulates a construction: simple edges, doubled edges, certificate.
struct Builder {
  Multigraph graph;
  Augmentation augmentation;
  std::vector<Triangle> triangles;

  explicit Builder(std::size_t n) : graph(n) {}

  void edge(VertexId a, VertexId b) {
    if (!graph.adjacent(a, b)) graph.add_edge(a, b);
  }
  void twice(VertexId a, VertexId b) {
    edge(a, b);
    augmentation.push_back(EdgeKey::of(a, b));
  }
  void triangle(VertexId a, VertexId b, VertexId c) {
    triangles.push_back(Triangle::of(a, b, c));
  }

  ConstructionResult finish(std::string family, std::vector<long> params) {
    ConstructionResult r;
    r.family = std::move(family);
    r.params = std::move(params);
    r.graph = std::move(graph);
    std::sort(augmentation.begin(), augmentation.end());
    r.augmentation = std::move(augmentation);
    r.claimed_epsilon = static_cast<unsigned>(r.augmentation.size());
    r.certificate.triangles = std::move(triangles);
    r.certificate.normalize();
    return r;
  }
};

using Pos = std::pair<unsigned, unsigned>;
using PosTri = std::array<unsigned, 3>;

// Hand-drawn triangulations of small cycles, by position on the cycle.
// `doubled` lists chords that receive a second copy.
struct BaseTemplate {
  std::vector<Pos> chords;
  std::vector<Pos> doubled;
  std::vector<PosTri> triangles;
};

inline const std::map<std::size_t, BaseTemplate>& mop_bases() {
  static const std::map<std::size_t, BaseTemplate> bases = {
      // residue 0
      {3, {{}, {}, {{0, 1, 2}}}},
      {6, {{{0, 2}, {2, 4}, {0, 4}}, {}, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}}},
      {9,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {0, 4}, {4, 8}},
        {},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {0, 4, 8}}}},
      {12,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {0, 10}, {0, 4}, {4, 8}, {0, 8}},
        {},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {10, 11, 0},
         {0, 4, 8}}}},
      // residue 1
      {4, {{{0, 2}}, {{0, 2}}, {{0, 1, 2}, {0, 2, 3}}}},
      {7,
       {{{0, 2}, {2, 4}, {4, 6}, {0, 4}},
        {{4, 6}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 4, 6}}}},
      {10,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {0, 8}, {0, 4}, {4, 8}},
        {{0, 8}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 0}, {0, 4, 8}}}},
      {13,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 12}, {4, 12}, {0, 4},
         {6, 12}, {6, 10}},
        {{10, 12}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {10, 11, 12},
         {0, 4, 12}, {6, 10, 12}}}},
      // residue 2
      {5, {{{0, 2}, {2, 4}}, {{0, 2}, {2, 4}}, {{0, 1, 2}, {2, 3, 4}, {0, 2, 4}}}},
      {8,
       {{{0, 2}, {2, 4}, {4, 6}, {0, 6}, {0, 4}},
        {{0, 2}, {2, 4}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}, {0, 2, 4}}}},
      {11,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {4, 10}, {0, 4}, {6, 10}},
        {{4, 10}, {4, 6}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {0, 4, 10},
         {4, 6, 10}}}},
      {14,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 12}, {0, 12}, {0, 4},
         {4, 8}, {0, 8}, {0, 10}},
        {{8, 10}, {0, 8}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {10, 11, 12},
         {12, 13, 0}, {0, 4, 8}, {0, 8, 10}}}},
      {17,
       {{{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 10}, {10, 12}, {12, 14}, {14, 16},
         {0, 4}, {4, 16}, {6, 16}, {6, 10}, {10, 16}, {12, 16}},
        {{10, 12}, {10, 16}},
        {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}, {8, 9, 10}, {10, 11, 12},
         {12, 13, 14}, {14, 15, 16}, {0, 4, 16}, {6, 10, 16}, {10, 12, 16}}}},
  };
  return bases;
}

// Triangulates the inside of a cycle (given as a vertex list in cyclic
// order) layer by layer. Three states describe the current inner cycle:
//   uncovered: no cycle edge is in the certificate yet;
//   one-open:  all edges covered except the closing edge back to c[0];
//   covered:   every cycle edge is already covered.
// Doubled edges only ever appear in the base templates, so the number of
// doublings is the residue of the original cycle length.
class ConcentricTriangulator {
 public:
  explicit ConcentricTriangulator(Builder& b) : b_(b) {}

  void uncovered(const std::vector<VertexId>& c) {
    const std::size_t L = c.size();
    const auto& bases = mop_bases();
    if (auto it = bases.find(L); it != bases.end()) {
      apply(it->second, c);
      return;
    }
    if (L < 3) throw std::logic_error("cycle of length " + std::to_string(L));
    std::vector<VertexId> inner;
    if (L % 2 == 0) {
      for (std::size_t j = 0; j < L / 2; ++j) {
        const VertexId a = c[2 * j], m = c[2 * j + 1], z = c[(2 * j + 2) % L];
        b_.edge(a, z);
        b_.triangle(a, m, z);
        inner.push_back(a);
      }
      covered(inner);
    } else {
      for (std::size_t j = 0; j + 2 < L; j += 2) {
        b_.edge(c[j], c[j + 2]);
        b_.triangle(c[j], c[j + 1], c[j + 2]);
        inner.push_back(c[j]);
      }
      inner.push_back(c[L - 1]);
      one_open(inner);
    }
  }

 private:
  // The closing edge d[M-1]-d[0] is still open: cover it with a triangle
  // reaching back to d[M-3], cutting off the face d[M-3], d[M-2], d[M-1].
  void one_open(const std::vector<VertexId>& d) {
    const std::size_t M = d.size();
    if (M < 4) throw std::logic_error("open cycle of length " + std::to_string(M));
    b_.edge(d[0], d[M - 3]);
    b_.edge(d[M - 3], d[M - 1]);
    b_.triangle(d[0], d[M - 3], d[M - 1]);
    covered(std::vector<VertexId>(d.begin(), d.begin() + (M - 2)));
  }

  void covered(const std::vector<VertexId>& d) {
    const std::size_t M = d.size();
    if (M == 3) return;  // a face, nothing left to cover
    if (M < 3) throw std::logic_error("covered cycle of length " + std::to_string(M));
    if (M % 2 == 0) {
      // Skip every other vertex; the cut-off faces stay out of the
      // certificate and the new chords form an uncovered cycle.
      std::vector<VertexId> inner;
      for (std::size_t j = 0; j < M / 2; ++j) {
        b_.edge(d[2 * j], d[(2 * j + 2) % M]);
        inner.push_back(d[2 * j]);
      }
      uncovered(inner);
    } else {
      b_.edge(d[0], d[M - 4]);
      b_.edge(d[M - 4], d[M - 2]);
      b_.edge(d[M - 2], d[0]);
      b_.triangle(d[0], d[M - 4], d[M - 2]);
      covered(std::vector<VertexId>(d.begin(), d.begin() + (M - 3)));
    }
  }

  void apply(const BaseTemplate& t, const std::vector<VertexId>& c) {
    for (auto [p, q] : t.chords) b_.edge(c[p], c[q]);
    for (auto [p, q] : t.doubled) b_.twice(c[p], c[q]);
    for (auto [p, q, r] : t.triangles) b_.triangle(c[p], c[q], c[r]);
  }

  Builder& b_;
};

inline std::vector<VertexId> iota_cycle(std::size_t n, VertexId first = 0) {
  std::vector<VertexId> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = first + static_cast<VertexId>(i);
  return c;
}

inline void add_cycle(Builder& b, const std::vector<VertexId>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) b.edge(c[i], c[(i + 1) % c.size()]);
}

}  // namespace detail

/// Maximal outerplanar graph on the cycle 0..n-1 needing exactly n mod 3
/// doubled edges.
inline ConstructionResult mop_construct(std::size_t n) {
  if (n < 3) throw std::domain_error("mop needs n >= 3");
  detail::Builder b(n);
  const auto cycle = detail::iota_cycle(n);
  detail::add_cycle(b, cycle);
  detail::ConcentricTriangulator(b).uncovered(cycle);
  auto r = b.finish("mop", {static_cast<long>(n)});
  r.outer_cycle = cycle;
  return r;
}

/// C_n with every chord from vertex 0; each chord is doubled.
inline ConstructionResult fan(std::size_t n) {
  if (n < 3) throw std::domain_error("fan needs n >= 3");
  detail::Builder b(n);
  const auto cycle = detail::iota_cycle(n);
  detail::add_cycle(b, cycle);
  for (VertexId i = 2; i + 1 < n; ++i) b.twice(0, i);
  for (VertexId i = 1; i + 1 < n; ++i) b.triangle(0, i, i + 1);
  auto r = b.finish("fan", {static_cast<long>(n)});
  r.outer_cycle = cycle;
  return r;
}

/// MOP of order n needing (n mod 3) + 3r doubled edges: a fan on
/// 0..3r+1 whose chords are all doubled, the closing chord {0, 3r+1} doubled
/// as well, and the remaining cycle triangulated like mop_construct.
inline ConstructionResult intermediate(std::size_t n, std::size_t r) {
  if (n < 3) throw std::domain_error("intermediate needs n >= 3");
  const std::size_t target = n % 3 + 3 * r;
  if (target > n - 3) {
    throw std::domain_error("epsilon " + std::to_string(target) +
                            " exceeds n - 3 = " + std::to_string(n - 3));
  }
  detail::Builder b(n);
  const auto cycle = detail::iota_cycle(n);
  detail::add_cycle(b, cycle);
  if (r == 0) {
    detail::ConcentricTriangulator(b).uncovered(cycle);
  } else {
    const auto hinge = static_cast<VertexId>(3 * r + 1);
    for (VertexId i = 2; i < hinge; ++i) b.twice(0, i);
    for (VertexId i = 1; i < hinge; ++i) b.triangle(0, i, i + 1);
    b.twice(0, hinge);
    std::vector<VertexId> rest{0};
    for (VertexId v = hinge; v < n; ++v) rest.push_back(v);
    detail::ConcentricTriangulator(b).uncovered(rest);
  }
  auto res = b.finish("intermediate", {static_cast<long>(n), static_cast<long>(r)});
  res.outer_cycle = cycle;
  return res;
}

/// k concentric m-cycles. The innermost is mop_construct(m); each further
/// cycle o joins the previous one p by edges p_i-o_i and p_i-o_{i+1}, and the
/// triangles (p_i, o_i, o_{i+1}) enter the certificate. Layer j occupies
/// vertices j*m .. j*m+m-1, so dropping the outermost layer is truncation.
inline ConstructionResult kop_construct(std::size_t m, std::size_t k) {
  if (m < 3) throw std::domain_error("kop needs m >= 3");
  if (k < 1) throw std::domain_error("kop needs k >= 1");
  detail::Builder b(m * k);
  const auto inner = detail::iota_cycle(m);
  detail::add_cycle(b, inner);
  detail::ConcentricTriangulator(b).uncovered(inner);
  for (std::size_t j = 1; j < k; ++j) {
    const auto base = static_cast<VertexId>(j * m);
    const auto prev = static_cast<VertexId>((j - 1) * m);
    for (VertexId i = 0; i < m; ++i) {
      const VertexId o = base + i, o_next = base + (i + 1) % m;
      const VertexId p = prev + i;
      b.edge(o, o_next);
      b.edge(p, o);
      b.edge(p, o_next);
      b.triangle(p, o, o_next);
    }
  }
  auto r = b.finish("kop", {static_cast<long>(m), static_cast<long>(k)});
  r.outer_cycle = detail::iota_cycle(m, static_cast<VertexId>((k - 1) * m));
  return r;
}

/// Eulerian Hamiltonian maximal planar graph of order n. None exists for
/// n = 4, 5, 7.
inline ConstructionResult hmp_construct(std::size_t n) {
  if (n == 4 || n == 5 || n == 7) {
    throw ConstructionUnavailable(
        "no Eulerian Hamiltonian maximal planar graph of order " +
        std::to_string(n) + " exists (n = 4, 5, 7 are the exceptions)");
  }
  if (n < 6) {
    throw ConstructionUnavailable("hmp needs n >= 6 (n = 4, 5, 7 are the exceptions)");
  }
  detail::Builder b(n);
  std::vector<std::vector<VertexId>> faces;
  const auto inner_apex = static_cast<VertexId>(n - 2);
  const auto outer_apex = static_cast<VertexId>(n - 1);
  auto wheel = [&](VertexId apex, const std::vector<VertexId>& rim) {
    for (std::size_t i = 0; i < rim.size(); ++i) {
      const VertexId x = rim[i], y = rim[(i + 1) % rim.size()];
      b.edge(apex, x);
      faces.push_back({x, y, apex});
    }
  };
  const auto cycle = detail::iota_cycle(n - 2);
  detail::add_cycle(b, cycle);
  if (n % 2 == 0) {
    wheel(inner_apex, cycle);
    wheel(outer_apex, cycle);
  } else {
    const auto last = static_cast<VertexId>(n - 3);
    b.edge(0, 2);
    faces.push_back({0, 1, 2});
    std::vector<VertexId> inner_rim{0};
    for (VertexId v = 2; v <= last; ++v) inner_rim.push_back(v);
    wheel(inner_apex, inner_rim);
    b.edge(1, last);
    b.edge(1, 3);
    b.edge(3, last);
    faces.push_back({0, 1, last});
    faces.push_back({1, 2, 3});
    faces.push_back({1, 3, last});
    std::vector<VertexId> outer_rim;
    for (VertexId v = 3; v <= last; ++v) outer_rim.push_back(v);
    wheel(outer_apex, outer_rim);
  }
  auto r = b.finish("hmp", {static_cast<long>(n)});
  auto d = find_decomposition(r.graph);
  if (!d) throw std::logic_error("hmp graph of order " + std::to_string(n) + " did not decompose");
  r.certificate = *d;
  r.faces = std::move(faces);
  return r;
}

/// Simple-clique 3-tree of order n needing exactly three doubled edges.
/// K4 on 0..3, vertex 4 inside face {1,2,3}, then a_1 = 5, a_2 = 6, ...
/// each stacked on the face {1, 2, previous}.
inline ConstructionResult sc3_construct(std::size_t n) {
  if (n < 4) throw std::domain_error("sc3 needs n >= 4");
  detail::Builder b(n);
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (VertexId x = 0; x < 4; ++x) {
    for (VertexId y = x + 1; y < 4; ++y) b.edge(x, y);
  }
  auto stack_on = [&](VertexId v, std::array<VertexId, 3> f) {
    auto it = std::find(faces.begin(), faces.end(), f);
    if (it == faces.end()) throw std::logic_error("stacking on a missing face");
    faces.erase(it);
    for (VertexId x : f) b.edge(v, x);
    auto sorted = [](VertexId p, VertexId q, VertexId r) {
      const auto t = Triangle::of(p, q, r);
      return std::array<VertexId, 3>{t.a, t.b, t.c};
    };
    faces.push_back(sorted(f[0], f[1], v));
    faces.push_back(sorted(f[0], f[2], v));
    faces.push_back(sorted(f[1], f[2], v));
  };

  constexpr VertexId v1 = 0, v2 = 1, v3 = 2, v4 = 3, v = 4;
  auto a = [](std::size_t j) { return static_cast<VertexId>(4 + j); };

  if (n >= 5) stack_on(v, {1, 2, 3});
  for (std::size_t j = 1; 4 + j < n; ++j) {
    const VertexId prev = j == 1 ? v : a(j - 1);
    stack_on(a(j), {v2, v3, prev});
  }

  if (n == 4) {
    b.twice(0, 1);
    b.twice(0, 2);
    b.twice(0, 3);
    b.triangle(0, 1, 2);
    b.triangle(0, 1, 3);
    b.triangle(0, 2, 3);
  } else if (n == 5) {
    b.twice(0, 1);
    b.twice(1, 2);
    b.twice(2, 4);
    b.triangle(0, 1, 2);
    b.triangle(0, 1, 3);
    b.triangle(1, 2, 4);
    b.triangle(2, 3, 4);
  } else {
    const std::size_t i = n - 5;
    b.twice(v1, v2);
    b.twice(v2, v3);
    b.triangle(v1, v2, v4);
    b.triangle(v1, v2, v3);
    if (i % 2 == 0) {
      b.twice(v3, a(i));
      b.triangle(v2, v3, a(i));
      b.triangle(v3, a(i), a(i - 1));
      for (std::size_t j = 1; j <= (i - 2) / 2; ++j) {
        b.triangle(a(2 * j + 1), a(2 * j), v2);
        b.triangle(a(2 * j), a(2 * j - 1), v3);
      }
    } else {
      b.twice(v2, a(i));
      b.triangle(v2, v3, a(i));
      if (i > 1) {
        b.triangle(v2, a(i), a(i - 1));
        for (std::size_t j = 2; j <= (i - 1) / 2; ++j) {
          b.triangle(a(2 * j), a(2 * j - 1), v3);
          b.triangle(a(2 * j - 1), a(2 * j - 2), v2);
        }
        b.triangle(a(2), a(1), v3);
      }
    }
    b.triangle(a(1), v2, v);
    b.triangle(v, v4, v3);
  }
  auto r = b.finish("sc3", {static_cast<long>(n)});
  std::vector<std::vector<VertexId>> face_list;
  for (const auto& f : faces) face_list.push_back({f[0], f[1], f[2]});
  std::sort(face_list.begin(), face_list.end());
  r.faces = std::move(face_list);
  return r;
}

/// Simple-clique 2-tree of order n (n divisible by 3) that decomposes with
/// no added edges. Starting from the triangle 0,1,2, each round takes the
/// lexicographically smallest outer edge {a,b}, stacks w on it, then stacks
/// x on {a,w} and y on {b,w}; the triangles (a,w,x) and (b,w,y) enter the
/// certificate.
inline ConstructionResult sc2_tree_construct(std::size_t n) {
  if (n < 3 || n % 3 != 0) {
    throw std::domain_error("sc2tree needs n >= 3 divisible by 3; residues 1 and 2 "
                            "are available as sc2seed fixtures");
  }
  detail::Builder b(n);
  std::vector<VertexId> outer{0, 1, 2};
  detail::add_cycle(b, outer);
  b.triangle(0, 1, 2);
  for (VertexId w = 3; w < n; w += 3) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < outer.size(); ++i) {
      const auto e = EdgeKey::of(outer[i], outer[(i + 1) % outer.size()]);
      const auto f = EdgeKey::of(outer[best], outer[(best + 1) % outer.size()]);
      if (e < f) best = i;
    }
    const VertexId p = outer[best], q = outer[(best + 1) % outer.size()];
    const VertexId x = w + 1, y = w + 2;
    b.edge(p, w);
    b.edge(q, w);
    b.edge(p, x);
    b.edge(w, x);
    b.edge(q, y);
    b.edge(w, y);
    b.triangle(p, w, x);
    b.triangle(q, w, y);
    outer.insert(outer.begin() + static_cast<long>(best) + 1, {x, w, y});
  }
  auto r = b.finish("sc2tree", {static_cast<long>(n)});
  r.outer_cycle = outer;
  return r;
}

/// Seed graphs for simple-clique 2-trees of residue 1 and 2.
inline ConstructionResult sc2_seed(unsigned residue) {
  if (residue == 1) {
    detail::Builder b(4);
    detail::add_cycle(b, {0, 1, 2, 3});
    b.twice(1, 3);
    b.triangle(0, 1, 3);
    b.triangle(1, 2, 3);
    auto r = b.finish("sc2seed", {1});
    r.outer_cycle = std::vector<VertexId>{0, 1, 2, 3};
    return r;
  }
  if (residue == 2) {
    detail::Builder b(5);
    detail::add_cycle(b, {1, 2, 3, 0, 4});
    b.twice(0, 2);
    b.twice(0, 1);
    b.triangle(0, 1, 2);
    b.triangle(0, 2, 3);
    b.triangle(0, 1, 4);
    auto r = b.finish("sc2seed", {2});
    r.outer_cycle = std::vector<VertexId>{1, 2, 3, 0, 4};
    return r;
  }
  throw std::domain_error("sc2seed residue must be 1 or 2");
}

/// An edge drawn on a picture: endpoints plus the direction in which it
/// leaves each endpoint. Parallel copies get copy indices in listing order.
struct DrawnEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::array<double, 2> u_dir{};
  std::array<double, 2> v_dir{};
};

/// Rotation system read off a drawing: ends around each vertex sorted
/// counterclockwise by leaving direction, starting from the positive x axis.
inline RotationSystem rotation_from_drawing(std::size_t order,
                                            const std::vector<DrawnEdge>& edges) {
  std::vector<std::vector<std::pair<double, EdgeEnd>>> around(order);
  std::map<EdgeKey, unsigned> copies;
  for (const auto& e : edges) {
    const unsigned copy = copies[EdgeKey::of(e.u, e.v)]++;
    around[e.u].push_back({std::atan2(e.u_dir[1], e.u_dir[0]), EdgeEnd{e.v, copy}});
    around[e.v].push_back({std::atan2(e.v_dir[1], e.v_dir[0]), EdgeEnd{e.u, copy}});
  }
  RotationSystem r;
  r.rotations.resize(order);
  for (std::size_t v = 0; v < order; ++v) {
    std::sort(around[v].begin(), around[v].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [angle, end] : around[v]) r.rotations[v].push_back(end);
  }
  return r;
}

namespace detail {

using Point = std::array<double, 2>;

// Collects edges of a torus drawing. Straight edges leave each endpoint
// toward the other; wrapping edges leave toward the point where they cross
// the border of the square. `at` overrides where an endpoint sits, for a
// vertex drawn on the border.
struct TorusDrawing {
  std::vector<Point> where;
  std::vector<DrawnEdge> edges;
  std::vector<std::pair<VertexId, VertexId>> doubled;

  static Point toward(Point from, Point to) { return {to[0] - from[0], to[1] - from[1]}; }

  void line(VertexId u, VertexId v) {
    edges.push_back({u, v, toward(where[u], where[v]), toward(where[v], where[u])});
  }
  void line_at(VertexId u, Point u_at, VertexId v, Point v_at) {
    edges.push_back({u, v, toward(u_at, v_at), toward(v_at, u_at)});
  }
  void wrap(VertexId u, Point u_stub, VertexId v, Point v_stub) {
    edges.push_back({u, v, toward(where[u], u_stub), toward(where[v], v_stub)});
  }
  void twice(VertexId u, VertexId v) { doubled.emplace_back(u, v); }

  ConstructionResult finish(long n) const {
    Builder b(where.size());
    for (const auto& e : edges) b.edge(e.u, e.v);
    for (auto [u, v] : doubled) b.twice(u, v);
    auto r = b.finish("sf", {n});
    auto d = find_decomposition(r.augmented());
    if (!d) throw std::logic_error("toroidal fixture does not decompose");
    r.certificate = *d;
    r.rotation = rotation_from_drawing(where.size(), edges);
    return r;
  }
};

inline ConstructionResult sf7() {
  TorusDrawing t;
  t.where = {{0, 1.3}, {-1, .7}, {1, .7}, {0, 0}, {-1, -.7}, {1, -.7}, {0, -1.3}};
  for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{
           {0, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 4}, {4, 6}, {6, 5}, {5, 2}}) {
    t.line(u, v);
  }
  t.wrap(0, {0, 2}, 6, {0, -2});
  t.wrap(6, {-.4, -2}, 1, {-.4, 2});
  t.wrap(6, {-1, -2}, 2, {2, 1.4});
  t.wrap(0, {.5, 2}, 5, {.5, -2});
  t.wrap(5, {2, -.7}, 4, {-2, -.7});
  t.wrap(2, {2, .7}, 1, {-2, .7});
  t.wrap(1, {-2, .1}, 5, {2, .1});
  t.wrap(2, {2, 2}, 4, {-2, -2});
  t.wrap(4, {-2, -1.3}, 0, {1.2, 2});
  t.twice(0, 6);
  t.twice(0, 5);
  t.twice(4, 5);
  t.twice(1, 5);
  return t.finish(7);
}

inline ConstructionResult sf8() {
  TorusDrawing t;
  t.where = {{-.5, 1}, {.5, 1}, {-1, 0}, {0, 0}, {1, 0}, {-1.5, -1}, {-.5, -1}, {.5, -1}};
  for (auto [u, v] : std::vector<std::pair<VertexId, VertexId>>{
           {4, 1}, {1, 0}, {0, 2}, {2, 5}, {5, 6}, {6, 7}, {7, 4}, {4, 3}, {3, 7}}) {
    t.line(u, v);
  }
  t.wrap(5, {-2, -1.3}, 1, {1.2, 1.5});
  t.wrap(5, {-2, -1}, 7, {1.5, -1});
  t.wrap(5, {-1, -1.5}, 0, {-1, 1.5});
  t.wrap(5, {-1.7, -1.5}, 4, {1.5, 1});
  t.wrap(6, {-.5, -1.5}, 0, {-.5, 1.5});
  t.wrap(6, {0, -1.5}, 1, {0, 1.5});
  t.wrap(1, {.5, 1.5}, 7, {.5, -1.5});
  t.wrap(7, {1.5, -.5}, 2, {-2, -.5});
  t.wrap(2, {-2, 0}, 4, {1.5, 0});
  t.wrap(0, {-2, .25}, 4, {1.5, .25});
  t.twice(0, 6);
  t.twice(1, 6);
  return t.finish(8);
}

inline ConstructionResult sf9() {
  // Vertex 3 sits on the left/right border and is drawn twice.
  TorusDrawing t;
  const Point east{3, 0}, west{-3, 0};
  t.where = {{-2, 1}, {0, 1}, {2, 1}, east, {-1, 0}, {1, 0}, {-2, -1}, {0, -1}, {2, -1}};
  t.line(0, 1);
  t.line(1, 2);
  t.line_at(2, t.where[2], 3, east);
  t.line_at(3, east, 8, t.where[8]);
  t.line(8, 7);
  t.line(7, 6);
  t.line_at(6, t.where[6], 3, west);
  t.line_at(3, west, 0, t.where[0]);
  t.line_at(4, t.where[4], 3, west);
  t.line(0, 4);
  t.line(4, 6);
  t.line(8, 5);
  t.line_at(5, t.where[5], 3, east);
  t.wrap(8, {3, -1}, 6, {-3, -1});
  t.wrap(2, {3, 1}, 0, {-3, 1});
  t.wrap(0, {-3, 2}, 8, {3, -2});
  t.wrap(2, {2, 2}, 8, {2, -2});
  t.wrap(0, {-2, 2}, 6, {-2, -2});
  t.wrap(1, {0, 2}, 7, {0, -2});
  t.wrap(6, {-1, -2}, 1, {-1, 2});
  t.wrap(7, {1, -2}, 2, {1, 2});
  t.twice(0, 3);
  t.twice(3, 4);
  t.twice(0, 6);
  t.twice(1, 7);
  t.twice(1, 6);
  t.twice(2, 7);
  return t.finish(9);
}

}  // namespace detail

/// Toroidal graphs with every vertex on one face, for n = 7, 8, 9, with the
/// doubled edges of their drawings as augmentation.
inline ConstructionResult sf_fixture(std::size_t n) {
  switch (n) {
    case 7:
      return detail::sf7();
    case 8:
      return detail::sf8();
    case 9:
      return detail::sf9();
    default:
      throw NotAFixture("toroidal fixtures exist only for n = 7, 8, 9 (got " +
                        std::to_string(n) + ")");
  }
}

}  // namespace tridecomp
