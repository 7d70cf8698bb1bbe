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
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tridecomp/decomposer.hpp"
#include "tridecomp/graph.hpp"
#include "tridecomp/parallel.hpp"

namespace tridecomp {

/// Multiset of existing edges to duplicate, kept sorted.
using Augmentation = std::vector<EdgeKey>;

/// g with one extra copy per listed edge. Every edge must already exist.
inline Multigraph apply_augmentation(Multigraph g, const Augmentation& aug) {
  for (const auto& e : aug) g = add_parallel(std::move(g), e);
  return g;
}

struct BoundReport {
  unsigned parity_bound = 0;
  unsigned divisibility_residue = 0;
  unsigned combined_lower_bound = 0;
};

namespace detail {

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max() / 4;

// Shortest walk lengths of each parity from `source`, over distinct
// adjacencies. dist[p][v] is the length of the shortest walk source -> v
// whose length has parity p.
inline std::array<std::vector<unsigned>, 2> parity_distances(
    const std::vector<std::vector<VertexId>>& adj, VertexId source) {
  std::array<std::vector<unsigned>, 2> dist{
      std::vector<unsigned>(adj.size(), kUnreachable),
      std::vector<unsigned>(adj.size(), kUnreachable)};
  std::deque<std::pair<VertexId, int>> queue;
  dist[0][source] = 0;
  queue.emplace_back(source, 0);
  while (!queue.empty()) {
    auto [v, p] = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (dist[1 - p][w] == kUnreachable) {
        dist[1 - p][w] = dist[p][v] + 1;
        queue.emplace_back(w, 1 - p);
      }
    }
  }
  return dist;
}

// Minimum size, for each parity of the total, of an edge multiset on
// existing adjacencies whose odd-degree set is exactly the odd vertices of g.
struct ParityCosts {
  std::array<unsigned, 2> min_size{kUnreachable, kUnreachable};
  bool has_edges = false;

  bool achievable(unsigned t) const {
    const unsigned m = min_size[t % 2];
    if (m == kUnreachable || t < m) return false;
    // Larger sizes of the same parity come from doubling any edge.
    return t == m || has_edges;
  }
};

inline constexpr std::size_t kMaxOddVertices = 20;

inline ParityCosts parity_costs(const Multigraph& g) {
  const auto adj = adjacency(g);
  const auto deg = degrees(g);
  std::vector<VertexId> odd;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (deg[v] % 2 != 0) odd.push_back(v);
  }
  if (odd.size() > kMaxOddVertices) {
    throw ScaleLimit("parity bound supports at most " +
                     std::to_string(kMaxOddVertices) + " odd vertices, got " +
                     std::to_string(odd.size()));
  }

  ParityCosts costs;
  costs.has_edges = !g.edges().empty();

  // Shortest odd closed walk anywhere in the graph.
  unsigned odd_cycle = kUnreachable;
  std::vector<std::array<std::vector<unsigned>, 2>> from(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    from[v] = parity_distances(adj, v);
    odd_cycle = std::min(odd_cycle, from[v][1][v]);
  }

  // dp[mask][p]: cheapest pairing of the odd vertices in mask by walks whose
  // lengths sum to parity p.
  const std::size_t k = odd.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::array<unsigned, 2>> dp(full + 1, {kUnreachable, kUnreachable});
  dp[0][0] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      for (int q = 0; q < 2; ++q) {
        const unsigned d = from[odd[i]][q][odd[j]];
        if (d == kUnreachable) continue;
        for (int p = 0; p < 2; ++p) {
          if (dp[rest][p] == kUnreachable) continue;
          auto& slot = dp[mask][(p + q) % 2];
          slot = std::min(slot, dp[rest][p] + d);
        }
      }
    }
  }
  if (dp[full][0] == kUnreachable && dp[full][1] == kUnreachable) {
    throw InfeasibleParity(
        "odd-degree vertices cannot be paired through existing edges");
  }
  for (int p = 0; p < 2; ++p) {
    costs.min_size[p] = dp[full][p];
    if (odd_cycle != kUnreachable && dp[full][1 - p] != kUnreachable) {
      costs.min_size[p] = std::min(costs.min_size[p], dp[full][1 - p] + odd_cycle);
    }
  }
  return costs;
}

}  // namespace detail

/// Necessary-condition bound on the augmentation size: the cheapest
/// parity fix, lifted to the first size that also makes the total divisible
/// by 3 and can still fix parity at that exact size.
inline BoundReport lower_bound(const Multigraph& g) {
  const auto costs = detail::parity_costs(g);
  BoundReport r;
  r.parity_bound = std::min(costs.min_size[0], costs.min_size[1]);
  r.divisibility_residue = static_cast<unsigned>((3 - g.size() % 3) % 3);
  // Within six steps both parities and all residues have been seen.
  for (unsigned t = r.parity_bound; t <= r.parity_bound + 6; ++t) {
    if (t % 3 == r.divisibility_residue && costs.achievable(t)) {
      r.combined_lower_bound = t;
      return r;
    }
  }
  throw InfeasibleParity("no augmentation size satisfies both parity and divisibility");
}

struct EpsilonResult {
  unsigned epsilon = 0;
  Augmentation augmentation;
  Decomposition certificate;
};

/// Optional cap on extra copies per edge; nullopt means unlimited.
using CopyCap = std::optional<unsigned>;

namespace detail {

inline std::optional<EdgeKey> edge_without_triangle(const Multigraph& g) {
  const auto adj = adjacency(g);
  for (const auto& [e, m] : g.edges()) {
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.empty()) return e;
  }
  return std::nullopt;
}

// Enumerates multisets of existing edges of a fixed size in lexicographic
// order of their sorted listing, keeping only those that make every degree
// even, and stops at the first one whose augmented graph decomposes.
class AugmentationSearch {
 public:
  AugmentationSearch(const Multigraph& g, CopyCap cap)
      : index_(g), cap_(cap), parity_(g.order(), 0), last_edge_(g.order(), -1) {
    const auto deg = degrees(g);
    for (VertexId v = 0; v < g.order(); ++v) parity_[v] = deg[v] % 2;
    for (int i = 0; i < static_cast<int>(index_.edges.size()); ++i) {
      last_edge_[index_.edges[i].u] = i;
      last_edge_[index_.edges[i].v] = i;
    }
    closing_.resize(index_.edges.size());
    for (VertexId v = 0; v < g.order(); ++v) {
      if (last_edge_[v] >= 0) closing_[last_edge_[v]].push_back(v);
    }
    odd_count_ = static_cast<int>(std::count(parity_.begin(), parity_.end(), 1));
  }

  std::optional<EpsilonResult> run(unsigned t) {
    counts_.assign(index_.edges.size(), 0);
    found_.reset();
    if (index_.edges.empty()) {
      if (t == 0 && odd_count_ == 0) found_ = EpsilonResult{};
      return found_;
    }
    descend(0, static_cast<int>(t));
    return found_;
  }

  std::size_t candidates_tried() const { return tried_; }

 private:
  bool descend(int i, int remaining) {
    if (i == static_cast<int>(index_.edges.size())) {
      if (remaining != 0 || odd_count_ != 0) return false;
      return attempt();
    }
    // Each copy fixes at most two odd vertices.
    if (odd_count_ > 2 * remaining) return false;
    const EdgeKey e = index_.edges[i];
    int most = remaining;
    if (cap_) most = std::min(most, static_cast<int>(*cap_));
    for (int c = most; c >= 0; --c) {
      set_count(i, e, c);
      bool closed_ok = true;
      for (VertexId v : closing_[i]) {
        if (parity_[v] != 0) {
          closed_ok = false;
          break;
        }
      }
      if (closed_ok && descend(i + 1, remaining - c)) {
        set_count(i, e, 0);
        return true;
      }
    }
    set_count(i, e, 0);
    return false;
  }

  void set_count(int i, const EdgeKey& e, int c) {
    if ((counts_[i] - c) % 2 != 0) {
      flip(e.u);
      flip(e.v);
    }
    counts_[i] = c;
  }

  void flip(VertexId v) {
    parity_[v] ^= 1;
    odd_count_ += parity_[v] ? 1 : -1;
  }

  bool attempt() {
    ++tried_;
    std::vector<int> mult = index_.multiplicity;
    for (std::size_t i = 0; i < mult.size(); ++i) mult[i] += counts_[i];
    ExactCoverSearch search(index_, std::move(mult));
    auto picked = search.run();
    if (!picked) return false;
    EpsilonResult r;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      for (int c = 0; c < counts_[i]; ++c) r.augmentation.push_back(index_.edges[i]);
    }
    r.epsilon = static_cast<unsigned>(r.augmentation.size());
    for (int t : *picked) r.certificate.triangles.push_back(index_.triangles[t]);
    r.certificate.normalize();
    found_ = std::move(r);
    return true;
  }

  TriangleIndex index_;
  CopyCap cap_;
  std::vector<int> parity_;
  std::vector<int> last_edge_;
  std::vector<std::vector<VertexId>> closing_;
  std::vector<int> counts_;
  int odd_count_ = 0;
  std::size_t tried_ = 0;
  std::optional<EpsilonResult> found_;
};

inline void require_edges_on_triangles(const Multigraph& g) {
  if (auto e = edge_without_triangle(g)) {
    throw EdgeNotOnTriangle("edge " + to_string(*e) + " lies on no triangle");
  }
}

}  // namespace detail

/// Lexicographically first parity-correct augmentation of exactly t copies
/// (at most cap per edge) whose result decomposes, if any.
inline std::optional<EpsilonResult> try_augmentation_of_size(const Multigraph& g,
                                                             unsigned t,
                                                             CopyCap cap = {}) {
  detail::require_edges_on_triangles(g);
  if ((g.size() + t) % 3 != 0) return std::nullopt;
  detail::AugmentationSearch search(g, cap);
  return search.run(t);
}

/// Exact minimum augmentation. Sizes are tried upward from the combined
/// lower bound in steps of 3; the first success is returned.
inline EpsilonResult epsilon_exact(const Multigraph& g, CopyCap cap = {}) {
  detail::require_edges_on_triangles(g);
  if (cap && *cap == 0) {
    if (auto d = find_decomposition(g)) return EpsilonResult{0, {}, *d};
    throw CapInfeasible("no decomposition without added copies");
  }
  const auto bound = lower_bound(g);
  // Uncapped, t = 2 * size always works: take a triangle through every edge
  // copy. Capped, no more than cap copies fit on each edge.
  const std::size_t ceiling =
      cap ? std::min<std::size_t>(*cap * g.edges().size(), 2 * g.size())
          : 2 * g.size();
  detail::AugmentationSearch search(g, cap);
  for (std::size_t t = bound.combined_lower_bound; t <= ceiling; t += 3) {
    if (auto r = search.run(static_cast<unsigned>(t))) return *r;
  }
  if (cap) {
    throw CapInfeasible("no augmentation with at most " + std::to_string(*cap) +
                        " extra copies per edge decomposes");
  }
  throw std::logic_error("uncapped augmentation search exhausted its ceiling");
}

/// Chords of a convex n-gon triangulation, sorted. The outer cycle is
/// 0,1,...,n-1.
struct MopCode {
  std::size_t n = 3;
  std::vector<EdgeKey> chords;

  friend auto operator<=>(const MopCode&, const MopCode&) = default;
};

inline bool chords_cross(const EdgeKey& x, const EdgeKey& y) {
  return (x.u < y.u && y.u < x.v && x.v < y.v) ||
         (y.u < x.u && x.u < y.v && y.v < x.v);
}

inline Multigraph mop_graph(const MopCode& code) {
  Multigraph g = cycle_graph(code.n);
  for (const auto& c : code.chords) g.add_edge(c.u, c.v);
  return g;
}

namespace detail {

// Triangulations of the polygon on the vertex run [lo, hi]: the triangle on
// side {lo, hi} has apex k, and both sides recurse.
inline void triangulations(VertexId lo, VertexId hi,
                           std::vector<std::vector<EdgeKey>>& out) {
  out.clear();
  if (hi - lo < 2) {
    out.emplace_back();
    return;
  }
  std::vector<std::vector<EdgeKey>> left, right;
  for (VertexId k = lo + 1; k < hi; ++k) {
    triangulations(lo, k, left);
    triangulations(k, hi, right);
    for (const auto& a : left) {
      for (const auto& b : right) {
        std::vector<EdgeKey> chords = a;
        chords.insert(chords.end(), b.begin(), b.end());
        if (k - lo >= 2) chords.push_back(EdgeKey{lo, k});
        if (hi - k >= 2) chords.push_back(EdgeKey{k, hi});
        out.push_back(std::move(chords));
      }
    }
  }
}

}  // namespace detail

/// Every triangulation of the convex n-gon exactly once, Catalan(n-2) total,
/// in lexicographic order of chord lists.
inline std::vector<MopCode> enumerate_mops(std::size_t n) {
  if (n < 3) throw std::domain_error("a polygon needs at least 3 vertices");
  std::vector<std::vector<EdgeKey>> raw;
  detail::triangulations(0, static_cast<VertexId>(n - 1), raw);
  std::vector<MopCode> out;
  out.reserve(raw.size());
  for (auto& chords : raw) {
    std::sort(chords.begin(), chords.end());
    out.push_back(MopCode{n, std::move(chords)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr std::size_t kDefaultSweepCeiling = 12;

struct ClassExtremum {
  unsigned value = 0;
  MopCode witness;
};

namespace detail {

inline void check_sweep_size(std::size_t n, std::size_t ceiling) {
  if (n < 3) throw std::domain_error("a polygon needs at least 3 vertices");
  if (n > ceiling) {
    throw ScaleLimit("class sweep at n=" + std::to_string(n) +
                     " exceeds the ceiling of " + std::to_string(ceiling));
  }
}

}  // namespace detail

/// Minimum of the exact augmentation number over all MOPs of order n, with
/// the lexicographically least chord set among those attaining it.
inline ClassExtremum epsilon_class_exact(std::size_t n,
                                         std::size_t ceiling = kDefaultSweepCeiling) {
  detail::check_sweep_size(n, ceiling);
  const auto mops = enumerate_mops(n);
  const std::size_t size = 2 * n - 3;
  // Every MOP has the same size, so candidate values share a residue; sweep
  // them level by level and stop at the first level anyone reaches.
  for (std::size_t t = (3 - size % 3) % 3; t <= 2 * size; t += 3) {
    auto hits = parallel_map(mops.size(), [&](std::size_t i) {
      const Multigraph g = mop_graph(mops[i]);
      if (lower_bound(g).combined_lower_bound > t) return false;
      return try_augmentation_of_size(g, static_cast<unsigned>(t)).has_value();
    });
    for (std::size_t i = 0; i < mops.size(); ++i) {
      if (hits[i]) return ClassExtremum{static_cast<unsigned>(t), mops[i]};
    }
  }
  throw std::logic_error("class sweep found no decomposable augmentation");
}

/// Maximum over all MOPs of order n of the augmentation number with at most
/// `cap` extra copies per edge (default: one, i.e. multiplicity two).
inline ClassExtremum xi_class_exact(std::size_t n,
                                    std::size_t ceiling = kDefaultSweepCeiling,
                                    CopyCap cap = 1U) {
  detail::check_sweep_size(n, ceiling);
  const auto mops = enumerate_mops(n);
  auto values = parallel_map(mops.size(), [&](std::size_t i) {
    return epsilon_exact(mop_graph(mops[i]), cap).epsilon;
  });
  ClassExtremum best{values[0], mops[0]};
  for (std::size_t i = 1; i < mops.size(); ++i) {
    if (values[i] > best.value) best = ClassExtremum{values[i], mops[i]};
  }
  return best;
}

}  // namespace tridecomp
