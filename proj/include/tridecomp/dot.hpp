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

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tridecomp/families.hpp"

namespace tridecomp {

/// Graphviz rendering of a construction. Every edge copy of the augmented
/// multigraph is drawn separately and colored by the certificate triangle
/// that uses it; copies no triangle claims are drawn gray and dashed.
inline std::string to_dot(const ConstructionResult& r) {
  static const std::array<const char*, 12> palette = {
      "red",    "blue",  "forestgreen", "orange", "purple",     "brown",
      "deeppink", "cyan4", "goldenrod",   "navy",   "darkviolet", "olivedrab"};

  // Hand out the copies of each edge to the triangles covering it, in
  // certificate order.
  std::map<EdgeKey, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < r.certificate.triangles.size(); ++i) {
    for (const auto& e : r.certificate.triangles[i].edges()) owners[e].push_back(i);
  }

  std::ostringstream out;
  out << "graph \"" << r.family;
  for (long p : r.params) out << "_" << p;
  out << "\" {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < r.graph.order(); ++v) out << "  " << v << ";\n";
  const Multigraph h = r.augmented();
  for (const auto& [e, m] : h.edges()) {
    const auto& who = owners[e];
    for (unsigned c = 0; c < m; ++c) {
      out << "  " << e.u << " -- " << e.v;
      if (c < who.size()) {
        out << " [color=" << palette[who[c] % palette.size()] << ", label=\"t"
            << who[c] << "\"";
      } else {
        out << " [color=gray, style=dashed";
      }
      if (c >= r.graph.multiplicity(e)) out << ", penwidth=2";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace tridecomp
