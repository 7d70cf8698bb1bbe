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

// JSON interchange. Requires nlohmann/json on the include path.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tridecomp/analysis.hpp"
#include "tridecomp/augment.hpp"
#include "tridecomp/decomposer.hpp"
#include "tridecomp/families.hpp"
#include "tridecomp/graph.hpp"

namespace tridecomp {

using Json = nlohmann::json;

namespace detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

inline std::uint64_t as_index(const Json& j, const std::string& what) {
  expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0),
         what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline VertexId as_vertex(const Json& j, std::size_t order, const std::string& what) {
  const auto v = as_index(j, what);
  expect(v < order, what + " " + std::to_string(v) + " out of range for order " +
                        std::to_string(order));
  return static_cast<VertexId>(v);
}

inline EdgeKey as_pair(const Json& j, std::size_t order, const std::string& what) {
  expect(j.is_array() && j.size() == 2, what + " must be a pair [u, v]");
  const VertexId u = as_vertex(j[0], order, what + " endpoint");
  const VertexId v = as_vertex(j[1], order, what + " endpoint");
  expect(u != v, what + " is a loop");
  return EdgeKey::of(u, v);
}

}  // namespace detail

inline Json to_json(const EdgeKey& e) { return Json::array({e.u, e.v}); }
inline Json to_json(const Triangle& t) { return Json::array({t.a, t.b, t.c}); }

inline Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& [e, m] : g.edges()) edges.push_back(Json::array({e.u, e.v, m}));
  return Json{{"order", g.order()}, {"edges", edges}};
}

/// Reads {"order": n, "edges": [[u, v, mult], ...]} with u < v, mult >= 1 and
/// no repeated pair.
inline Multigraph graph_from_json(const Json& j) {
  detail::expect(j.is_object(), "graph must be an object");
  detail::expect(j.contains("order"), "graph is missing \"order\"");
  detail::expect(j.contains("edges") && j["edges"].is_array(),
                 "graph is missing an \"edges\" array");
  const auto n = detail::as_index(j["order"], "order");
  Multigraph g(n);
  std::set<EdgeKey> seen;
  for (const auto& row : j["edges"]) {
    detail::expect(row.is_array() && row.size() == 3, "edge entries must be [u, v, mult]");
    const VertexId u = detail::as_vertex(row[0], n, "edge endpoint");
    const VertexId v = detail::as_vertex(row[1], n, "edge endpoint");
    detail::expect(u < v, "edge [" + std::to_string(u) + ", " + std::to_string(v) +
                              "] must list the smaller endpoint first");
    const auto m = detail::as_index(row[2], "multiplicity");
    detail::expect(m >= 1, "multiplicity must be at least 1");
    detail::expect(seen.insert(EdgeKey{u, v}).second,
                   "edge " + to_string(EdgeKey{u, v}) + " listed twice");
    g.add_edge(u, v, static_cast<unsigned>(m));
  }
  return g;
}

inline Json certificate_to_json(const Decomposition& d) {
  Json tris = Json::array();
  for (const auto& t : d.triangles) tris.push_back(to_json(t));
  return Json{{"triangles", tris}};
}

inline Decomposition certificate_from_json(const Json& j, std::size_t order) {
  detail::expect(j.is_object() && j.contains("triangles") && j["triangles"].is_array(),
                 "certificate must be {\"triangles\": [...]}");
  Decomposition d;
  for (const auto& row : j["triangles"]) {
    detail::expect(row.is_array() && row.size() == 3, "triangles must be [a, b, c]");
    const VertexId a = detail::as_vertex(row[0], order, "triangle vertex");
    const VertexId b = detail::as_vertex(row[1], order, "triangle vertex");
    const VertexId c = detail::as_vertex(row[2], order, "triangle vertex");
    detail::expect(a != b && b != c && a != c, "triangle vertices must be distinct");
    d.triangles.push_back(Triangle::of(a, b, c));
  }
  d.normalize();
  return d;
}

inline Json augmentation_to_json(const Augmentation& aug) {
  Json out = Json::array();
  for (const auto& e : aug) out.push_back(to_json(e));
  return out;
}

inline Json epsilon_to_json(const EpsilonResult& r) {
  return Json{{"epsilon", r.epsilon},
              {"augmentation", augmentation_to_json(r.augmentation)},
              {"certificate", certificate_to_json(r.certificate)}};
}

inline Json rotation_to_json(const RotationSystem& r) {
  Json rows = Json::array();
  for (const auto& row : r.rotations) {
    Json ends = Json::array();
    for (const auto& end : row) ends.push_back(Json::array({end.neighbor, end.copy}));
    rows.push_back(ends);
  }
  return Json{{"rotations", rows}};
}

inline RotationSystem rotation_from_json(const Json& j) {
  detail::expect(j.is_object() && j.contains("rotations") && j["rotations"].is_array(),
                 "rotation must be {\"rotations\": [...]}");
  RotationSystem r;
  const std::size_t n = j["rotations"].size();
  for (const auto& row : j["rotations"]) {
    detail::expect(row.is_array(), "each rotation must be an array of ends");
    std::vector<EdgeEnd> ends;
    for (const auto& end : row) {
      detail::expect(end.is_array() && end.size() == 2, "ends must be [neighbor, copy]");
      ends.push_back(EdgeEnd{detail::as_vertex(end[0], n, "neighbor"),
                             static_cast<unsigned>(detail::as_index(end[1], "copy"))});
    }
    r.rotations.push_back(std::move(ends));
  }
  return r;
}

inline Json mop_code_to_json(const MopCode& m) {
  Json chords = Json::array();
  for (const auto& c : m.chords) chords.push_back(to_json(c));
  return chords;
}

inline Json construction_to_json(const ConstructionResult& r) {
  Json j{{"family", r.family},
         {"params", r.params},
         {"graph", graph_to_json(r.graph)},
         {"augmentation", augmentation_to_json(r.augmentation)},
         {"certificate", certificate_to_json(r.certificate)},
         {"epsilon", r.claimed_epsilon}};
  if (r.outer_cycle) j["outer_cycle"] = *r.outer_cycle;
  if (r.faces) j["faces"] = *r.faces;
  if (r.rotation) j["rotation"] = rotation_to_json(*r.rotation);
  return j;
}

inline ConstructionResult construction_from_json(const Json& j) {
  detail::expect(j.is_object(), "construction must be an object");
  for (const char* key : {"family", "params", "graph", "augmentation", "certificate", "epsilon"}) {
    detail::expect(j.contains(key), std::string("construction is missing \"") + key + "\"");
  }
  ConstructionResult r;
  detail::expect(j["family"].is_string(), "family must be a string");
  r.family = j["family"].get<std::string>();
  detail::expect(j["params"].is_array(), "params must be an array");
  for (const auto& p : j["params"]) {
    detail::expect(p.is_number_integer(), "params must be integers");
    r.params.push_back(p.get<long>());
  }
  r.graph = graph_from_json(j["graph"]);
  const std::size_t n = r.graph.order();
  detail::expect(j["augmentation"].is_array(), "augmentation must be an array");
  for (const auto& e : j["augmentation"]) {
    r.augmentation.push_back(detail::as_pair(e, n, "augmentation edge"));
  }
  std::sort(r.augmentation.begin(), r.augmentation.end());
  r.certificate = certificate_from_json(j["certificate"], n);
  r.claimed_epsilon = static_cast<unsigned>(detail::as_index(j["epsilon"], "epsilon"));
  if (j.contains("outer_cycle")) {
    std::vector<VertexId> cycle;
    detail::expect(j["outer_cycle"].is_array(), "outer_cycle must be an array");
    for (const auto& v : j["outer_cycle"]) cycle.push_back(detail::as_vertex(v, n, "outer_cycle vertex"));
    r.outer_cycle = std::move(cycle);
  }
  if (j.contains("faces")) {
    std::vector<std::vector<VertexId>> faces;
    detail::expect(j["faces"].is_array(), "faces must be an array");
    for (const auto& f : j["faces"]) {
      detail::expect(f.is_array(), "each face must be an array of vertices");
      std::vector<VertexId> face;
      for (const auto& v : f) face.push_back(detail::as_vertex(v, n, "face vertex"));
      faces.push_back(std::move(face));
    }
    r.faces = std::move(faces);
  }
  if (j.contains("rotation")) r.rotation = rotation_from_json(j["rotation"]);
  return r;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace tridecomp
