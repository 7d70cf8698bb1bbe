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

#include <catch_amalgamated.hpp>

#include "tridecomp/io.hpp"
#include "tridecomp/tridecomp.hpp"

using namespace tridecomp;

namespace {

ConstructionResult round_trip(const ConstructionResult& r) {
  return construction_from_json(parse_json_text(construction_to_json(r).dump()));
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  Multigraph g(5);
  g.add_edge(0, 1, 3).add_edge(1, 4).add_edge(2, 3, 2);
  const auto j = graph_to_json(g);
  CHECK(j["order"] == 5);
  CHECK(j["edges"][0] == Json::array({0, 1, 3}));
  CHECK(graph_from_json(j) == g);
  CHECK(graph_from_json(graph_to_json(Multigraph(3))) == Multigraph(3));
}

TEST_CASE("malformed graphs are parse errors") {
  for (const char* text : {
           R"({"edges": []})",
           R"({"order": 3})",
           R"({"order": -1, "edges": []})",
           R"({"order": 3, "edges": [[1, 0, 1]]})",
           R"({"order": 3, "edges": [[0, 0, 1]]})",
           R"({"order": 3, "edges": [[0, 1, 0]]})",
           R"({"order": 3, "edges": [[0, 3, 1]]})",
           R"({"order": 3, "edges": [[0, 1, 1], [0, 1, 2]]})",
           R"({"order": 3, "edges": [[0, 1]]})",
           R"({"order": 3, "edges": [["0", 1, 1]]})",
           R"([1, 2, 3])",
       }) {
    INFO(text);
    CHECK_THROWS_AS(graph_from_json(parse_json_text(text)), ParseError);
  }
  CHECK_THROWS_AS(parse_json_text("{\"order\": 3,"), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("certificates") {
  Decomposition d;
  d.triangles = {{0, 1, 2}, {0, 3, 4}};
  const auto j = certificate_to_json(d);
  CHECK(j.dump() == R"({"triangles":[[0,1,2],[0,3,4]]})");
  CHECK(certificate_from_json(j, 5) == d);
  // vertex order inside a triangle does not matter
  const auto k = parse_json_text(R"({"triangles": [[2, 1, 0]]})");
  CHECK(certificate_from_json(k, 3).triangles == std::vector<Triangle>{{0, 1, 2}});
  CHECK_THROWS_AS(certificate_from_json(k, 2), ParseError);
  CHECK_THROWS_AS(certificate_from_json(parse_json_text(R"({"triangles": [[0, 0, 1]]})"), 3),
                  ParseError);
}

TEST_CASE("epsilon results serialize their witness") {
  const auto r = epsilon_exact(complete_graph(5));
  const auto j = epsilon_to_json(r);
  CHECK(j["epsilon"] == 2);
  CHECK(j["augmentation"].size() == 2);
  CHECK(j["certificate"]["triangles"].size() == 4);
}

TEST_CASE("rotation round trip") {
  const auto r = *sf_fixture(9).rotation;
  CHECK(rotation_from_json(rotation_to_json(r)) == r);
  CHECK_THROWS_AS(rotation_from_json(parse_json_text(R"({"rotations": [[[1]], [[0, 0]]]})")),
                  ParseError);
  CHECK_THROWS_AS(rotation_from_json(parse_json_text(R"({"rotations": [[[7, 0]]]})")),
                  ParseError);
}

TEST_CASE("every family survives a construction round trip") {
  std::vector<ConstructionResult> all{mop_construct(10), fan(7), intermediate(10, 1),
                                      kop_construct(5, 3), hmp_construct(9), sc3_construct(8),
                                      sc2_tree_construct(12), sc2_seed(2)};
  for (std::size_t n : {7, 8, 9}) all.push_back(sf_fixture(n));
  for (const auto& r : all) {
    INFO(r.family);
    const auto back = round_trip(r);
    CHECK(back.family == r.family);
    CHECK(back.params == r.params);
    CHECK(back.graph == r.graph);
    CHECK(back.augmentation == r.augmentation);
    CHECK(back.certificate == r.certificate);
    CHECK(back.claimed_epsilon == r.claimed_epsilon);
    CHECK(back.outer_cycle == r.outer_cycle);
    CHECK(back.faces == r.faces);
    CHECK(back.rotation == r.rotation);
    CHECK_FALSE(construction_issue(back));
  }
}

TEST_CASE("construction documents need every envelope key") {
  const auto full = construction_to_json(mop_construct(6));
  for (const char* key : {"family", "params", "graph", "augmentation", "certificate", "epsilon"}) {
    auto j = full;
    j.erase(key);
    INFO(key);
    CHECK_THROWS_AS(construction_from_json(j), ParseError);
  }
  auto bad = full;
  bad["augmentation"] = Json::array({Json::array({0, 9})});
  CHECK_THROWS_AS(construction_from_json(bad), ParseError);
}

TEST_CASE("MOP codes serialize as chord lists") {
  const MopCode m{5, {{0, 2}, {0, 3}}};
  CHECK(mop_code_to_json(m).dump() == "[[0,2],[0,3]]");
}
