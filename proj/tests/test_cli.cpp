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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_commands.hpp"

using namespace tridecomp;
using namespace tridecomp::cli;

namespace {

const std::string kData = TRIDECOMP_TEST_DATA;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F f) {
  std::ostringstream out, err;
  Run r;
  r.code = f(out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("tridecomp_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("construct writes a document that verify accepts") {
  const auto c = run([](auto& o, auto& e) { return run_construct("mop", {6}, "json", o, e); });
  REQUIRE(c.code == kOk);
  const auto j = parse_json_text(c.out);
  CHECK(j["epsilon"] == 0);
  const auto path = temp_file("mop6.json", c.out);
  const auto v = run([&](auto& o, auto& e) { return run_verify(path, o, e); });
  CHECK(v.code == kOk);
  CHECK(contains(v.out, "certificate: ok (3 triangles)"));
  CHECK(contains(v.out, "maximal outerplanar: ok"));
}

TEST_CASE("verify reports a tampered certificate") {
  auto j = construction_to_json(mop_construct(7));
  j["certificate"]["triangles"].erase(0);
  const auto path = temp_file("tampered.json", j.dump());
  const auto v = run([&](auto& o, auto& e) { return run_verify(path, o, e); });
  CHECK(v.code == kFailure);
  CHECK(contains(v.out, "undercovered"));
  CHECK(contains(v.err, "verify: certificate"));
}

TEST_CASE("verify catches a wrong epsilon and a wrong outer cycle") {
  auto j = construction_to_json(fan(6));
  j["epsilon"] = 0;
  const auto wrong_eps = temp_file("eps.json", j.dump());
  CHECK(run([&](auto& o, auto& e) { return run_verify(wrong_eps, o, e); }).code == kFailure);

  auto k = construction_to_json(mop_construct(6));
  k["outer_cycle"] = Json::array({0, 2, 1, 3, 4, 5});
  const auto wrong_cycle = temp_file("cycle.json", k.dump());
  const auto v = run([&](auto& o, auto& e) { return run_verify(wrong_cycle, o, e); });
  CHECK(v.code == kFailure);
  CHECK(contains(v.out, "maximal outerplanar: FAILED"));
}

TEST_CASE("verify prints the genus of toroidal fixtures") {
  const auto path = temp_file("sf8.json", construction_to_json(sf_fixture(8)).dump());
  const auto v = run([&](auto& o, auto& e) { return run_verify(path, o, e); });
  CHECK(v.code == kOk);
  CHECK(contains(v.out, "genus: 1"));
  CHECK(contains(v.out, "single face: ok"));
}

TEST_CASE("construct rejects bad requests with exit 1") {
  CHECK(run([](auto& o, auto& e) { return run_construct("hmp", {7}, "json", o, e); }).code ==
        kFailure);
  CHECK(run([](auto& o, auto& e) { return run_construct("nope", {7}, "json", o, e); }).code ==
        kFailure);
  CHECK(run([](auto& o, auto& e) { return run_construct("kop", {7}, "json", o, e); }).code ==
        kFailure);
  CHECK(run([](auto& o, auto& e) { return run_construct("mop", {-4}, "json", o, e); }).code ==
        kFailure);
  CHECK(run([](auto& o, auto& e) { return run_construct("sf", {6}, "json", o, e); }).code ==
        kFailure);
  CHECK(run([](auto& o, auto& e) { return run_construct("mop", {6}, "svg", o, e); }).code ==
        kFailure);
}

TEST_CASE("construct renders DOT") {
  const auto c = run([](auto& o, auto& e) { return run_construct("fan", {5}, "dot", o, e); });
  REQUIRE(c.code == kOk);
  CHECK(c.out.rfind("graph \"fan_5\" {", 0) == 0);
  CHECK(contains(c.out, "penwidth=2"));
  CHECK(contains(c.out, "label=\"t0\""));
}

TEST_CASE("epsilon and decompose on files") {
  const auto k5 = run([](auto& o, auto& e) { return run_epsilon(kData + "/k5.json", {}, o, e); });
  REQUIRE(k5.code == kOk);
  CHECK(parse_json_text(k5.out)["epsilon"] == 2);

  const auto capped =
      run([](auto& o, auto& e) { return run_epsilon(kData + "/fan6.json", 1L, o, e); });
  REQUIRE(capped.code == kOk);
  CHECK(parse_json_text(capped.out)["epsilon"] == 3);

  const auto k7 = run([](auto& o, auto& e) { return run_decompose(kData + "/k7.json", o, e); });
  REQUIRE(k7.code == kOk);
  CHECK(parse_json_text(k7.out)["triangles"].size() == 7);

  const auto k5d = run([](auto& o, auto& e) { return run_decompose(kData + "/k5.json", o, e); });
  CHECK(k5d.code == kFailure);
  CHECK(contains(k5d.err, "not decomposable"));

  const auto c5 = temp_file("c5.json", graph_to_json(cycle_graph(5)).dump());
  const auto bad = run([&](auto& o, auto& e) { return run_epsilon(c5, {}, o, e); });
  CHECK(bad.code == kFailure);
  CHECK(contains(bad.err, "no triangle"));

  CHECK(run([](auto& o, auto& e) { return run_epsilon(kData + "/k5.json", 0L, o, e); }).code ==
        kFailure);
}

TEST_CASE("unreadable input is exit 1") {
  const auto garbage = temp_file("garbage.json", "{not json");
  CHECK(run([&](auto& o, auto& e) { return run_epsilon(garbage, {}, o, e); }).code == kFailure);
  CHECK(run([&](auto& o, auto& e) { return run_verify("/nonexistent.json", o, e); }).code ==
        kFailure);
}

TEST_CASE("sweeps print the extremum and its witness") {
  const auto s = run([](auto& o, auto& e) { return run_sweep("epsilon", 6, o, e); });
  REQUIRE(s.code == kOk);
  const auto j = parse_json_text(s.out);
  CHECK(j["min"] == 0);
  CHECK(j["witness"].size() == 3);
  const auto x = run([](auto& o, auto& e) { return run_sweep("xi", 6, o, e); });
  REQUIRE(x.code == kOk);
  CHECK(x.out == "{\"max\":3,\"witness\":[[0,2],[0,3],[0,4]]}\n");
  CHECK(run([](auto& o, auto& e) { return run_sweep("zeta", 6, o, e); }).code == kFailure);
  CHECK(run([](auto& o, auto& e) { return run_sweep("xi", 2, o, e); }).code == kFailure);
}

TEST_CASE("sweeps past the ceiling exit with the scale-limit code") {
  ::setenv("TRIDECOMP_SWEEP_CEILING", "5", 1);
  CHECK(run([](auto& o, auto& e) { return run_sweep("epsilon", 6, o, e); }).code == kScaleLimit);
  ::setenv("TRIDECOMP_SWEEP_CEILING", "banana", 1);
  CHECK(run([](auto& o, auto& e) { return run_sweep("epsilon", 6, o, e); }).code == kFailure);
  ::unsetenv("TRIDECOMP_SWEEP_CEILING");
  CHECK(sweep_ceiling_from_env() == kDefaultSweepCeiling);
}

TEST_CASE("faces reports genus") {
  const auto f =
      run([](auto& o, auto& e) { return run_faces(kData + "/k5_torus_rotation.json", o, e); });
  REQUIRE(f.code == kOk);
  const auto j = parse_json_text(f.out);
  CHECK(j["genus"] == 1);
  CHECK(j["faces"] == 5);
  CHECK(j["euler_characteristic"] == 0);
}

TEST_CASE("exceptions outside the domain are internal errors") {
  std::ostringstream err;
  CHECK(guarded(err, []() -> int { throw std::logic_error("boom"); }) == kInternal);
  CHECK(contains(err.str(), "internal error: boom"));
  CHECK(guarded(err, []() -> int { throw ScaleLimit("big"); }) == kScaleLimit);
  CHECK(guarded(err, []() -> int { throw CapInfeasible("cap"); }) == kFailure);
}
