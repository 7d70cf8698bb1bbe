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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_commands.hpp"

int main(int argc, char** argv) {
  using namespace tridecomp::cli;

  CLI::App app{"Triangle decompositions of multigraphs: constructions, exact "
               "augmentation numbers and certificate checks"};
  app.require_subcommand(1);

  std::string family, format = "json";
  std::vector<long> params;
  auto* construct = app.add_subcommand("construct", "Build a graph family member");
  construct->add_option("family", family, "mop, sc2tree, sc2seed, fan, intermediate, kop, hmp, sc3 or sf")
      ->required();
  construct->add_option("params", params, "Family parameters")->required();
  construct->add_option("--out", format, "Output format: json or dot");

  std::string graph_file;
  std::optional<long> cap;
  auto* epsilon = app.add_subcommand("epsilon", "Exact minimum augmentation of a graph");
  epsilon->add_option("file", graph_file, "Graph JSON")->required();
  epsilon->add_option("--cap", cap, "At most this many extra copies per edge");

  auto* decompose = app.add_subcommand("decompose", "Find a triangle decomposition");
  decompose->add_option("file", graph_file, "Graph JSON")->required();

  std::string result_file;
  auto* verify = app.add_subcommand("verify", "Check a construction document");
  verify->add_option("file", result_file, "Construction JSON")->required();

  std::string kind;
  long n = 0;
  auto* sweep = app.add_subcommand("sweep", "Extremum over all maximal outerplanar graphs of order n");
  sweep->add_option("kind", kind, "epsilon (minimum) or xi (maximum, one extra copy per edge)")
      ->required();
  sweep->add_option("n", n, "Order")->required();

  std::string rotation_file;
  auto* faces = app.add_subcommand("faces", "Trace the faces of a rotation system");
  faces->add_option("file", rotation_file, "Rotation JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  if (construct->parsed()) return run_construct(family, params, format, std::cout, std::cerr);
  if (epsilon->parsed()) return run_epsilon(graph_file, cap, std::cout, std::cerr);
  if (decompose->parsed()) return run_decompose(graph_file, std::cout, std::cerr);
  if (verify->parsed()) return run_verify(result_file, std::cout, std::cerr);
  if (sweep->parsed()) return run_sweep(kind, n, std::cout, std::cerr);
  if (faces->parsed()) return run_faces(rotation_file, std::cout, std::cerr);
  return kFailure;
}
