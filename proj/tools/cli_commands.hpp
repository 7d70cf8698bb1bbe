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

// Subcommand bodies for the tridecomp tool. Each writes its result to `out`,
// a one-line reason to `err` on failure, and returns the process exit code.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tridecomp/dot.hpp"
#include "tridecomp/io.hpp"
#include "tridecomp/tridecomp.hpp"

namespace tridecomp::cli {

enum Exit : int { kOk = 0, kFailure = 1, kInternal = 2, kScaleLimit = 3 };

// Runs body and maps exceptions onto the exit-code contract.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ScaleLimit& e) {
    err << "tridecomp: scale limit: " << e.what() << "\n";
    return kScaleLimit;
  } catch (const Error& e) {
    err << "tridecomp: " << e.what() << "\n";
    return kFailure;
  } catch (const std::domain_error& e) {
    err << "tridecomp: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "tridecomp: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

inline std::size_t sweep_ceiling_from_env() {
  if (const char* raw = std::getenv("TRIDECOMP_SWEEP_CEILING")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && v >= 3) return v;
    throw std::domain_error("TRIDECOMP_SWEEP_CEILING must be an integer >= 3");
  }
  return kDefaultSweepCeiling;
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "mop", "sc2tree", "sc2seed", "fan", "intermediate", "kop", "hmp", "sc3", "sf"};
  return names;
}

/// Dispatches a family tag and its integer parameters to the constructor.
inline ConstructionResult build_family(const std::string& family,
                                       const std::vector<long>& params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      throw std::domain_error(family + " takes " + std::to_string(k) +
                              (k == 1 ? " parameter" : " parameters") + ", got " +
                              std::to_string(params.size()));
    }
    for (long p : params) {
      if (p < 0) throw std::domain_error(family + " parameters must be nonnegative");
    }
  };
  auto at = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };
  if (family == "mop") return arity(1), mop_construct(at(0));
  if (family == "sc2tree") return arity(1), sc2_tree_construct(at(0));
  if (family == "sc2seed") return arity(1), sc2_seed(static_cast<unsigned>(at(0)));
  if (family == "fan") return arity(1), fan(at(0));
  if (family == "intermediate") return arity(2), intermediate(at(0), at(1));
  if (family == "kop") return arity(2), kop_construct(at(0), at(1));
  if (family == "hmp") return arity(1), hmp_construct(at(0));
  if (family == "sc3") return arity(1), sc3_construct(at(0));
  if (family == "sf") return arity(1), sf_fixture(at(0));
  throw std::domain_error("unknown family \"" + family + "\"");
}

inline int run_construct(const std::string& family, const std::vector<long>& params,
                         const std::string& format, std::ostream& out,
                         std::ostream& err) {
  return guarded(err, [&] {
    if (format != "json" && format != "dot") {
      throw std::domain_error("--out must be json or dot");
    }
    const auto r = build_family(family, params);
    if (auto issue = construction_issue(r)) {
      err << "tridecomp: internal error: construction failed self-validation: "
          << *issue << "\n";
      return static_cast<int>(kInternal);
    }
    if (format == "dot") {
      out << to_dot(r);
    } else {
      out << construction_to_json(r).dump(2) << "\n";
    }
    return static_cast<int>(kOk);
  });
}

inline int run_epsilon(const std::string& path, std::optional<long> cap,
                       std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cap && *cap < 1) throw std::domain_error("--cap must be a positive integer");
    const auto g = graph_from_json(read_json_file(path));
    CopyCap c;
    if (cap) c = static_cast<unsigned>(*cap);
    const auto r = epsilon_exact(g, c);
    if (!check_decomposition(apply_augmentation(g, r.augmentation), r.certificate)) {
      err << "tridecomp: internal error: certificate failed validation\n";
      return static_cast<int>(kInternal);
    }
    out << epsilon_to_json(r).dump(2) << "\n";
    return static_cast<int>(kOk);
  });
}

inline int run_decompose(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = graph_from_json(read_json_file(path));
    if (auto reason = fast_reject(g)) {
      err << "tridecomp: not decomposable: " << reason->describe() << "\n";
      return static_cast<int>(kFailure);
    }
    const auto d = find_decomposition(g);
    if (!d) {
      err << "tridecomp: not decomposable: exhaustive search found no decomposition\n";
      return static_cast<int>(kFailure);
    }
    if (!check_decomposition(g, *d)) {
      err << "tridecomp: internal error: certificate failed validation\n";
      return static_cast<int>(kInternal);
    }
    out << certificate_to_json(*d).dump(2) << "\n";
    return static_cast<int>(kOk);
  });
}

namespace detail {

inline bool is_outerplanar_family(const std::string& family) {
  return family == "mop" || family == "fan" || family == "intermediate" ||
         family == "sc2tree" || family == "sc2seed";
}

// Collects check results; the first failure decides the exit code.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void pass(const std::string& check, const std::string& detail = "ok") {
    out_ << check << ": " << detail << "\n";
  }
  void fail(const std::string& check, const std::string& reason) {
    out_ << check << ": FAILED (" << reason << ")\n";
    if (!first_) first_ = check + ": " + reason;
  }
  const std::optional<std::string>& first_failure() const { return first_; }

 private:
  std::ostream& out_;
  std::optional<std::string> first_;
};

}  // namespace detail

/// Checks every invariant a construction declares, one line per check.
inline int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto r = construction_from_json(read_json_file(path));
    detail::Report report(out);

    if (r.graph.is_simple()) {
      report.pass("simple graph");
    } else {
      report.fail("simple graph", "graph has parallel edges before augmentation");
    }

    bool on_edges = true;
    for (const auto& e : r.augmentation) {
      if (!r.graph.has_edge(e)) {
        report.fail("augmentation", "edge " + to_string(e) + " is not an edge of the graph");
        on_edges = false;
        break;
      }
    }
    if (on_edges) report.pass("augmentation", "ok (" + std::to_string(r.augmentation.size()) + " edges)");

    if (r.augmentation.size() == r.claimed_epsilon) {
      report.pass("epsilon", std::to_string(r.claimed_epsilon));
    } else {
      report.fail("epsilon", "augmentation has " + std::to_string(r.augmentation.size()) +
                                 " edges but epsilon is " + std::to_string(r.claimed_epsilon));
    }

    if ((r.graph.size() + r.claimed_epsilon) % 3 == 0) {
      report.pass("residue");
    } else {
      report.fail("residue", "size plus epsilon is not divisible by 3");
    }

    if (on_edges) {
      if (auto issue = coverage_issue(r.augmented(), r.certificate)) {
        report.fail("certificate", issue->describe());
      } else {
        report.pass("certificate",
                    "ok (" + std::to_string(r.certificate.triangles.size()) + " triangles)");
      }
    }

    if (r.outer_cycle) {
      const auto& c = *r.outer_cycle;
      if (detail::is_outerplanar_family(r.family)) {
        bool ok = false;
        try {
          ok = is_maximal_outerplanar(r.graph, c);
        } catch (const std::domain_error&) {
          ok = false;
        }
        if (ok) {
          report.pass("maximal outerplanar");
        } else {
          report.fail("maximal outerplanar", "outer cycle and chords do not form a MOP");
        }
      } else {
        bool ok = c.size() >= 3;
        for (std::size_t i = 0; ok && i < c.size(); ++i) {
          ok = c[i] != c[(i + 1) % c.size()] && r.graph.adjacent(c[i], c[(i + 1) % c.size()]);
        }
        if (ok) {
          report.pass("outer cycle");
        } else {
          report.fail("outer cycle", "listed outer cycle is not a cycle of the graph");
        }
      }
    }

    if (r.faces) {
      if (check_planar_faces(r.graph, *r.faces)) {
        report.pass("planar faces", "ok (" + std::to_string(r.faces->size()) + " faces, V-E+F=2)");
      } else {
        report.fail("planar faces", "face list is not a planar embedding of the graph");
      }
    }

    if (r.rotation) {
      std::optional<FaceTrace> trace;
      try {
        if (rotation_graph(*r.rotation) == r.graph) trace = trace_faces(*r.rotation);
      } catch (const std::domain_error&) {
      }
      if (!trace) {
        report.fail("rotation", "rotation system does not describe the graph");
      } else {
        report.pass("rotation", "ok (" + std::to_string(trace->face_count()) + " faces)");
        report.pass("euler characteristic", std::to_string(trace->euler_characteristic));
        report.pass("genus", std::to_string(trace->genus));
        const bool spanning_face = std::any_of(
            trace->faces.begin(), trace->faces.end(),
            [&](const auto& f) {
              std::set<VertexId> s(f.begin(), f.end());
              return f.size() == r.graph.order() && s.size() == r.graph.order();
            });
        if (r.family == "sf") {
          if (trace->genus != 1) report.fail("toroidal", "genus is not 1");
          if (spanning_face) {
            report.pass("single face", "ok (one face visits every vertex once)");
          } else {
            report.fail("single face", "no face visits every vertex");
          }
        }
      }
    }

    if (const auto& f = report.first_failure()) {
      err << "verify: " << *f << "\n";
      return static_cast<int>(kFailure);
    }
    return static_cast<int>(kOk);
  });
}

inline int run_sweep(const std::string& kind, long n, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (kind != "epsilon" && kind != "xi") {
      throw std::domain_error("sweep kind must be epsilon or xi");
    }
    if (n < 3) throw std::domain_error("sweep needs n >= 3");
    const std::size_t ceiling = sweep_ceiling_from_env();
    const auto size = static_cast<std::size_t>(n);
    const auto best = kind == "epsilon" ? epsilon_class_exact(size, ceiling)
                                        : xi_class_exact(size, ceiling);
    const Json j{{kind == "epsilon" ? "min" : "max", best.value},
                 {"witness", mop_code_to_json(best.witness)}};
    out << j.dump() << "\n";
    return static_cast<int>(kOk);
  });
}

inline int run_faces(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rot = rotation_from_json(read_json_file(path));
    const auto t = trace_faces(rot);
    const Json j{{"vertices", t.vertices},
                 {"edges", t.edges},
                 {"faces", t.face_count()},
                 {"euler_characteristic", t.euler_characteristic},
                 {"genus", t.genus},
                 {"face_walks", t.faces}};
    out << j.dump(2) << "\n";
    return static_cast<int>(kOk);
  });
}

}  // namespace tridecomp::cli
