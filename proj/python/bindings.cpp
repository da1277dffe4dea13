/* Copyright 2026 The canonparse Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "canonparse/cli.hpp"
#include "canonparse/conll.hpp"
#include "canonparse/disambiguator.hpp"
#include "canonparse/error.hpp"
#include "canonparse/oracle.hpp"
#include "canonparse/transition.hpp"
#include "canonparse/verifier.hpp"

namespace py = pybind11;
using namespace canonparse;

namespace {

// Trees cross the boundary as head lists: heads[i] is the head of word i+1.
DependencyTree TreeFromHeads(const std::vector<NodeId>& heads) {
  return DependencyTree::FromHeads(heads);
}

std::vector<NodeId> HeadsOf(const DependencyTree& tree) {
  std::vector<NodeId> heads;
  for (NodeId d = 1; d <= tree.size(); ++d) heads.push_back(tree.head(d));
  return heads;
}

FeatureTracking TrackingFrom(const std::string& name) {
  if (name == "pairwise") return FeatureTracking::kPairwise;
  if (name == "positional") return FeatureTracking::kPositional;
  throw py::value_error("tracking must be 'pairwise' or 'positional'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bottom-up shift-reduce systems without spurious ambiguity";

  static py::exception<Error> error_type(m, "CanonparseError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(ErrorKindName(e.kind()));
      PyErr_SetObject(error_type.ptr(),
                      py::make_tuple(kind, py::str(e.what())).ptr());
    }
  });

  py::class_<SystemSpec>(m, "SystemSpec")
      .def_property_readonly("degree", &SystemSpec::degree)
      .def_property_readonly("depth", &SystemSpec::depth)
      .def_property_readonly("reductions",
                             [](const SystemSpec& s) {
                               std::vector<std::string> out;
                               for (const auto& r : s.reductions()) out.push_back(ToString(r));
                               return out;
                             })
      .def("__str__", &SystemSpec::ToString)
      .def("__repr__", [](const SystemSpec& s) {
        return "SystemSpec('" + s.ToString() + "')";
      })
      .def(py::self == py::self);

  m.def("parse_system", &ParseSystem, py::arg("text"),
        "Builtin name or semicolon separated la:p,q / ra:p,q templates.");
  m.def("is_monotonic", &IsMonotonic, py::arg("system"));
  m.def("is_projective",
        [](const std::vector<NodeId>& heads) { return IsProjective(TreeFromHeads(heads)); },
        py::arg("heads"));

  m.def("run",
        [](const SystemSpec& spec, int n, const std::string& transitions) {
          return HeadsOf(TreeOf(ParseComputation(n, transitions), spec));
        },
        py::arg("system"), py::arg("n"), py::arg("transitions"),
        "Replays a complete computation and returns the head list of its tree.");

  m.def("canonical_oracle",
        [](const SystemSpec& spec, const std::vector<NodeId>& heads,
           bool enriched) -> std::optional<std::string> {
          const DependencyTree tree = TreeFromHeads(heads);
          const OracleOutcome outcome = CanonicalOracle(tree, spec);
          if (!outcome.success()) return std::nullopt;
          if (!enriched) return outcome.computation->ToString();
          return LiftToEnriched(*outcome.computation, tree, Transform(spec)).ToString();
        },
        py::arg("system"), py::arg("heads"), py::arg("enriched") = false,
        "Canonical transition sequence for a tree, or None when unparseable.");

  m.def("canonicalize",
        [](const SystemSpec& spec, int n, const std::string& transitions) {
          return Canonicalize(ParseComputation(n, transitions), spec).ToString();
        },
        py::arg("system"), py::arg("n"), py::arg("transitions"));

  m.def("transform",
        [](const SystemSpec& spec, const std::string& tracking) {
          const EnrichedSystem esys = Transform(spec, TrackingFrom(tracking));
          std::vector<std::string> inventory;
          for (const auto& t : esys.Inventory()) inventory.push_back(t.ToString());
          py::dict out;
          out["degree"] = esys.degree();
          out["depth"] = esys.depth();
          out["features"] = esys.feature_count();
          out["inventory"] = inventory;
          return out;
        },
        py::arg("system"), py::arg("tracking") = "pairwise");

  m.def("ambiguity_report",
        [](const SystemSpec& spec, int n, bool enriched, const std::string& tracking) {
          const std::int64_t budget = BudgetFromEnvironment();
          const EnumerationReport report =
              enriched ? SpuriousAmbiguityReport(Transform(spec, TrackingFrom(tracking)),
                                                 n, budget)
                       : SpuriousAmbiguityReport(spec, n, budget);
          py::dict per_tree;
          for (const auto& [tree, count] : report.per_tree) {
            per_tree[py::tuple(py::cast(HeadsOf(tree)))] = count;
          }
          py::dict out;
          out["computations"] = report.computation_count;
          out["trees"] = report.tree_count();
          out["max_ambiguity"] = report.max_ambiguity;
          out["per_tree"] = per_tree;
          return out;
        },
        py::arg("system"), py::arg("n"), py::arg("enriched") = false,
        py::arg("tracking") = "pairwise");

  m.def("verify",
        [](const SystemSpec& spec, int max_len) {
          std::vector<std::pair<bool, std::string>> out;
          for (const auto& line : VerifySystem(spec, max_len, BudgetFromEnvironment())) {
            out.emplace_back(line.pass, line.text);
          }
          return out;
        },
        py::arg("system"), py::arg("max_len"));

  m.def("read_conllx",
        [](const std::string& text) {
          py::list out;
          for (const auto& s : ParseConllX(text)) {
            if (s.malformed()) {
              out.append(py::none());
            } else {
              out.append(HeadsOf(*s.tree));
            }
          }
          return out;
        },
        py::arg("text"), "Head lists per sentence; None for malformed sentences.");

  m.def("coverage_tsv",
        [](const SystemSpec& spec, const std::vector<std::string>& paths) {
          return CoverageTsv(CoverageOfFiles(paths, spec));
        },
        py::arg("system"), py::arg("paths"));

  m.def("main",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = CliMain(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line; returns (status, stdout, stderr).");
}
