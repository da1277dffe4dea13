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

#include "canonparse/verifier.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "canonparse/error.hpp"

namespace canonparse {

std::int64_t BudgetFromEnvironment() {
  const char* raw = std::getenv("CANONPARSE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultBudget;
  char* end = nullptr;
  const long long value = std::strtoll(raw, &end, 10);
  if (*end != '\0' || value <= 0) {
    throw Error(ErrorKind::kInvalidInput,
                std::string("CANONPARSE_BUDGET must be a positive integer, got '") +
                    raw + "'");
  }
  return value;
}

namespace {

void CountVisit(std::int64_t& explored, std::int64_t budget) {
  if (++explored > budget) {
    throw Error(ErrorKind::kBudgetExceeded,
                "explored more than " + std::to_string(budget) +
                    " configurations");
  }
}

std::vector<Transition> BaseCandidates(const SystemSpec& spec) {
  std::vector<Transition> out = {Transition::Shift()};
  for (const auto& r : spec.reductions()) out.push_back(Transition::Reduce(r));
  return out;
}

}  // namespace

BaseEnumeration EnumerateComputations(const SystemSpec& spec, int n,
                                      std::int64_t budget) {
  BaseEnumeration result;
  const auto candidates = BaseCandidates(spec);
  Computation path{n, {}};
  std::function<void(const Configuration&)> visit =
      [&](const Configuration& c) {
        CountVisit(result.explored, budget);
        if (c.IsTerminal()) {
          result.computations.push_back(path);
          return;
        }
        for (const auto& t : candidates) {
          if (!IsApplicable(c, t, spec)) continue;
          path.transitions.push_back(t);
          visit(Apply(c, t, spec));
          path.transitions.pop_back();
        }
      };
  visit(Configuration::Initial(n));
  return result;
}

EnrichedEnumeration EnumerateEnriched(const EnrichedSystem& esys, int n,
                                      std::int64_t budget) {
  EnrichedEnumeration result;
  const auto candidates = esys.Inventory();
  EnrichedComputation path{n, {}};
  std::function<void(const EnrichedConfiguration&)> visit =
      [&](const EnrichedConfiguration& c) {
        CountVisit(result.explored, budget);
        for (const auto& s : c.stack()) {
          result.feature_vectors.insert(s.features.bits());
        }
        if (c.IsTerminal()) {
          result.computations.push_back(path);
          return;
        }
        for (const auto& t : candidates) {
          if (!IsEnrichedApplicable(c, t, esys)) continue;
          path.transitions.push_back(t);
          visit(ApplyEnriched(c, t, esys));
          path.transitions.pop_back();
        }
      };
  visit(EnrichedConfiguration::Initial(n, esys));
  return result;
}

namespace {

void Finish(EnumerationReport& report) {
  for (const auto& [tree, count] : report.per_tree) {
    report.max_ambiguity = std::max(report.max_ambiguity, count);
  }
}

}  // namespace

EnumerationReport SpuriousAmbiguityReport(const SystemSpec& spec, int n,
                                          std::int64_t budget) {
  EnumerationReport report;
  report.n = n;
  report.system = spec.ToString();
  for (const auto& comp : EnumerateComputations(spec, n, budget).computations) {
    ++report.computation_count;
    ++report.per_tree[TreeOf(comp, spec)];
  }
  Finish(report);
  return report;
}

EnumerationReport SpuriousAmbiguityReport(const EnrichedSystem& esys, int n,
                                          std::int64_t budget) {
  EnumerationReport report;
  report.n = n;
  report.system = "enriched(" + esys.base().ToString() + ")";
  for (const auto& comp : EnumerateEnriched(esys, n, budget).computations) {
    ++report.computation_count;
    ++report.per_tree[EnrichedTreeOf(comp, esys)];
  }
  Finish(report);
  return report;
}

bool EquivalenceReport::unambiguous() const {
  for (const auto& [tree, count] : enriched_per_tree) {
    if (count != 1) return false;
  }
  return true;
}

EquivalenceReport CheckEquivalence(const SystemSpec& spec, int n,
                                   std::int64_t budget) {
  const EnrichedSystem esys = Transform(spec);
  EquivalenceReport report;
  report.n = n;
  for (const auto& comp : EnumerateComputations(spec, n, budget).computations) {
    report.base_trees.insert(TreeOf(comp, spec));
  }
  const auto enriched = EnumerateEnriched(esys, n, budget);
  report.distinct_feature_vectors = enriched.feature_vectors.size();
  for (const auto& comp : enriched.computations) {
    const DependencyTree tree = EnrichedTreeOf(comp, esys);
    report.enriched_trees.insert(tree);
    ++report.enriched_per_tree[tree];
    try {
      if (!(TreeOf(TauComputation(comp), spec) == tree)) {
        report.tau_failures.push_back(comp.ToString() + ": tree changed");
      }
    } catch (const Error& e) {
      report.tau_failures.push_back(comp.ToString() + ": " + e.what());
    }
  }
  return report;
}

std::vector<DependencyTree> AllTrees(int n) {
  std::vector<DependencyTree> out;
  std::vector<NodeId> heads(n, 0);
  while (true) {
    bool self_loop = false;
    for (int i = 0; i < n; ++i) self_loop |= heads[i] == i + 1;
    if (!self_loop) {
      if (auto tree = DependencyTree::TryFromHeads(heads)) {
        out.push_back(*std::move(tree));
      }
    }
    // Odometer increment over {0..n}^n, last word fastest.
    int i = n - 1;
    while (i >= 0 && heads[i] == n) heads[i--] = 0;
    if (i < 0) break;
    ++heads[i];
  }
  return out;
}

OracleReport CheckOracle(const SystemSpec& spec, int n, std::int64_t budget) {
  const EnrichedSystem esys = Transform(spec);
  OracleReport report;
  report.n = n;

  std::map<DependencyTree, std::vector<Computation>> base_by_tree;
  for (auto& comp : EnumerateComputations(spec, n, budget).computations) {
    base_by_tree[TreeOf(comp, spec)].push_back(std::move(comp));
  }
  std::map<DependencyTree, std::vector<EnrichedComputation>> enriched_by_tree;
  for (auto& comp : EnumerateEnriched(esys, n, budget).computations) {
    enriched_by_tree[EnrichedTreeOf(comp, esys)].push_back(std::move(comp));
  }
  report.derivable = static_cast<std::int64_t>(base_by_tree.size());

  auto fail = [&](const DependencyTree& tree, const std::string& what) {
    report.failures.push_back("n=" + std::to_string(n) + " tree " +
                              tree.ToString() + ": " + what);
  };

  for (const DependencyTree& tree : AllTrees(n)) {
    ++report.trees_generated;
    const OracleOutcome outcome = CanonicalOracle(tree, spec);
    const auto base_it = base_by_tree.find(tree);
    const bool derivable = base_it != base_by_tree.end();
    if (outcome.success() != derivable) {
      fail(tree, derivable ? "oracle failed on a derivable tree"
                           : "oracle succeeded on an underivable tree");
      continue;
    }
    if (!outcome.success()) continue;
    ++report.oracle_successes;
    const Computation& oracle = *outcome.computation;

    try {
      if (!(TreeOf(oracle, spec) == tree)) fail(tree, "oracle tree differs");
    } catch (const Error& e) {
      fail(tree, std::string("oracle replay: ") + e.what());
      continue;
    }
    if (FirstTroublesome(oracle, tree, spec)) {
      fail(tree, "oracle output has a troublesome configuration");
    }

    int troublesome_free = 0;
    for (const Computation& comp : base_it->second) {
      ++report.computations_canonicalized;
      if (!FirstTroublesome(comp, tree, spec)) {
        ++troublesome_free;
        if (!(comp == oracle)) {
          fail(tree, "second troublesome-free computation " + comp.ToString());
        }
      }
      try {
        const Computation canon = Canonicalize(comp, spec);
        if (!(canon == oracle)) {
          fail(tree, "canonicalize(" + comp.ToString() + ") = " +
                         canon.ToString() + " != " + oracle.ToString());
        }
      } catch (const Error& e) {
        fail(tree, "canonicalize(" + comp.ToString() + "): " + e.what());
      }
    }
    if (troublesome_free != 1) {
      fail(tree, std::to_string(troublesome_free) +
                     " troublesome-free computations");
    }

    try {
      const EnrichedComputation lifted = LiftToEnriched(oracle, tree, esys);
      if (!(TauComputation(lifted) == oracle)) {
        fail(tree, "tau(lift) differs from oracle");
      }
      const auto enriched_it = enriched_by_tree.find(tree);
      if (enriched_it == enriched_by_tree.end() ||
          enriched_it->second.size() != 1 ||
          !(enriched_it->second.front() == lifted)) {
        fail(tree, "lift " + lifted.ToString() +
                       " is not the unique enriched computation");
      }
    } catch (const Error& e) {
      fail(tree, std::string("lift: ") + e.what());
    }
  }
  return report;
}

namespace {

std::string Line(int n, const std::string& check, const std::string& counts) {
  std::ostringstream out;
  out << "n=" << n << "\t" << check << "\t" << counts;
  return out.str();
}

}  // namespace

std::vector<CheckLine> VerifySystem(const SystemSpec& spec, int max_len,
                                    std::int64_t budget) {
  std::vector<CheckLine> lines;
  const auto violations = MonotonicityViolations(spec);
  lines.push_back({violations.empty(), "monotonic\t" + spec.ToString()});
  if (!violations.empty()) return lines;
  const EnrichedSystem esys = Transform(spec);
  const std::int64_t bound = std::int64_t{1} << esys.feature_count();

  for (int n = 1; n <= max_len; ++n) {
    try {
      const auto base = SpuriousAmbiguityReport(spec, n, budget);
      lines.push_back(
          {true, Line(n, "base-enumeration",
                      "computations=" + std::to_string(base.computation_count) +
                          " trees=" + std::to_string(base.tree_count()) +
                          " max_ambiguity=" +
                          std::to_string(base.max_ambiguity))});

      const auto eq = CheckEquivalence(spec, n, budget);
      std::int64_t enriched_count = 0;
      std::int64_t max_count = 0;
      for (const auto& [tree, count] : eq.enriched_per_tree) {
        enriched_count += count;
        max_count = std::max(max_count, count);
      }
      lines.push_back(
          {eq.unambiguous(),
           Line(n, "non-ambiguity",
                "enriched_computations=" + std::to_string(enriched_count) +
                    " trees=" + std::to_string(eq.enriched_trees.size()) +
                    " max_ambiguity=" + std::to_string(max_count))});
      lines.push_back(
          {eq.equal(),
           Line(n, "equivalence",
                "base_trees=" + std::to_string(eq.base_trees.size()) +
                    " enriched_trees=" +
                    std::to_string(eq.enriched_trees.size()))});
      lines.push_back({eq.tau_failures.empty(),
                       Line(n, "tau-projection",
                            "failures=" +
                                std::to_string(eq.tau_failures.size()))});
      lines.push_back(
          {static_cast<std::int64_t>(eq.distinct_feature_vectors) <= bound,
           Line(n, "feature-bound",
                "distinct=" + std::to_string(eq.distinct_feature_vectors) +
                    " bound=" + std::to_string(bound))});

      const auto oracle = CheckOracle(spec, n, budget);
      std::string counts =
          "trees=" + std::to_string(oracle.trees_generated) +
          " derivable=" + std::to_string(oracle.derivable) +
          " oracle_success=" + std::to_string(oracle.oracle_successes) +
          " canonicalized=" + std::to_string(oracle.computations_canonicalized) +
          " failures=" + std::to_string(oracle.failures.size());
      if (!oracle.ok()) counts += " first=" + oracle.failures.front();
      lines.push_back({oracle.ok(), Line(n, "oracle", counts)});
    } catch (const Error& e) {
      lines.push_back({false, Line(n, "error", e.what())});
    }
  }
  return lines;
}

}  // namespace canonparse
