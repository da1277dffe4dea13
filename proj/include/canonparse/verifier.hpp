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

// Brute-force enumeration of complete computations on small inputs, and the
// checks built on top of it: spurious ambiguity, equivalence of a system and
// its transform, oracle completeness and the feature blow-up bound.

#ifndef CANONPARSE_VERIFIER_HPP_
#define CANONPARSE_VERIFIER_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "canonparse/disambiguator.hpp"
#include "canonparse/oracle.hpp"
#include "canonparse/transition.hpp"

namespace canonparse {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

// Reads CANONPARSE_BUDGET, falling back to kDefaultBudget.
std::int64_t BudgetFromEnvironment();

struct BaseEnumeration {
  // In depth-first order: shift first, then reductions by (kind, p, q).
  std::vector<Computation> computations;
  std::int64_t explored = 0;
};

struct EnrichedEnumeration {
  std::vector<EnrichedComputation> computations;
  std::int64_t explored = 0;
  // Bit patterns of every FeatureVector seen on any reachable stack.
  std::set<std::uint32_t> feature_vectors;
};

// Throw kBudgetExceeded once more than `budget` configurations have been
// visited.
BaseEnumeration EnumerateComputations(const SystemSpec& spec, int n,
                                      std::int64_t budget = kDefaultBudget);
EnrichedEnumeration EnumerateEnriched(const EnrichedSystem& esys, int n,
                                      std::int64_t budget = kDefaultBudget);

struct EnumerationReport {
  int n = 0;
  std::string system;
  std::int64_t computation_count = 0;
  std::map<DependencyTree, std::int64_t> per_tree;
  std::int64_t max_ambiguity = 0;

  std::int64_t tree_count() const {
    return static_cast<std::int64_t>(per_tree.size());
  }
};

EnumerationReport SpuriousAmbiguityReport(const SystemSpec& spec, int n,
                                          std::int64_t budget = kDefaultBudget);
EnumerationReport SpuriousAmbiguityReport(const EnrichedSystem& esys, int n,
                                          std::int64_t budget = kDefaultBudget);

struct EquivalenceReport {
  int n = 0;
  std::set<DependencyTree> base_trees;
  std::set<DependencyTree> enriched_trees;
  std::map<DependencyTree, std::int64_t> enriched_per_tree;
  std::vector<std::string> tau_failures;
  std::size_t distinct_feature_vectors = 0;

  bool equal() const { return base_trees == enriched_trees; }
  bool unambiguous() const;
};

// Throws kNotMonotonic, kBudgetExceeded.
EquivalenceReport CheckEquivalence(const SystemSpec& spec, int n,
                                   std::int64_t budget = kDefaultBudget);

struct OracleReport {
  int n = 0;
  std::int64_t trees_generated = 0;
  std::int64_t oracle_successes = 0;
  std::int64_t derivable = 0;
  std::int64_t computations_canonicalized = 0;
  // One line per violated property.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Every rooted tree on n words, from all head vectors with acyclic
// structure, in lexicographic head-vector order.
std::vector<DependencyTree> AllTrees(int n);

OracleReport CheckOracle(const SystemSpec& spec, int n,
                         std::int64_t budget = kDefaultBudget);

// One line per check as printed by the `verify` command.
struct CheckLine {
  bool pass = false;
  std::string text;
};

std::vector<CheckLine> VerifySystem(const SystemSpec& spec, int max_len,
                                    std::int64_t budget = kDefaultBudget);

}  // namespace canonparse

#endif  // CANONPARSE_VERIFIER_HPP_
