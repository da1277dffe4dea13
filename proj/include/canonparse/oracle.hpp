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

// Canonical oracle: maps a dependency tree to the unique computation that,
// at every step, takes the compatible reduction whose dependent is closest
// to the stack top, and shifts only when no reduction is compatible.

#ifndef CANONPARSE_ORACLE_HPP_
#define CANONPARSE_ORACLE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "canonparse/disambiguator.hpp"
#include "canonparse/transition.hpp"

namespace canonparse {

struct CompatibleReduction {
  ReductionTemplate reduction;
  Arc arc;
  int dependent_position = 0;

  friend bool operator==(const CompatibleReduction&,
                         const CompatibleReduction&) = default;
};

// Reductions applicable at c that build an arc of tree whose dependent
// already has its full set of dependents attached.
std::vector<CompatibleReduction> CompatibleReductions(
    const Configuration& c, const DependencyTree& tree,
    const SystemSpec& spec);

// Minimal dependent position. Throws kPriorityTie if two candidates share
// it, kInvalidInput on an empty set.
CompatibleReduction HighestPriority(
    const std::vector<CompatibleReduction>& candidates);

struct OracleOutcome {
  // Set on success.
  std::optional<Computation> computation;
  // Configuration where the greedy loop got stuck, when unparseable.
  std::string stuck;

  bool success() const { return computation.has_value(); }
};

OracleOutcome CanonicalOracle(const DependencyTree& tree,
                              const SystemSpec& spec);

// Whether configuration c_k (0-based, before transition k+1) is
// troublesome in comp for tree. Throws kIndexOutOfRange for k outside
// [0, |comp|].
bool IsTroublesome(const Computation& comp, int k, const DependencyTree& tree,
                   const SystemSpec& spec);

// Index of the leftmost troublesome configuration, if any.
std::optional<int> FirstTroublesome(const Computation& comp,
                                    const DependencyTree& tree,
                                    const SystemSpec& spec);

// Rewrites t, applied at c in a computation where node d is still on the
// stack, into the transition building the same arc once d has been removed.
// Throws kInvolvesNode when t touches d.
Transition Phi(NodeId d, const Transition& t, const Configuration& c);

// Leftmost-troublesome elimination. Throws kNotComplete, kNotMonotonic.
Computation Canonicalize(const Computation& comp, const SystemSpec& spec);

// Chooses S/Sbar for each step of a canonical computation according to
// whether the affected node still has dependents to collect. Throws
// kNotCanonical if the result fails to replay to an enriched terminal.
EnrichedComputation LiftToEnriched(const Computation& canonical,
                                   const DependencyTree& tree,
                                   const EnrichedSystem& esys);

}  // namespace canonparse

#endif  // CANONPARSE_ORACLE_HPP_
