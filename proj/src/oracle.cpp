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

#include "canonparse/oracle.hpp"

#include <algorithm>

#include "canonparse/error.hpp"

namespace canonparse {

std::vector<CompatibleReduction> CompatibleReductions(
    const Configuration& c, const DependencyTree& tree,
    const SystemSpec& spec) {
  std::vector<CompatibleReduction> out;
  for (const auto& r : spec.reductions()) {
    if (!IsApplicable(c, Transition::Reduce(r), spec)) continue;
    const Arc arc = c.ArcFor(r);
    if (!tree.contains(arc)) continue;
    // The dependent leaves the stack, so its subtree must be finished.
    if (c.attached_children(arc.dependent) != tree.child_count(arc.dependent)) {
      continue;
    }
    out.push_back({r, arc, r.dependent_position()});
  }
  return out;
}

CompatibleReduction HighestPriority(
    const std::vector<CompatibleReduction>& candidates) {
  if (candidates.empty()) {
    throw Error(ErrorKind::kInvalidInput, "no compatible reductions");
  }
  auto best = std::min_element(
      candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return a.dependent_position < b.dependent_position;
      });
  for (auto it = candidates.begin(); it != candidates.end(); ++it) {
    if (it != best && it->dependent_position == best->dependent_position) {
      throw Error(ErrorKind::kPriorityTie,
                  ToString(best->reduction) + " and " +
                      ToString(it->reduction) + " share dependent position " +
                      std::to_string(best->dependent_position));
    }
  }
  return *best;
}

OracleOutcome CanonicalOracle(const DependencyTree& tree,
                              const SystemSpec& spec) {
  Configuration c = Configuration::Initial(tree.size());
  Computation comp{tree.size(), {}};
  while (true) {
    const auto candidates = CompatibleReductions(c, tree, spec);
    Transition next = Transition::Shift();
    if (!candidates.empty()) {
      next = Transition::Reduce(HighestPriority(candidates).reduction);
    } else if (c.buffer_empty()) {
      if (c.IsTerminal()) return {std::move(comp), {}};
      return {std::nullopt, c.ToString()};
    }
    c = Apply(c, next, spec);
    comp.transitions.push_back(next);
  }
}

namespace {

bool TroublesomeAt(const Configuration& c, const Transition& next,
                   const DependencyTree& tree, const SystemSpec& spec) {
  const auto candidates = CompatibleReductions(c, tree, spec);
  if (candidates.empty()) return false;
  return next != Transition::Reduce(HighestPriority(candidates).reduction);
}

}  // namespace

bool IsTroublesome(const Computation& comp, int k, const DependencyTree& tree,
                   const SystemSpec& spec) {
  const int m = static_cast<int>(comp.transitions.size());
  if (k < 0 || k > m) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "configuration " + std::to_string(k) + " of " +
                    std::to_string(m + 1));
  }
  // The final configuration has no next transition.
  if (k == m) return false;
  const auto trace = Trace(comp, spec);
  return TroublesomeAt(trace[k], comp.transitions[k], tree, spec);
}

std::optional<int> FirstTroublesome(const Computation& comp,
                                    const DependencyTree& tree,
                                    const SystemSpec& spec) {
  const auto trace = Trace(comp, spec);
  for (size_t k = 0; k < comp.transitions.size(); ++k) {
    if (TroublesomeAt(trace[k], comp.transitions[k], tree, spec)) {
      return static_cast<int>(k);
    }
  }
  return std::nullopt;
}

Transition Phi(NodeId d, const Transition& t, const Configuration& c) {
  if (t.is_shift()) return t;
  const ReductionTemplate& r = t.reduction();
  const NodeId ip = c.at(r.p);
  const NodeId iq = c.at(r.q);
  if (ip == d || iq == d) {
    throw Error(ErrorKind::kInvolvesNode,
                ToString(r) + " at " + c.ToString() + " involves node " +
                    std::to_string(d));
  }
  if (ip > d && iq > d) return t;
  if (ip < d && iq > d) return Transition::Reduce({r.kind, r.p - 1, r.q});
  // Stack is index-sorted, so ip < iq and both lie below d here.
  return Transition::Reduce({r.kind, r.p - 1, r.q - 1});
}

Computation Canonicalize(const Computation& comp, const SystemSpec& spec) {
  const auto violations = MonotonicityViolations(spec);
  if (!violations.empty()) {
    throw Error(ErrorKind::kNotMonotonic, spec.ToString());
  }
  const DependencyTree tree = TreeOf(comp, spec);
  Computation current = comp;
  const size_t max_passes = comp.transitions.size() + 1;
  int last_k = -1;
  for (size_t pass = 0;; ++pass) {
    if (pass > max_passes) {
      throw Error(ErrorKind::kNotCanonical, "rewrite did not converge");
    }
    const auto trace = Trace(current, spec);
    std::optional<int> found;
    for (size_t k = 0; k < current.transitions.size(); ++k) {
      if (TroublesomeAt(trace[k], current.transitions[k], tree, spec)) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (!found) return current;
    const int k = *found;
    if (k <= last_k) {
      throw Error(ErrorKind::kNotCanonical,
                  "troublesome-free prefix did not grow at step " +
                      std::to_string(k));
    }
    last_k = k;

    const CompatibleReduction rho =
        HighestPriority(CompatibleReductions(trace[k], tree, spec));
    const NodeId d = rho.arc.dependent;
    // Locate the later reduction that builds the same arc.
    size_t j = k;
    for (; j < current.transitions.size(); ++j) {
      const Configuration& after = trace[j + 1];
      if (after.head_of(d) == rho.arc.head) break;
    }
    if (j == current.transitions.size()) {
      throw Error(ErrorKind::kNotComplete,
                  "arc " + ToString(rho.arc) + " is never built");
    }

    Computation rewritten{current.n, {}};
    rewritten.transitions.assign(current.transitions.begin(),
                                 current.transitions.begin() + k);
    rewritten.transitions.push_back(Transition::Reduce(rho.reduction));
    for (size_t i = k; i < j; ++i) {
      rewritten.transitions.push_back(Phi(d, current.transitions[i], trace[i]));
    }
    rewritten.transitions.insert(rewritten.transitions.end(),
                                 current.transitions.begin() + j + 1,
                                 current.transitions.end());
    current = std::move(rewritten);
  }
}

EnrichedComputation LiftToEnriched(const Computation& canonical,
                                   const DependencyTree& tree,
                                   const EnrichedSystem& esys) {
  const SystemSpec& spec = esys.base();
  EnrichedComputation out{canonical.n, {}};
  Configuration c = Configuration::Initial(canonical.n);
  for (const auto& t : canonical.transitions) {
    // The affected node still has dependents to collect iff the tree gives
    // it more children than are attached after this step.
    NodeId affected;
    int attached;
    if (t.is_shift()) {
      affected = c.buffer_start();
      attached = c.buffer_empty() ? 0 : c.attached_children(affected);
    } else {
      const Arc arc = c.ArcFor(t.reduction());
      affected = arc.head;
      attached = c.attached_children(affected) + 1;
    }
    const bool pending =
        affected <= tree.size() && tree.child_count(affected) > attached;
    const Variant v = pending ? Variant::kNoStop : Variant::kStop;
    out.transitions.push_back(
        t.is_shift() ? EnrichedTransition::Shift(v)
                     : EnrichedTransition::Reduce(t.reduction(), v));
    c = Apply(c, t, spec);
  }
  try {
    if (!RunEnriched(out, esys).IsTerminal()) {
      throw Error(ErrorKind::kNotCanonical,
                  "lift of " + canonical.ToString() + " is not complete");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotCanonical) throw;
    throw Error(ErrorKind::kNotCanonical, e.what());
  }
  return out;
}

}  // namespace canonparse
