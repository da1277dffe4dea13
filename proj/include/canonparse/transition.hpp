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

// Bottom-up shift-reduce transition systems for dependency parsing.
//
// A system consists of a shift plus a finite inventory of reductions
// la(p,q) and ra(p,q), p > q >= 1, where positions count from the stack top
// (position 1 = topmost symbol):
//  - la(p,q) adds the arc i_q -> i_p and removes i_p from the stack.
//  - ra(p,q) adds the arc i_p -> i_q and removes i_q from the stack.
// Parsing starts at ([0], [1..n], {}) and succeeds at ([0], [], A).

#ifndef CANONPARSE_TRANSITION_HPP_
#define CANONPARSE_TRANSITION_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace canonparse {

// Word index; 0 is the artificial root.
using NodeId = std::int32_t;
inline constexpr NodeId kRoot = 0;
inline constexpr NodeId kNoHead = -1;

struct Arc {
  NodeId head = kRoot;
  NodeId dependent = kRoot;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

std::string ToString(const Arc& arc);

// A rooted dependency tree over nodes 0..n, stored as a head vector.
class DependencyTree {
 public:
  // Validates single-head, in-range, acyclic. Throws kInvalidTree.
  static DependencyTree FromHeads(std::vector<NodeId> heads_of_words);
  static DependencyTree FromArcs(int n, std::span<const Arc> arcs);

  // Returns nullopt instead of throwing; used by the CoNLL reader and the
  // exhaustive tree generator.
  static std::optional<DependencyTree> TryFromHeads(
      std::vector<NodeId> heads_of_words);

  int size() const { return static_cast<int>(heads_.size()) - 1; }
  NodeId head(NodeId dependent) const { return heads_[dependent]; }
  int child_count(NodeId node) const { return child_counts_[node]; }
  bool contains(const Arc& arc) const;

  // Sorted by (head, dependent).
  std::vector<Arc> arcs() const;

  std::string ToString() const;

  friend bool operator==(const DependencyTree& a, const DependencyTree& b) {
    return a.heads_ == b.heads_;
  }
  friend auto operator<=>(const DependencyTree& a, const DependencyTree& b) {
    return a.heads_ <=> b.heads_;
  }

 private:
  DependencyTree() = default;

  // heads_[0] == kNoHead.
  std::vector<NodeId> heads_;
  std::vector<int> child_counts_;
};

// True iff every node strictly between the ends of each arc is dominated by
// the arc's head.
bool IsProjective(const DependencyTree& tree);

enum class ArcKind : std::uint8_t { kLeft = 0, kRight = 1 };

struct ReductionTemplate {
  ArcKind kind = ArcKind::kLeft;
  int p = 2;
  int q = 1;

  int degree() const { return p - q; }
  // Stack position of the node that is removed by this reduction.
  int dependent_position() const { return kind == ArcKind::kLeft ? p : q; }
  int head_position() const { return kind == ArcKind::kLeft ? q : p; }

  friend auto operator<=>(const ReductionTemplate&,
                          const ReductionTemplate&) = default;
};

inline ReductionTemplate LeftArc(int p, int q) {
  return {ArcKind::kLeft, p, q};
}
inline ReductionTemplate RightArc(int p, int q) {
  return {ArcKind::kRight, p, q};
}

// "la:p,q" / "ra:p,q".
std::string ToString(const ReductionTemplate& t);

// Validated reduction inventory. Shift is implicitly always present.
class SystemSpec {
 public:
  // Throws kInvalidTemplate for p <= q or q < 1, kEmptySystem for an empty
  // inventory. Duplicates are merged.
  static SystemSpec Validate(std::vector<ReductionTemplate> raw);

  // Sorted by (kind, p, q).
  const std::vector<ReductionTemplate>& reductions() const {
    return reductions_;
  }
  int degree() const { return degree_; }
  int depth() const { return depth_; }
  bool contains(const ReductionTemplate& t) const;

  // Canonical DSL rendering, e.g. "la:2,1;ra:2,1".
  std::string ToString() const;

  friend bool operator==(const SystemSpec& a, const SystemSpec& b) {
    return a.reductions_ == b.reductions_;
  }

 private:
  std::vector<ReductionTemplate> reductions_;
  int degree_ = 0;
  int depth_ = 0;
};

// "arc-standard" or "attardi" with a depth parameter d >= 2.
SystemSpec BuiltinSystem(std::string_view name,
                         std::optional<int> depth = std::nullopt);

// Accepts builtin names ("arc-standard", "attardi:<d>", "attardi-deg2") or a
// semicolon separated template list ("la:2,1;ra:2,1"). Whitespace is ignored.
// Throws kSyntax naming the offending token.
SystemSpec ParseSystem(std::string_view text);

// Reductions that must be present whenever t is, for the system to be
// monotonic.
std::vector<ReductionTemplate> MandatorySet(const ReductionTemplate& t);

// Templates in spec whose mandatory set is not contained in spec, paired
// with the missing members.
struct MissingMandatory {
  ReductionTemplate reduction;
  std::vector<ReductionTemplate> missing;
};
std::vector<MissingMandatory> MonotonicityViolations(const SystemSpec& spec);

bool IsMonotonic(const SystemSpec& spec);

class Transition {
 public:
  static Transition Shift() { return Transition(); }
  static Transition Reduce(const ReductionTemplate& t) { return Transition(t); }

  bool is_shift() const { return !reduction_.has_value(); }
  // Precondition: !is_shift().
  const ReductionTemplate& reduction() const { return *reduction_; }

  // "sh" or the template rendering.
  std::string ToString() const;

  friend bool operator==(const Transition&, const Transition&) = default;
  // Shift orders before every reduction.
  friend auto operator<=>(const Transition& a, const Transition& b) {
    if (a.is_shift() || b.is_shift()) return !a.is_shift() <=> !b.is_shift();
    return *a.reduction_ <=> *b.reduction_;
  }

 private:
  Transition() = default;
  explicit Transition(const ReductionTemplate& t) : reduction_(t) {}

  std::optional<ReductionTemplate> reduction_;
};

// Parses "sh", "la:p,q", "ra:p,q".
Transition ParseTransition(std::string_view token);

// Immutable parser configuration (stack, buffer suffix, arcs).
class Configuration {
 public:
  // ([0], [1..n], {}). Throws kInvalidLength for n < 1.
  static Configuration Initial(int n);
  // Assembles a configuration from its parts; throws kInvalidInput when the
  // stack is not index-sorted, overlaps the buffer or contains a node with a
  // head.
  static Configuration FromParts(int n, std::vector<NodeId> stack,
                                 int buffer_start, std::span<const Arc> arcs);

  int sentence_length() const { return n_; }
  // Bottom to top.
  const std::vector<NodeId>& stack() const { return stack_; }
  int stack_size() const { return static_cast<int>(stack_.size()); }
  // Node at 1-based position from the top.
  NodeId at(int position) const { return stack_[stack_.size() - position]; }
  // Buffer is [buffer_start, n]; empty when buffer_start > n.
  int buffer_start() const { return buffer_start_; }
  bool buffer_empty() const { return buffer_start_ > n_; }
  NodeId head_of(NodeId node) const { return heads_[node]; }
  int arc_count() const { return arc_count_; }
  int attached_children(NodeId node) const { return child_counts_[node]; }
  // Sorted by (head, dependent).
  std::vector<Arc> arcs() const;

  bool IsTerminal() const { return stack_.size() == 1 && buffer_empty(); }

  // Arc a reduction would add here. Precondition: stack_size() >= t.p.
  Arc ArcFor(const ReductionTemplate& t) const;

  // Structural change without any system check.
  Configuration Shifted() const;
  Configuration Reduced(const ReductionTemplate& t) const;

  std::string ToString() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Configuration() = default;

  int n_ = 0;
  std::vector<NodeId> stack_;
  int buffer_start_ = 1;
  std::vector<NodeId> heads_;
  std::vector<int> child_counts_;
  int arc_count_ = 0;
};

bool IsApplicable(const Configuration& c, const Transition& t,
                  const SystemSpec& spec);

// Throws kNotApplicable with the violated condition.
Configuration Apply(const Configuration& c, const Transition& t,
                    const SystemSpec& spec);

struct Computation {
  int n = 0;
  std::vector<Transition> transitions;

  std::string ToString() const;

  friend auto operator<=>(const Computation&, const Computation&) = default;
};

// Folds Apply from the initial configuration. Throws kReplayFailure naming
// the 1-based step.
Configuration Run(const Computation& comp, const SystemSpec& spec);

// All intermediate configurations c_0..c_m.
std::vector<Configuration> Trace(const Computation& comp,
                                 const SystemSpec& spec);

// Throws kNotComplete unless the replay ends terminal.
DependencyTree TreeOf(const Computation& comp, const SystemSpec& spec);

// Whitespace separated transition renderings.
Computation ParseComputation(int n, std::string_view text);

}  // namespace canonparse

#endif  // CANONPARSE_TRANSITION_HPP_
