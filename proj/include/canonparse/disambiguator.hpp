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

// Spurious-ambiguity-free transform of a monotonic bottom-up system.
//
// Every stack symbol carries Boolean features: stop (all dependents
// collected) and, for each k in 1..degree, redl_k / redr_k (a left / right
// reduction with the symbol k positions below is still allowed). Each base
// transition is split into an S variant (affected node guessed complete) and
// an Sbar variant (guessed still seeking dependents), and every transition
// switches off the features of reductions that had higher priority than
// itself in the antecedent configuration.

#ifndef CANONPARSE_DISAMBIGUATOR_HPP_
#define CANONPARSE_DISAMBIGUATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "canonparse/transition.hpp"

namespace canonparse {

// 2*degree+1 Boolean features packed into one word: bit 0 is stop, bits
// 1..degree are redl_1..redl_degree, the next degree bits are redr_k.
class FeatureVector {
 public:
  static constexpr int kMaxDegree = 15;

  static FeatureVector AllFalse(int degree) { return FeatureVector(degree, 0); }
  static FeatureVector AllTrue(int degree) {
    return FeatureVector(degree, (std::uint32_t{1} << (2 * degree + 1)) - 1);
  }

  int degree() const { return degree_; }
  int feature_count() const { return 2 * degree_ + 1; }

  bool stop() const { return bits_ & 1u; }
  bool redl(int k) const { return bits_ & LeftBit(k); }
  bool redr(int k) const { return bits_ & RightBit(k); }

  void set_stop(bool v) { Set(1u, v); }
  void set_redl(int k, bool v) { Set(LeftBit(k), v); }
  void set_redr(int k, bool v) { Set(RightBit(k), v); }

  std::uint32_t bits() const { return bits_; }

  // "stop=T,redl=[T,F],redr=[F,F]"
  std::string ToString() const;

  friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;

 private:
  FeatureVector(int degree, std::uint32_t bits) : degree_(degree), bits_(bits) {}

  std::uint32_t LeftBit(int k) const { return std::uint32_t{1} << k; }
  std::uint32_t RightBit(int k) const {
    return std::uint32_t{1} << (degree_ + k);
  }
  void Set(std::uint32_t mask, bool v) {
    bits_ = v ? (bits_ | mask) : (bits_ & ~mask);
  }

  int degree_ = 0;
  std::uint32_t bits_ = 0;
};

struct AnnotatedSymbol {
  NodeId node = kRoot;
  FeatureVector features = FeatureVector::AllFalse(1);

  // "node{stop=T,redl=[..],redr=[..]}"
  std::string ToString() const;

  friend auto operator<=>(const AnnotatedSymbol&,
                          const AnnotatedSymbol&) = default;
};

// bu(i, j): i still seeks dependents and j has collected all of its own.
inline bool BottomUpLink(const FeatureVector& i, const FeatureVector& j) {
  return !i.stop() && j.stop();
}

enum class Variant : std::uint8_t { kStop = 0, kNoStop = 1 };

class EnrichedTransition {
 public:
  static EnrichedTransition Shift(Variant v) {
    return {Transition::Shift(), v};
  }
  static EnrichedTransition Reduce(const ReductionTemplate& t, Variant v) {
    return {Transition::Reduce(t), v};
  }

  const Transition& base() const { return base_; }
  Variant variant() const { return variant_; }
  bool is_shift() const { return base_.is_shift(); }

  // sh.s, sh.ns, la.s:p,q, la.ns:p,q, ra.s:p,q, ra.ns:p,q
  std::string ToString() const;

  friend bool operator==(const EnrichedTransition&,
                         const EnrichedTransition&) = default;
  friend auto operator<=>(const EnrichedTransition&,
                          const EnrichedTransition&) = default;

 private:
  EnrichedTransition(Transition base, Variant v) : base_(base), variant_(v) {}

  Transition base_;
  Variant variant_;
};

EnrichedTransition ParseEnrichedTransition(std::string_view token);

// Drops the variant.
inline Transition Tau(const EnrichedTransition& t) { return t.base(); }

// How redl_k / redr_k behave when a reduction removes a symbol from the
// middle of the stack.
//  - kPairwise: a feature stays attached to the node pair it was computed
//    for. Symbols above the removed one shift their features for distances
//    beyond the gap down by one; the newly exposed largest distance starts
//    out allowed, since that pair was never within reduction reach.
//  - kPositional: features keep their distance index and silently re-pair
//    with whichever symbol is now k positions below. Equivalent to kPairwise
//    for degree-1 systems; loses trees and admits spurious ambiguity for
//    systems with reductions of degree >= 2.
enum class FeatureTracking : std::uint8_t { kPairwise, kPositional };

const char* ToString(FeatureTracking tracking);

class EnrichedSystem {
 public:
  const SystemSpec& base() const { return base_; }
  int degree() const { return base_.degree(); }
  int depth() const { return base_.depth(); }
  int feature_count() const { return 2 * degree() + 1; }
  FeatureTracking tracking() const { return tracking_; }

  // Shift(S), Shift(Sbar), then each reduction in base order with S before
  // Sbar.
  std::vector<EnrichedTransition> Inventory() const;

 private:
  friend EnrichedSystem Transform(const SystemSpec&, FeatureTracking);
  EnrichedSystem(SystemSpec base, FeatureTracking tracking)
      : base_(std::move(base)), tracking_(tracking) {}

  SystemSpec base_;
  FeatureTracking tracking_;
};

// Throws kNotMonotonic listing each reduction and its missing mandatory
// members.
EnrichedSystem Transform(const SystemSpec& spec,
                         FeatureTracking tracking = FeatureTracking::kPairwise);

class EnrichedConfiguration {
 public:
  // Root with all features false; throws kInvalidLength for n < 1.
  static EnrichedConfiguration Initial(int n, const EnrichedSystem& esys);

  int sentence_length() const { return n_; }
  const std::vector<AnnotatedSymbol>& stack() const { return stack_; }
  int stack_size() const { return static_cast<int>(stack_.size()); }
  const AnnotatedSymbol& at(int position) const {
    return stack_[stack_.size() - position];
  }
  int buffer_start() const { return buffer_start_; }
  bool buffer_empty() const { return buffer_start_ > n_; }
  NodeId head_of(NodeId node) const { return heads_[node]; }
  std::vector<Arc> arcs() const;

  // The base configuration this one represents.
  Configuration Project() const;

  // Stack [0] with stop=T and every redl/redr false, buffer empty.
  bool IsTerminal() const;

  std::string ToString() const;

  friend bool operator==(const EnrichedConfiguration&,
                         const EnrichedConfiguration&) = default;

 private:
  friend EnrichedConfiguration ApplyEnriched(const EnrichedConfiguration&,
                                             const EnrichedTransition&,
                                             const EnrichedSystem&);
  EnrichedConfiguration() = default;

  int n_ = 0;
  std::vector<AnnotatedSymbol> stack_;
  int buffer_start_ = 1;
  std::vector<NodeId> heads_;
};

// Availability of la(p,q) / ra(p,q) at c: the head side still has the
// relative-depth feature on, the bottom-up link holds, the template is in
// the base system and the dependent is not the root. False when the stack
// has fewer than p symbols.
bool LeftReductionAvailable(const EnrichedConfiguration& c, int p, int q,
                            const SystemSpec& spec);
bool RightReductionAvailable(const EnrichedConfiguration& c, int p, int q,
                             const SystemSpec& spec);

bool IsEnrichedApplicable(const EnrichedConfiguration& c,
                          const EnrichedTransition& t,
                          const EnrichedSystem& esys);

// Throws kNotApplicable with the violated precondition.
EnrichedConfiguration ApplyEnriched(const EnrichedConfiguration& c,
                                    const EnrichedTransition& t,
                                    const EnrichedSystem& esys);

struct EnrichedComputation {
  int n = 0;
  std::vector<EnrichedTransition> transitions;

  std::string ToString() const;

  friend auto operator<=>(const EnrichedComputation&,
                          const EnrichedComputation&) = default;
};

// Throws kReplayFailure naming the 1-based step.
std::vector<EnrichedConfiguration> TraceEnriched(const EnrichedComputation& comp,
                                                 const EnrichedSystem& esys);
EnrichedConfiguration RunEnriched(const EnrichedComputation& comp,
                                  const EnrichedSystem& esys);

// Throws kNotComplete unless the replay ends in an enriched terminal.
DependencyTree EnrichedTreeOf(const EnrichedComputation& comp,
                              const EnrichedSystem& esys);

Computation TauComputation(const EnrichedComputation& comp);

EnrichedComputation ParseEnrichedComputation(int n, std::string_view text);

}  // namespace canonparse

#endif  // CANONPARSE_DISAMBIGUATOR_HPP_
