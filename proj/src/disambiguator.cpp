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

#include "canonparse/disambiguator.hpp"

#include <algorithm>
#include <sstream>

#include "canonparse/error.hpp"

namespace canonparse {

namespace {

const char* Bool(bool v) { return v ? "T" : "F"; }

bool IsRootFree(const EnrichedConfiguration& c, const ReductionTemplate& t) {
  return c.at(t.dependent_position()).node != kRoot;
}

// Switches off the redl_k / redr_k features of the symbols near the top of
// the antecedent stack for every reduction that is available there and that
// passes the priority filters. Evaluated entirely against `before`.
template <typename LeftFilter, typename RightFilter>
void BlockReductions(const EnrichedConfiguration& before,
                     const SystemSpec& spec,
                     std::vector<AnnotatedSymbol>& stack,
                     LeftFilter left_filter, RightFilter right_filter) {
  const int size = before.stack_size();
  const int window = std::min(spec.depth(), size);
  for (int u = 1; u <= window; ++u) {
    AnnotatedSymbol& symbol = stack[size - u];
    for (int k = 1; k <= spec.degree() && u + k <= size; ++k) {
      if (left_filter(u, k) && LeftReductionAvailable(before, u + k, u, spec)) {
        symbol.features.set_redl(k, false);
      }
      if (right_filter(u, k) &&
          RightReductionAvailable(before, u + k, u, spec)) {
        symbol.features.set_redr(k, false);
      }
    }
  }
}

// Re-pairs the distance features of the symbols above stack position
// `removed` after that symbol goes away.
void ClosePairGap(std::vector<AnnotatedSymbol>& stack, int removed,
                  int degree) {
  const int size = static_cast<int>(stack.size());
  for (int u = 1; u < removed; ++u) {
    const int gap = removed - u;
    if (gap > degree) continue;
    FeatureVector& f = stack[size - u].features;
    for (int k = gap; k < degree; ++k) {
      f.set_redl(k, f.redl(k + 1));
      f.set_redr(k, f.redr(k + 1));
    }
    f.set_redl(degree, true);
    f.set_redr(degree, true);
  }
}

std::string Explain(const EnrichedConfiguration& c,
                    const EnrichedTransition& t, const EnrichedSystem& esys) {
  if (t.is_shift()) return c.buffer_empty() ? "shift on empty buffer" : "";
  const auto& r = t.base().reduction();
  if (!esys.base().contains(r)) return ToString(r) + " is not in the system";
  if (c.stack_size() < r.p) {
    return ToString(r) + " needs " + std::to_string(r.p) + " stack symbols";
  }
  const bool ok = r.kind == ArcKind::kLeft
                      ? LeftReductionAvailable(c, r.p, r.q, esys.base())
                      : RightReductionAvailable(c, r.p, r.q, esys.base());
  if (!ok) return ToString(r) + " is not available in " + c.ToString();
  return "";
}

}  // namespace

std::string FeatureVector::ToString() const {
  std::string out = std::string("stop=") + Bool(stop()) + ",redl=[";
  for (int k = 1; k <= degree_; ++k) out += std::string(k > 1 ? "," : "") + Bool(redl(k));
  out += "],redr=[";
  for (int k = 1; k <= degree_; ++k) out += std::string(k > 1 ? "," : "") + Bool(redr(k));
  return out + "]";
}

std::string AnnotatedSymbol::ToString() const {
  return std::to_string(node) + "{" + features.ToString() + "}";
}

std::string EnrichedTransition::ToString() const {
  const char* v = variant_ == Variant::kStop ? "s" : "ns";
  if (base_.is_shift()) return std::string("sh.") + v;
  const auto& r = base_.reduction();
  return std::string(r.kind == ArcKind::kLeft ? "la." : "ra.") + v + ":" +
         std::to_string(r.p) + "," + std::to_string(r.q);
}

EnrichedTransition ParseEnrichedTransition(std::string_view token) {
  if (token == "sh.s") return EnrichedTransition::Shift(Variant::kStop);
  if (token == "sh.ns") return EnrichedTransition::Shift(Variant::kNoStop);
  const auto dot = token.find('.');
  const auto colon = token.find(':');
  if (dot == 2 && colon != std::string_view::npos && colon > dot) {
    const std::string_view v = token.substr(dot + 1, colon - dot - 1);
    if (v == "s" || v == "ns") {
      std::string base_token(token.substr(0, 2));
      base_token += token.substr(colon);
      const Transition base = ParseTransition(base_token);
      if (!base.is_shift()) {
        return EnrichedTransition::Reduce(
            base.reduction(), v == "s" ? Variant::kStop : Variant::kNoStop);
      }
    }
  }
  throw Error(ErrorKind::kSyntax,
              "unrecognized enriched transition '" + std::string(token) + "'");
}

std::vector<EnrichedTransition> EnrichedSystem::Inventory() const {
  std::vector<EnrichedTransition> out = {
      EnrichedTransition::Shift(Variant::kStop),
      EnrichedTransition::Shift(Variant::kNoStop)};
  for (const auto& r : base_.reductions()) {
    out.push_back(EnrichedTransition::Reduce(r, Variant::kStop));
    out.push_back(EnrichedTransition::Reduce(r, Variant::kNoStop));
  }
  return out;
}

const char* ToString(FeatureTracking tracking) {
  return tracking == FeatureTracking::kPairwise ? "pairwise" : "positional";
}

EnrichedSystem Transform(const SystemSpec& spec, FeatureTracking tracking) {
  const auto violations = MonotonicityViolations(spec);
  if (!violations.empty()) {
    std::string msg;
    for (const auto& v : violations) {
      if (!msg.empty()) msg += "; ";
      msg += ToString(v.reduction) + " missing";
      for (const auto& m : v.missing) msg += " " + ToString(m);
    }
    throw Error(ErrorKind::kNotMonotonic, msg);
  }
  if (spec.degree() > FeatureVector::kMaxDegree) {
    throw Error(ErrorKind::kInvalidTemplate,
                "degree " + std::to_string(spec.degree()) + " exceeds " +
                    std::to_string(FeatureVector::kMaxDegree));
  }
  return EnrichedSystem(spec, tracking);
}

// ---------------------------------------------------------------------------

EnrichedConfiguration EnrichedConfiguration::Initial(
    int n, const EnrichedSystem& esys) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidLength,
                "sentence length must be >= 1, got " + std::to_string(n));
  }
  EnrichedConfiguration c;
  c.n_ = n;
  c.stack_ = {AnnotatedSymbol{kRoot, FeatureVector::AllFalse(esys.degree())}};
  c.buffer_start_ = 1;
  c.heads_.assign(n + 1, kNoHead);
  return c;
}

std::vector<Arc> EnrichedConfiguration::arcs() const {
  std::vector<Arc> out;
  for (NodeId d = 1; d <= n_; ++d) {
    if (heads_[d] != kNoHead) out.push_back({heads_[d], d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Configuration EnrichedConfiguration::Project() const {
  std::vector<NodeId> nodes;
  nodes.reserve(stack_.size());
  for (const auto& s : stack_) nodes.push_back(s.node);
  return Configuration::FromParts(n_, std::move(nodes), buffer_start_, arcs());
}

bool EnrichedConfiguration::IsTerminal() const {
  if (stack_.size() != 1 || !buffer_empty()) return false;
  const FeatureVector& f = stack_.front().features;
  if (!f.stop()) return false;
  for (int k = 1; k <= f.degree(); ++k) {
    if (f.redl(k) || f.redr(k)) return false;
  }
  return true;
}

std::string EnrichedConfiguration::ToString() const {
  std::ostringstream out;
  out << "([";
  for (size_t i = 0; i < stack_.size(); ++i) {
    out << (i ? ", " : "") << stack_[i].ToString();
  }
  out << "], [";
  for (int b = buffer_start_; b <= n_; ++b) out << (b > buffer_start_ ? "," : "") << b;
  out << "], {";
  bool first = true;
  for (const Arc& arc : arcs()) {
    out << (first ? "" : ",") << canonparse::ToString(arc);
    first = false;
  }
  out << "})";
  return out.str();
}

bool LeftReductionAvailable(const EnrichedConfiguration& c, int p, int q,
                            const SystemSpec& spec) {
  if (q < 1 || p <= q || c.stack_size() < p) return false;
  const ReductionTemplate t = LeftArc(p, q);
  if (!spec.contains(t)) return false;
  const FeatureVector& dep = c.at(p).features;
  const FeatureVector& head = c.at(q).features;
  return head.redl(p - q) && BottomUpLink(head, dep) && IsRootFree(c, t);
}

bool RightReductionAvailable(const EnrichedConfiguration& c, int p, int q,
                             const SystemSpec& spec) {
  if (q < 1 || p <= q || c.stack_size() < p) return false;
  const ReductionTemplate t = RightArc(p, q);
  if (!spec.contains(t)) return false;
  const FeatureVector& head = c.at(p).features;
  const FeatureVector& dep = c.at(q).features;
  return dep.redr(p - q) && BottomUpLink(head, dep) && IsRootFree(c, t);
}

bool IsEnrichedApplicable(const EnrichedConfiguration& c,
                          const EnrichedTransition& t,
                          const EnrichedSystem& esys) {
  return Explain(c, t, esys).empty();
}

EnrichedConfiguration ApplyEnriched(const EnrichedConfiguration& c,
                                    const EnrichedTransition& t,
                                    const EnrichedSystem& esys) {
  const std::string why = Explain(c, t, esys);
  if (!why.empty()) throw Error(ErrorKind::kNotApplicable, why);

  const SystemSpec& spec = esys.base();
  const bool stop = t.variant() == Variant::kStop;
  EnrichedConfiguration next = c;
  const int size = c.stack_size();

  if (t.is_shift()) {
    // Shift has the lowest priority: block everything available.
    auto all = [](int, int) { return true; };
    BlockReductions(c, spec, next.stack_, all, all);
    FeatureVector f = FeatureVector::AllTrue(esys.degree());
    f.set_stop(stop);
    next.stack_.push_back({next.buffer_start_++, f});
    return next;
  }

  const ReductionTemplate& r = t.base().reduction();
  const int dep_pos = r.dependent_position();
  // Block reductions whose dependent sits strictly above this one's.
  BlockReductions(
      c, spec, next.stack_,
      [dep_pos](int u, int k) { return u + k < dep_pos; },
      [dep_pos](int u, int) { return u < dep_pos; });
  next.stack_[size - r.head_position()].features.set_stop(stop);
  const Arc arc{c.at(r.head_position()).node, c.at(dep_pos).node};
  next.heads_[arc.dependent] = arc.head;
  if (esys.tracking() == FeatureTracking::kPairwise) {
    ClosePairGap(next.stack_, dep_pos, esys.degree());
  }
  next.stack_.erase(next.stack_.begin() + (size - dep_pos));
  return next;
}

std::string EnrichedComputation::ToString() const {
  std::string out;
  for (const auto& t : transitions) {
    if (!out.empty()) out += " ";
    out += t.ToString();
  }
  return out;
}

std::vector<EnrichedConfiguration> TraceEnriched(
    const EnrichedComputation& comp, const EnrichedSystem& esys) {
  std::vector<EnrichedConfiguration> trace;
  trace.reserve(comp.transitions.size() + 1);
  trace.push_back(EnrichedConfiguration::Initial(comp.n, esys));
  for (size_t k = 0; k < comp.transitions.size(); ++k) {
    const auto& t = comp.transitions[k];
    const std::string why = Explain(trace.back(), t, esys);
    if (!why.empty()) {
      throw Error(ErrorKind::kReplayFailure,
                  "step " + std::to_string(k + 1) + " (" + t.ToString() +
                      "): " + why);
    }
    trace.push_back(ApplyEnriched(trace.back(), t, esys));
  }
  return trace;
}

EnrichedConfiguration RunEnriched(const EnrichedComputation& comp,
                                  const EnrichedSystem& esys) {
  return std::move(TraceEnriched(comp, esys).back());
}

DependencyTree EnrichedTreeOf(const EnrichedComputation& comp,
                              const EnrichedSystem& esys) {
  const EnrichedConfiguration last = RunEnriched(comp, esys);
  if (!last.IsTerminal()) {
    throw Error(ErrorKind::kNotComplete,
                "replay ends in non-terminal " + last.ToString());
  }
  const auto arcs = last.arcs();
  return DependencyTree::FromArcs(comp.n, arcs);
}

Computation TauComputation(const EnrichedComputation& comp) {
  Computation out{comp.n, {}};
  out.transitions.reserve(comp.transitions.size());
  for (const auto& t : comp.transitions) out.transitions.push_back(Tau(t));
  return out;
}

EnrichedComputation ParseEnrichedComputation(int n, std::string_view text) {
  EnrichedComputation comp{n, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) comp.transitions.push_back(ParseEnrichedTransition(token));
  return comp;
}

}  // namespace canonparse
