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

#include "canonparse/transition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "canonparse/error.hpp"

namespace canonparse {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidTemplate: return "InvalidTemplate";
    case ErrorKind::kEmptySystem: return "EmptySystem";
    case ErrorKind::kUnknownSystem: return "UnknownSystem";
    case ErrorKind::kInvalidDepth: return "InvalidDepth";
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kInvalidLength: return "InvalidLength";
    case ErrorKind::kInvalidTree: return "InvalidTree";
    case ErrorKind::kNotApplicable: return "NotApplicable";
    case ErrorKind::kReplayFailure: return "ReplayFailure";
    case ErrorKind::kNotComplete: return "NotComplete";
    case ErrorKind::kNotMonotonic: return "NotMonotonic";
    case ErrorKind::kPriorityTie: return "PriorityTie";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kInvolvesNode: return "InvolvesD";
    case ErrorKind::kNotCanonical: return "NotCanonical";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

namespace {

std::string StripSpace(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') out.push_back(ch);
  }
  return out;
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Parses "la:p,q" or "ra:p,q" without range checks.
std::optional<ReductionTemplate> ParseTemplateToken(std::string_view token) {
  if (token.size() < 4 || token[2] != ':') return std::nullopt;
  ArcKind kind;
  if (token.substr(0, 2) == "la") {
    kind = ArcKind::kLeft;
  } else if (token.substr(0, 2) == "ra") {
    kind = ArcKind::kRight;
  } else {
    return std::nullopt;
  }
  auto nums = Split(token.substr(3), ',');
  if (nums.size() != 2) return std::nullopt;
  auto p = ParseInt(nums[0]);
  auto q = ParseInt(nums[1]);
  if (!p || !q) return std::nullopt;
  return ReductionTemplate{kind, *p, *q};
}

}  // namespace

std::string ToString(const Arc& arc) {
  return std::to_string(arc.head) + "->" + std::to_string(arc.dependent);
}

// ---------------------------------------------------------------------------
// DependencyTree

std::optional<DependencyTree> DependencyTree::TryFromHeads(
    std::vector<NodeId> heads_of_words) {
  const int n = static_cast<int>(heads_of_words.size());
  if (n < 1) return std::nullopt;
  DependencyTree tree;
  tree.heads_.reserve(n + 1);
  tree.heads_.push_back(kNoHead);
  tree.heads_.insert(tree.heads_.end(), heads_of_words.begin(),
                     heads_of_words.end());
  tree.child_counts_.assign(n + 1, 0);
  for (NodeId d = 1; d <= n; ++d) {
    const NodeId h = tree.heads_[d];
    if (h < 0 || h > n || h == d) return std::nullopt;
    ++tree.child_counts_[h];
  }
  // Every node must reach the root; walking more than n steps means a cycle.
  for (NodeId d = 1; d <= n; ++d) {
    NodeId cur = d;
    int steps = 0;
    while (cur != kRoot) {
      cur = tree.heads_[cur];
      if (++steps > n) return std::nullopt;
    }
  }
  return tree;
}

DependencyTree DependencyTree::FromHeads(std::vector<NodeId> heads_of_words) {
  std::ostringstream repr;
  for (size_t i = 0; i < heads_of_words.size(); ++i) {
    repr << (i ? "," : "") << heads_of_words[i];
  }
  auto tree = TryFromHeads(std::move(heads_of_words));
  if (!tree) {
    throw Error(ErrorKind::kInvalidTree,
                "head vector [" + repr.str() + "] is not a rooted tree");
  }
  return *std::move(tree);
}

DependencyTree DependencyTree::FromArcs(int n, std::span<const Arc> arcs) {
  if (n < 1) throw Error(ErrorKind::kInvalidTree, "sentence length < 1");
  if (static_cast<int>(arcs.size()) != n) {
    throw Error(ErrorKind::kInvalidTree,
                "expected " + std::to_string(n) + " arcs, got " +
                    std::to_string(arcs.size()));
  }
  std::vector<NodeId> heads(n, kNoHead);
  for (const Arc& arc : arcs) {
    if (arc.dependent < 1 || arc.dependent > n) {
      throw Error(ErrorKind::kInvalidTree,
                  "dependent out of range in " + canonparse::ToString(arc));
    }
    if (heads[arc.dependent - 1] != kNoHead) {
      throw Error(ErrorKind::kInvalidTree,
                  "node " + std::to_string(arc.dependent) + " has two heads");
    }
    heads[arc.dependent - 1] = arc.head;
  }
  return FromHeads(std::move(heads));
}

bool DependencyTree::contains(const Arc& arc) const {
  return arc.dependent >= 1 && arc.dependent <= size() &&
         heads_[arc.dependent] == arc.head;
}

std::vector<Arc> DependencyTree::arcs() const {
  std::vector<Arc> out;
  out.reserve(size());
  for (NodeId d = 1; d <= size(); ++d) out.push_back({heads_[d], d});
  std::sort(out.begin(), out.end());
  return out;
}

std::string DependencyTree::ToString() const {
  std::string out = "{";
  bool first = true;
  for (const Arc& arc : arcs()) {
    if (!first) out += ",";
    first = false;
    out += canonparse::ToString(arc);
  }
  return out + "}";
}

bool IsProjective(const DependencyTree& tree) {
  const int n = tree.size();
  auto dominates = [&](NodeId h, NodeId node) {
    while (node != kRoot) {
      node = tree.head(node);
      if (node == h) return true;
    }
    return h == kRoot;
  };
  for (NodeId d = 1; d <= n; ++d) {
    const NodeId h = tree.head(d);
    for (NodeId k = std::min(h, d) + 1; k < std::max(h, d); ++k) {
      if (!dominates(h, k)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Systems

std::string ToString(const ReductionTemplate& t) {
  return std::string(t.kind == ArcKind::kLeft ? "la:" : "ra:") +
         std::to_string(t.p) + "," + std::to_string(t.q);
}

SystemSpec SystemSpec::Validate(std::vector<ReductionTemplate> raw) {
  if (raw.empty()) throw Error(ErrorKind::kEmptySystem, "no reductions");
  for (const auto& t : raw) {
    if (t.q < 1 || t.p <= t.q) {
      throw Error(ErrorKind::kInvalidTemplate,
                  canonparse::ToString(t) + " requires p > q >= 1 (p=" +
                      std::to_string(t.p) + ", q=" + std::to_string(t.q) + ")");
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  SystemSpec spec;
  spec.reductions_ = std::move(raw);
  for (const auto& t : spec.reductions_) {
    spec.degree_ = std::max(spec.degree_, t.degree());
    spec.depth_ = std::max(spec.depth_, t.p);
  }
  return spec;
}

bool SystemSpec::contains(const ReductionTemplate& t) const {
  return std::binary_search(reductions_.begin(), reductions_.end(), t);
}

std::string SystemSpec::ToString() const {
  std::string out;
  for (const auto& t : reductions_) {
    if (!out.empty()) out += ";";
    out += canonparse::ToString(t);
  }
  return out;
}

SystemSpec BuiltinSystem(std::string_view name, std::optional<int> depth) {
  if (name == "arc-standard") {
    return SystemSpec::Validate({LeftArc(2, 1), RightArc(2, 1)});
  }
  if (name == "attardi") {
    const int d = depth.value_or(3);
    if (d < 2) {
      throw Error(ErrorKind::kInvalidDepth,
                  "attardi depth must be >= 2, got " + std::to_string(d));
    }
    std::vector<ReductionTemplate> raw;
    for (int p = 2; p <= d; ++p) {
      raw.push_back(LeftArc(p, 1));
      raw.push_back(RightArc(p, 1));
    }
    return SystemSpec::Validate(std::move(raw));
  }
  throw Error(ErrorKind::kUnknownSystem, std::string(name));
}

SystemSpec ParseSystem(std::string_view text) {
  const std::string compact = StripSpace(text);
  if (compact == "arc-standard") return BuiltinSystem("arc-standard");
  if (compact == "attardi-deg2") return BuiltinSystem("attardi", 3);
  if (compact.rfind("attardi:", 0) == 0) {
    auto d = ParseInt(std::string_view(compact).substr(8));
    if (!d) throw Error(ErrorKind::kSyntax, "bad attardi depth in '" + compact + "'");
    return BuiltinSystem("attardi", *d);
  }
  if (compact.empty()) throw Error(ErrorKind::kEmptySystem, "no reductions");
  std::vector<ReductionTemplate> raw;
  for (std::string_view token : Split(compact, ';')) {
    if (token.empty()) continue;
    auto t = ParseTemplateToken(token);
    if (!t) {
      throw Error(ErrorKind::kSyntax,
                  "unrecognized system token '" + std::string(token) + "'");
    }
    raw.push_back(*t);
  }
  return SystemSpec::Validate(std::move(raw));
}

std::vector<ReductionTemplate> MandatorySet(const ReductionTemplate& t) {
  std::vector<ReductionTemplate> out;
  if (t.p > t.q + 1) out.push_back({t.kind, t.p - 1, t.q});
  if (t.q > 1) out.push_back({t.kind, t.p - 1, t.q - 1});
  return out;
}

std::vector<MissingMandatory> MonotonicityViolations(const SystemSpec& spec) {
  std::vector<MissingMandatory> out;
  for (const auto& t : spec.reductions()) {
    MissingMandatory entry{t, {}};
    for (const auto& m : MandatorySet(t)) {
      if (!spec.contains(m)) entry.missing.push_back(m);
    }
    if (!entry.missing.empty()) out.push_back(std::move(entry));
  }
  return out;
}

bool IsMonotonic(const SystemSpec& spec) {
  return MonotonicityViolations(spec).empty();
}

std::string Transition::ToString() const {
  return is_shift() ? "sh" : canonparse::ToString(*reduction_);
}

Transition ParseTransition(std::string_view token) {
  if (token == "sh") return Transition::Shift();
  auto t = ParseTemplateToken(token);
  if (!t) {
    throw Error(ErrorKind::kSyntax,
                "unrecognized transition '" + std::string(token) + "'");
  }
  return Transition::Reduce(*t);
}

// ---------------------------------------------------------------------------
// Configurations

Configuration Configuration::Initial(int n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidLength,
                "sentence length must be >= 1, got " + std::to_string(n));
  }
  Configuration c;
  c.n_ = n;
  c.stack_ = {kRoot};
  c.buffer_start_ = 1;
  c.heads_.assign(n + 1, kNoHead);
  c.child_counts_.assign(n + 1, 0);
  return c;
}

Configuration Configuration::FromParts(int n, std::vector<NodeId> stack,
                                       int buffer_start,
                                       std::span<const Arc> arcs) {
  Configuration c = Initial(n);
  if (buffer_start < 1 || buffer_start > n + 1) {
    throw Error(ErrorKind::kInvalidInput, "buffer start out of range");
  }
  for (size_t i = 0; i < stack.size(); ++i) {
    if (stack[i] < 0 || stack[i] >= buffer_start ||
        (i > 0 && stack[i] <= stack[i - 1])) {
      throw Error(ErrorKind::kInvalidInput, "stack is not index-sorted");
    }
  }
  for (const Arc& arc : arcs) {
    if (arc.dependent < 1 || arc.dependent > n || arc.head < 0 ||
        arc.head > n || c.heads_[arc.dependent] != kNoHead) {
      throw Error(ErrorKind::kInvalidInput, "bad arc " + canonparse::ToString(arc));
    }
    if (std::binary_search(stack.begin(), stack.end(), arc.dependent)) {
      throw Error(ErrorKind::kInvalidInput,
                  "stack node " + std::to_string(arc.dependent) + " has a head");
    }
    c.heads_[arc.dependent] = arc.head;
    ++c.child_counts_[arc.head];
    ++c.arc_count_;
  }
  c.stack_ = std::move(stack);
  c.buffer_start_ = buffer_start;
  return c;
}

std::vector<Arc> Configuration::arcs() const {
  std::vector<Arc> out;
  for (NodeId d = 1; d <= n_; ++d) {
    if (heads_[d] != kNoHead) out.push_back({heads_[d], d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Arc Configuration::ArcFor(const ReductionTemplate& t) const {
  const NodeId ip = at(t.p);
  const NodeId iq = at(t.q);
  return t.kind == ArcKind::kLeft ? Arc{iq, ip} : Arc{ip, iq};
}

Configuration Configuration::Shifted() const {
  Configuration next = *this;
  next.stack_.push_back(next.buffer_start_++);
  return next;
}

Configuration Configuration::Reduced(const ReductionTemplate& t) const {
  Configuration next = *this;
  const Arc arc = ArcFor(t);
  next.heads_[arc.dependent] = arc.head;
  ++next.child_counts_[arc.head];
  ++next.arc_count_;
  next.stack_.erase(next.stack_.end() - t.dependent_position());
  return next;
}

std::string Configuration::ToString() const {
  std::ostringstream out;
  out << "([";
  for (size_t i = 0; i < stack_.size(); ++i) out << (i ? "," : "") << stack_[i];
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

namespace {

// Empty when applicable, otherwise the violated condition.
std::string WhyNotApplicable(const Configuration& c, const Transition& t,
                             const SystemSpec& spec) {
  if (t.is_shift()) return c.buffer_empty() ? "shift on empty buffer" : "";
  const auto& r = t.reduction();
  if (!spec.contains(r)) return ToString(r) + " is not in the system";
  if (c.stack_size() < r.p) {
    return ToString(r) + " needs " + std::to_string(r.p) +
           " stack symbols, have " + std::to_string(c.stack_size());
  }
  if (c.at(r.dependent_position()) == kRoot) {
    return ToString(r) + " would make the root a dependent";
  }
  return "";
}

}  // namespace

bool IsApplicable(const Configuration& c, const Transition& t,
                  const SystemSpec& spec) {
  return WhyNotApplicable(c, t, spec).empty();
}

Configuration Apply(const Configuration& c, const Transition& t,
                    const SystemSpec& spec) {
  const std::string why = WhyNotApplicable(c, t, spec);
  if (!why.empty()) throw Error(ErrorKind::kNotApplicable, why);
  return t.is_shift() ? c.Shifted() : c.Reduced(t.reduction());
}

std::string Computation::ToString() const {
  std::string out;
  for (const auto& t : transitions) {
    if (!out.empty()) out += " ";
    out += t.ToString();
  }
  return out;
}

std::vector<Configuration> Trace(const Computation& comp,
                                 const SystemSpec& spec) {
  std::vector<Configuration> trace;
  trace.reserve(comp.transitions.size() + 1);
  trace.push_back(Configuration::Initial(comp.n));
  for (size_t k = 0; k < comp.transitions.size(); ++k) {
    const auto& t = comp.transitions[k];
    const std::string why = WhyNotApplicable(trace.back(), t, spec);
    if (!why.empty()) {
      throw Error(ErrorKind::kReplayFailure,
                  "step " + std::to_string(k + 1) + " (" + t.ToString() +
                      "): " + why);
    }
    trace.push_back(Apply(trace.back(), t, spec));
  }
  return trace;
}

Configuration Run(const Computation& comp, const SystemSpec& spec) {
  return std::move(Trace(comp, spec).back());
}

DependencyTree TreeOf(const Computation& comp, const SystemSpec& spec) {
  const Configuration last = Run(comp, spec);
  if (!last.IsTerminal()) {
    throw Error(ErrorKind::kNotComplete,
                "replay ends in non-terminal " + last.ToString());
  }
  // Bottom-up reductions always leave a well-formed tree at a terminal
  // configuration; FromArcs re-validates.
  const auto arcs = last.arcs();
  return DependencyTree::FromArcs(comp.n, arcs);
}

Computation ParseComputation(int n, std::string_view text) {
  Computation comp{n, {}};
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) comp.transitions.push_back(ParseTransition(token));
  return comp;
}

}  // namespace canonparse
