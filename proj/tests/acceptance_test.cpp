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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Set CANONPARSE_CONLL2006_DIR to a directory holding the CoNLL
// 2006 training files to additionally compare treebank coverage with the
// published counts.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "canonparse/conll.hpp"
#include "canonparse/disambiguator.hpp"
#include "canonparse/error.hpp"
#include "canonparse/oracle.hpp"
#include "canonparse/verifier.hpp"
#include "test_util.hpp"

namespace canonparse {
namespace {

using testing::Comp;
using testing::CrossingTree;
using testing::ExampleTree;

// Collects failure messages for one criterion.
class Criterion {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

struct SystemSize {
  std::string name;
  SystemSpec spec;
  int max_n;
};

std::vector<SystemSize> Targets() {
  return {{"arc-standard", BuiltinSystem("arc-standard"), 5},
          {"attardi(3)", BuiltinSystem("attardi", 3), 4}};
}

std::string Fixture(const char* name) {
  return std::string(CANONPARSE_FIXTURES_DIR) + "/" + name;
}

void ExampleRegression(Criterion& c) {
  const auto as = BuiltinSystem("arc-standard");
  const auto first = Comp(3, "sh sh la:2,1 sh ra:2,1 ra:2,1");
  const auto second = Comp(3, "sh sh sh ra:2,1 la:2,1 ra:2,1");
  c.Expect(TreeOf(first, as) == ExampleTree(), "computation (i) tree");
  c.Expect(TreeOf(second, as) == ExampleTree(), "computation (ii) tree");
  c.Expect(ExampleTree().ToString() == "{0->2,2->1,2->3}", "example tree arcs");

  const auto esys = Transform(as);
  const auto oracle = CanonicalOracle(ExampleTree(), as);
  c.Expect(oracle.success(), "oracle succeeds on example tree");
  if (oracle.success()) {
    const auto lifted = LiftToEnriched(*oracle.computation, ExampleTree(), esys);
    c.Expect(lifted.ToString() == "sh.s sh.ns la.ns:2,1 sh.s ra.s:2,1 ra.s:2,1",
             "enriched oracle sequence: " + lifted.ToString());
  }

  const auto blocked =
      RunEnriched(ParseEnrichedComputation(3, "sh.s sh.ns sh.s ra.ns:2,1"), esys);
  const std::vector<bool> got = {
      blocked.stack()[0].features.stop(), blocked.stack()[0].features.redl(1),
      blocked.stack()[0].features.redr(1), blocked.stack()[1].features.stop(),
      blocked.stack()[1].features.redl(1), blocked.stack()[1].features.redr(1),
      blocked.stack()[2].features.stop(), blocked.stack()[2].features.redl(1),
      blocked.stack()[2].features.redr(1)};
  const std::vector<bool> want = {false, false, false, true, true,
                                  false, false, false, true};
  c.Expect(blocked.stack_size() == 3 && got == want,
           "feature snapshot " + blocked.ToString());
}

void NonAmbiguity(Criterion& c) {
  for (const auto& target : Targets()) {
    const auto esys = Transform(target.spec);
    for (int n = 1; n <= target.max_n; ++n) {
      const auto report = SpuriousAmbiguityReport(esys, n);
      c.Expect(report.max_ambiguity == 1,
               target.name + " n=" + std::to_string(n) + " enriched max ambiguity " +
                   std::to_string(report.max_ambiguity));
    }
  }
  const auto base = SpuriousAmbiguityReport(BuiltinSystem("arc-standard"), 3);
  c.Expect(base.max_ambiguity >= 2, "base arc-standard n=3 is ambiguous");
  c.Expect(base.per_tree.at(ExampleTree()) == 2,
           "example tree has exactly 2 base computations");
}

void Equivalence(Criterion& c) {
  for (const auto& target : Targets()) {
    for (int n = 1; n <= target.max_n; ++n) {
      const auto report = CheckEquivalence(target.spec, n);
      const std::string tag = target.name + " n=" + std::to_string(n);
      c.Expect(report.equal(), tag + " base trees " +
                                   std::to_string(report.base_trees.size()) +
                                   " vs enriched " +
                                   std::to_string(report.enriched_trees.size()));
      c.Expect(report.tau_failures.empty(),
               tag + " tau failures: " + std::to_string(report.tau_failures.size()));
    }
  }
}

void OracleCompleteness(Criterion& c) {
  for (const auto& target : Targets()) {
    for (int n = 1; n <= target.max_n; ++n) {
      const auto report = CheckOracle(target.spec, n);
      c.Expect(report.ok(), target.name + " n=" + std::to_string(n) + ": " +
                                (report.ok() ? "" : report.failures.front()));
      c.Expect(report.trees_generated == static_cast<std::int64_t>(AllTrees(n).size()),
               "all head-vector trees visited");
    }
  }
}

void NonProjective(Criterion& c) {
  c.Expect(!CanonicalOracle(CrossingTree(), BuiltinSystem("arc-standard")).success(),
           "crossing tree unparseable for arc-standard");
  const auto a3 = BuiltinSystem("attardi", 3);
  const auto outcome = CanonicalOracle(CrossingTree(), a3);
  c.Expect(outcome.success() && TreeOf(*outcome.computation, a3) == CrossingTree(),
           "crossing tree parsed by attardi(3)");
  c.Expect(!IsProjective(CrossingTree()), "crossing tree is non-projective");
}

void BlowUpBound(Criterion& c) {
  for (const auto& target : Targets()) {
    const auto esys = Transform(target.spec);
    const std::size_t bound = std::size_t{1} << esys.feature_count();
    std::set<std::uint32_t> seen;
    for (int n = 1; n <= target.max_n; ++n) {
      const auto e = EnumerateEnriched(esys, n);
      seen.insert(e.feature_vectors.begin(), e.feature_vectors.end());
    }
    c.Expect(seen.size() <= bound, target.name + " distinct feature vectors " +
                                       std::to_string(seen.size()) + " > " +
                                       std::to_string(bound));
  }
  c.Expect(Transform(BuiltinSystem("arc-standard")).feature_count() == 3, "2*1+1");
  c.Expect(Transform(BuiltinSystem("attardi", 3)).feature_count() == 5, "2*2+1");
}

struct TableRow {
  const char* language;
  int size;
  int failures;
};

// Published oracle failure counts on the CoNLL 2006 training sets.
constexpr TableRow kPublished[] = {
    {"arabic", 1460, 2},       {"bulgarian", 12823, 36}, {"czech", 72703, 602},
    {"danish", 5190, 159},     {"dutch", 13349, 1018},   {"german", 39216, 1538},
    {"japanese", 17044, 45},   {"portuguese", 9071, 203}, {"slovene", 1534, 27},
    {"spanish", 3306, 10},     {"swedish", 11042, 105},  {"turkish", 4997, 102},
};

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

// Returns false when no data directory is configured.
bool TreebankComparison(Criterion& c, std::ostream& log) {
  const char* dir = std::getenv("CANONPARSE_CONLL2006_DIR");
  if (dir == nullptr || *dir == '\0') return false;
  const auto a3 = ParseSystem("attardi-deg2");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& row : kPublished) {
    auto it = std::find_if(files.begin(), files.end(), [&](const auto& p) {
      const std::string name = Lower(p.filename().string());
      return name.find(row.language) != std::string::npos &&
             name.find("train") != std::string::npos;
    });
    if (it == files.end()) {
      log << "  treebank " << row.language << ": no training file found\n";
      continue;
    }
    const auto got = CoverageOfFiles({it->string()}, a3).front();
    std::ostringstream msg;
    msg << row.language << " size " << got.size << "/" << row.size
        << " failures " << got.failures << "/" << row.failures;
    log << "  treebank " << msg.str() << "\n";
    if (got.size != row.size || got.failures != row.failures) {
      log << "    unparseable sentence positions:";
      for (int s : got.failing_sentences) log << " " << s;
      log << "\n";
    }
    c.Expect(got.size == row.size && got.failures == row.failures, msg.str());
  }
  return true;
}

void TableReproduction(Criterion& c, std::ostream& log) {
  const auto as = BuiltinSystem("arc-standard");
  const auto a3 = BuiltinSystem("attardi", 3);
  const auto projective = CoverageOfFiles({Fixture("projective.conll")}, as).front();
  c.Expect(projective.size == 3 && projective.failures == 0,
           "projective fixture with arc-standard");
  const auto deg2 = CoverageOfFiles({Fixture("nonprojective_deg2.conll")}, a3).front();
  c.Expect(deg2.size == 3 && deg2.failures == 0 && deg2.non_projective == 3,
           "degree-2 non-projective fixture with attardi(3)");
  // The fixture marks two of its four sentences as unparseable.
  const auto hard = CoverageOfFiles({Fixture("unparseable_attardi3.conll")}, a3).front();
  c.Expect(hard.size == 4 && hard.failures == 2 &&
               hard.failing_sentences == std::vector<int>{1, 3},
           "unparseable fixture with attardi(3)");
  if (!TreebankComparison(c, log)) {
    log << "  CoNLL 2006 data not supplied (CANONPARSE_CONLL2006_DIR unset); "
           "desk-scale fixtures only\n";
  }
}

void MonotonicityGate(Criterion& c) {
  try {
    Transform(SystemSpec::Validate({LeftArc(3, 1)}));
    c.Expect(false, "{la(3,1)} accepted");
  } catch (const Error& e) {
    c.Expect(e.kind() == ErrorKind::kNotMonotonic &&
                 std::string(e.what()).find("missing la:2,1") != std::string::npos,
             std::string("unexpected error ") + e.what());
  }
  c.Expect(Transform(BuiltinSystem("arc-standard")).degree() == 1, "arc-standard");
  for (int d = 2; d <= 4; ++d) {
    c.Expect(Transform(BuiltinSystem("attardi", d)).depth() == d,
             "attardi(" + std::to_string(d) + ")");
  }
}

}  // namespace
}  // namespace canonparse

int main() {
  using canonparse::Criterion;
  struct Entry {
    const char* name;
    std::function<void(Criterion&)> run;
  };
  std::ostringstream log;
  const std::vector<Entry> entries = {
      {"1 example regression", canonparse::ExampleRegression},
      {"2 non-ambiguity", canonparse::NonAmbiguity},
      {"3 equivalence", canonparse::Equivalence},
      {"4 oracle completeness", canonparse::OracleCompleteness},
      {"5 non-projective capability", canonparse::NonProjective},
      {"6 feature blow-up bound", canonparse::BlowUpBound},
      {"7 treebank coverage", [&](Criterion& c) { canonparse::TableReproduction(c, log); }},
      {"8 monotonicity gate", canonparse::MonotonicityGate},
  };
  int failed = 0;
  for (const auto& entry : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  [" << entry.name << "]  "
              << c.checks() << " checks, " << ms << " ms\n";
    for (const auto& f : c.failures()) std::cout << "      " << f << "\n";
    std::cout << log.str();
    log.str("");
    failed += c.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: ")
            << (failed == 0 ? "" : std::to_string(failed)) << "\n";
  return failed == 0 ? 0 : 1;
}
