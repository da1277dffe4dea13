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

#include "canonparse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "canonparse/conll.hpp"
#include "canonparse/disambiguator.hpp"
#include "canonparse/error.hpp"
#include "canonparse/oracle.hpp"
#include "canonparse/verifier.hpp"

namespace canonparse {

namespace {

constexpr int kUsageError = 2;
constexpr int kCheckFailed = 1;

FeatureTracking ParseTracking(const std::string& name) {
  if (name == "pairwise") return FeatureTracking::kPairwise;
  if (name == "positional") return FeatureTracking::kPositional;
  throw Error(ErrorKind::kSyntax, "unknown tracking '" + name + "'");
}

std::int64_t ResolveBudget(const std::optional<std::int64_t>& flag) {
  return flag ? *flag : BudgetFromEnvironment();
}

int RunTransform(const SystemSpec& spec, FeatureTracking tracking,
                 std::ostream& out) {
  const EnrichedSystem esys = Transform(spec, tracking);
  const auto inventory = esys.Inventory();
  out << "base\t" << spec.ToString() << "\n"
      << "degree\t" << esys.degree() << "\n"
      << "depth\t" << esys.depth() << "\n"
      << "features\t" << esys.feature_count() << "\n"
      << "tracking\t" << ToString(tracking) << "\n"
      << "transitions\t" << inventory.size() << "\n"
      << "inventory\t";
  for (size_t i = 0; i < inventory.size(); ++i) {
    out << (i ? " " : "") << inventory[i].ToString();
  }
  out << "\n";
  return 0;
}

int RunVerify(const SystemSpec& spec, int max_len, std::int64_t budget,
              std::ostream& out) {
  bool all_pass = true;
  for (const auto& line : VerifySystem(spec, max_len, budget)) {
    out << (line.pass ? "PASS" : "FAIL") << "\t" << line.text << "\n";
    all_pass &= line.pass;
  }
  return all_pass ? 0 : kCheckFailed;
}

void PrintReport(const EnumerationReport& report, std::ostream& out) {
  out << "n\tsystem\tcomputations\ttrees\tmax_ambiguity\n"
      << report.n << "\t" << report.system << "\t" << report.computation_count
      << "\t" << report.tree_count() << "\t" << report.max_ambiguity << "\n\n"
      << "tree\tcomputations\n";
  for (const auto& [tree, count] : report.per_tree) {
    out << tree.ToString() << "\t" << count << "\n";
  }
}

std::vector<ConllSentence> ReadConll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  return ParseConllX(in);
}

int RunOracle(const SystemSpec& spec, const std::string& path, bool enriched,
              std::ostream& out) {
  const EnrichedSystem esys = Transform(spec);
  for (const auto& sentence : ReadConll(path)) {
    if (sentence.malformed()) {
      out << "MALFORMED\n";
      continue;
    }
    const OracleOutcome outcome = CanonicalOracle(*sentence.tree, spec);
    if (!outcome.success()) {
      out << "UNPARSEABLE\n";
    } else if (enriched) {
      out << LiftToEnriched(*outcome.computation, *sentence.tree, esys).ToString()
          << "\n";
    } else {
      out << outcome.computation->ToString() << "\n";
    }
  }
  return 0;
}

int RunCoverage(const SystemSpec& spec, const std::vector<std::string>& files,
                const std::string& itemize, std::ostream& out,
                std::ostream& err) {
  const auto rows = CoverageOfFiles(files, spec);
  out << CoverageTsv(rows);
  bool io_failed = false;
  for (const auto& row : rows) {
    if (row.error) {
      err << "error: " << *row.error << "\n";
      io_failed = true;
    }
  }
  if (!itemize.empty()) {
    std::ofstream list(itemize, std::ios::binary);
    if (!list) throw Error(ErrorKind::kIo, "cannot write " + itemize);
    list << "source\tsentence\n";
    for (const auto& row : rows) {
      for (int s : row.failing_sentences) list << row.source << "\t" << s << "\n";
    }
  }
  return io_failed ? kCheckFailed : 0;
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Bottom-up shift-reduce systems without spurious ambiguity",
               "canonparse"};
  app.require_subcommand(1);

  std::string system_text;
  std::string tracking_name = "pairwise";
  std::optional<std::int64_t> budget;
  int max_len = 0;
  int len = 0;
  bool enriched = false;
  std::string conll_path;
  std::vector<std::string> conll_files;
  std::string itemize;

  auto* verify = app.add_subcommand("verify", "Exhaustive checks up to a length");
  verify->add_option("--system", system_text, "System name or DSL")->required();
  verify->add_option("--max-len", max_len, "Largest sentence length")
      ->required()->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget, "Configuration budget per enumeration");

  auto* oracle = app.add_subcommand("oracle", "Canonical derivation per sentence");
  oracle->add_option("--system", system_text, "System name or DSL")->required();
  oracle->add_option("--conll", conll_path, "CoNLL-X file")->required();
  oracle->add_flag("--enriched", enriched, "Emit enriched transitions");

  auto* coverage = app.add_subcommand("coverage", "Oracle coverage per treebank");
  coverage->add_option("--system", system_text, "System name or DSL")->required();
  coverage->add_option("--conll", conll_files, "CoNLL-X files")->required();
  coverage->add_option("--itemize", itemize,
                       "Write unparseable sentence positions to this TSV file");

  auto* transform = app.add_subcommand("transform", "Enriched system summary");
  transform->add_option("--system", system_text, "System name or DSL")->required();
  transform->add_option("--tracking", tracking_name, "pairwise or positional");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate complete computations");
  enumerate->add_option("--system", system_text, "System name or DSL")->required();
  enumerate->add_option("--len", len, "Sentence length")
      ->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--enriched", enriched, "Enumerate the enriched system");
  enumerate->add_option("--tracking", tracking_name, "pairwise or positional");
  enumerate->add_option("--budget", budget, "Configuration budget");

  std::vector<std::string> argv_storage = {"canonparse"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    const SystemSpec spec = ParseSystem(system_text);
    if (verify->parsed()) return RunVerify(spec, max_len, ResolveBudget(budget), out);
    if (oracle->parsed()) return RunOracle(spec, conll_path, enriched, out);
    if (coverage->parsed()) return RunCoverage(spec, conll_files, itemize, out, err);
    if (transform->parsed()) {
      return RunTransform(spec, ParseTracking(tracking_name), out);
    }
    if (enumerate->parsed()) {
      const std::int64_t b = ResolveBudget(budget);
      if (enriched) {
        PrintReport(SpuriousAmbiguityReport(
                        Transform(spec, ParseTracking(tracking_name)), len, b),
                    out);
      } else {
        PrintReport(SpuriousAmbiguityReport(spec, len, b), out);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kSyntax:
      case ErrorKind::kInvalidTemplate:
      case ErrorKind::kEmptySystem:
      case ErrorKind::kUnknownSystem:
      case ErrorKind::kInvalidDepth:
      case ErrorKind::kInvalidInput:
      case ErrorKind::kIo:
        return kUsageError;
      default:
        return kCheckFailed;
    }
  }
  return kUsageError;
}

}  // namespace canonparse
