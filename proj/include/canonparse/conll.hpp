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

// CoNLL-X treebank reading and the oracle coverage experiment.

#ifndef CANONPARSE_CONLL_HPP_
#define CANONPARSE_CONLL_HPP_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canonparse/transition.hpp"

namespace canonparse {

struct ConllToken {
  int id = 0;
  std::string form;
  int head = 0;
};

struct ConllSentence {
  std::vector<ConllToken> tokens;
  // Absent when the sentence is malformed.
  std::optional<DependencyTree> tree;
  std::string malformed_reason;

  bool malformed() const { return !tree.has_value(); }
};

// Blank-line separated blocks; ID, FORM and HEAD are columns 1, 2 and 7.
// Rows whose ID is not a plain integer (multiword ranges, empty nodes) are
// skipped. Throws kIo for input that is not valid UTF-8.
std::vector<ConllSentence> ParseConllX(std::string_view text);
std::vector<ConllSentence> ParseConllX(std::istream& in);

// Renders trees as minimal 10-column CoNLL-X, forms "w<id>" unless given.
std::string WriteConllX(const std::vector<ConllSentence>& sentences);

struct CoverageRow {
  std::string source;
  int size = 0;
  int failures = 0;
  int non_projective = 0;
  int malformed = 0;
  // Set when the file could not be read; counts are then zero.
  std::optional<std::string> error;
  // 1-based positions (over all blocks in the file) of unparseable
  // sentences.
  std::vector<int> failing_sentences;
};

CoverageRow Coverage(const std::string& source,
                     const std::vector<ConllSentence>& sentences,
                     const SystemSpec& spec);

// Reads each file; unreadable files produce a row with `error` set.
// Throws kNotMonotonic for a system the oracle cannot serve.
std::vector<CoverageRow> CoverageOfFiles(const std::vector<std::string>& paths,
                                         const SystemSpec& spec);

// Header plus one row per entry, LF line endings.
std::string CoverageTsv(const std::vector<CoverageRow>& rows);

}  // namespace canonparse

#endif  // CANONPARSE_CONLL_HPP_
