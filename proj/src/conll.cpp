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

#include "canonparse/conll.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "canonparse/error.hpp"
#include "canonparse/oracle.hpp"

namespace canonparse {

namespace {

bool IsValidUtf8(std::string_view s) {
  size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    int extra;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (int k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::optional<int> PlainInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

ConllSentence BuildSentence(const std::vector<std::string_view>& lines) {
  ConllSentence sentence;
  std::string reason;
  for (std::string_view line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = Fields(line);
    const auto id = PlainInt(fields[0]);
    if (!id) continue;
    if (fields.size() < 8) {
      if (reason.empty()) {
        reason = "token " + std::to_string(*id) + " has " +
                 std::to_string(fields.size()) + " fields";
      }
      sentence.tokens.push_back({*id, std::string(fields.size() > 1 ? fields[1] : ""), -1});
      continue;
    }
    const auto head = PlainInt(fields[6]);
    if (!head && reason.empty()) {
      reason = "token " + std::to_string(*id) + " has head '" +
               std::string(fields[6]) + "'";
    }
    sentence.tokens.push_back({*id, std::string(fields[1]), head.value_or(-1)});
  }
  if (reason.empty()) {
    if (sentence.tokens.empty()) reason = "no tokens";
    for (size_t i = 0; i < sentence.tokens.size() && reason.empty(); ++i) {
      if (sentence.tokens[i].id != static_cast<int>(i) + 1) {
        reason = "ids are not contiguous from 1";
      }
    }
  }
  if (reason.empty()) {
    std::vector<NodeId> heads;
    for (const auto& t : sentence.tokens) heads.push_back(t.head);
    sentence.tree = DependencyTree::TryFromHeads(std::move(heads));
    if (!sentence.tree) reason = "heads do not form a rooted tree";
  }
  sentence.malformed_reason = reason;
  return sentence;
}

}  // namespace

std::vector<ConllSentence> ParseConllX(std::string_view text) {
  if (!IsValidUtf8(text)) throw Error(ErrorKind::kIo, "input is not UTF-8");
  std::vector<ConllSentence> out;
  std::vector<std::string_view> block;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (IsBlank(line)) {
      if (!block.empty()) out.push_back(BuildSentence(block));
      block.clear();
    } else {
      block.push_back(line);
    }
    start = end + 1;
  }
  if (!block.empty()) out.push_back(BuildSentence(block));
  return out;
}

std::vector<ConllSentence> ParseConllX(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed");
  return ParseConllX(text);
}

std::string WriteConllX(const std::vector<ConllSentence>& sentences) {
  std::ostringstream out;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      const std::string form = t.form.empty() ? "w" + std::to_string(t.id) : t.form;
      out << t.id << '\t' << form << "\t_\t_\t_\t_\t" << t.head
          << "\t_\t_\t_\n";
    }
    out << '\n';
  }
  return out.str();
}

CoverageRow Coverage(const std::string& source,
                     const std::vector<ConllSentence>& sentences,
                     const SystemSpec& spec) {
  CoverageRow row;
  row.source = source;
  for (size_t i = 0; i < sentences.size(); ++i) {
    const auto& s = sentences[i];
    if (s.malformed()) {
      ++row.malformed;
      continue;
    }
    ++row.size;
    if (!IsProjective(*s.tree)) ++row.non_projective;
    if (!CanonicalOracle(*s.tree, spec).success()) {
      ++row.failures;
      row.failing_sentences.push_back(static_cast<int>(i) + 1);
    }
  }
  return row;
}

std::vector<CoverageRow> CoverageOfFiles(const std::vector<std::string>& paths,
                                         const SystemSpec& spec) {
  if (!IsMonotonic(spec)) {
    throw Error(ErrorKind::kNotMonotonic, spec.ToString());
  }
  std::vector<CoverageRow> rows;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      CoverageRow row;
      row.source = path;
      row.error = "cannot open " + path;
      rows.push_back(std::move(row));
      continue;
    }
    try {
      rows.push_back(Coverage(path, ParseConllX(in), spec));
    } catch (const Error& e) {
      CoverageRow row;
      row.source = path;
      row.error = e.what();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string CoverageTsv(const std::vector<CoverageRow>& rows) {
  std::ostringstream out;
  out << "source\tsize\tfailures\tnon_projective\tmalformed\n";
  for (const auto& r : rows) {
    out << r.source << '\t' << r.size << '\t' << r.failures << '\t'
        << r.non_projective << '\t' << r.malformed << '\n';
  }
  return out.str();
}

}  // namespace canonparse
