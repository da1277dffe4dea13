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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "canonparse/conll.hpp"
#include "canonparse/error.hpp"
#include "canonparse/verifier.hpp"
#include "test_util.hpp"

namespace canonparse {
namespace {

std::string Fixture(const char* name) {
  return std::string(CANONPARSE_FIXTURES_DIR) + "/" + name;
}

TEST_CASE("reads id, form and head") {
  const auto s = ParseConllX(
      "1\tla\t_\t_\t_\t_\t2\t_\t_\t_\n2\tmaison\t_\t_\t_\t_\t0\t_\t_\t_\n");
  REQUIRE(s.size() == 1);
  REQUIRE_FALSE(s[0].malformed());
  CHECK(*s[0].tree == testing::Tree(2, {{0, 2}, {2, 1}}));
  CHECK(s[0].tokens[1].form == "maison");
  CHECK(ParseConllX("").empty());
  CHECK(ParseConllX("\n\n  \n").empty());
}

TEST_CASE("flags malformed sentences") {
  const auto cyclic = ParseConllX(
      "1\tx\t_\t_\t_\t_\t2\t_\t_\t_\n2\ty\t_\t_\t_\t_\t1\t_\t_\t_\n");
  REQUIRE(cyclic.size() == 1);
  CHECK(cyclic[0].malformed());

  const auto short_row = ParseConllX("1\tx\t_\t_\t_\t0\n");
  CHECK(short_row[0].malformed());
  const auto bad_head = ParseConllX("1\tx\t_\t_\t_\t_\t_\t_\n");
  CHECK(bad_head[0].malformed());

  const auto all = ParseConllX([] {
    std::ifstream in(Fixture("malformed.conll"));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  REQUIRE(all.size() == 4);
  CHECK_FALSE(all[0].malformed());
  CHECK(all[1].malformed());
  CHECK(all[2].malformed());
  // The multiword range row is skipped.
  CHECK_FALSE(all[3].malformed());
  CHECK(all[3].tokens.size() == 2);
}

TEST_CASE("tolerates eight columns and CRLF") {
  const auto s = ParseConllX("1\ta\t_\t_\t_\t_\t0\t_\r\n\r\n1\tb\t_\t_\t_\t_\t0\t_\r\n");
  REQUIRE(s.size() == 2);
  CHECK_FALSE(s[0].malformed());
  CHECK_FALSE(s[1].malformed());
}

TEST_CASE("rejects invalid UTF-8") {
  try {
    ParseConllX(std::string("1\t\xff\t_\t_\t_\t_\t0\t_\n"));
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }
  CHECK_FALSE(ParseConllX("1\tmaiso\xc3\xb1\t_\t_\t_\t_\t0\t_\n")[0].malformed());
  CHECK_THROWS_AS(ParseConllX(std::string("1\t\xc3")), Error);
}

TEST_CASE("written trees read back identically") {
  std::vector<ConllSentence> sentences;
  for (int n = 1; n <= 4; ++n) {
    for (const auto& tree : AllTrees(n)) {
      ConllSentence s;
      for (NodeId d = 1; d <= n; ++d) s.tokens.push_back({d, "", tree.head(d)});
      s.tree = tree;
      sentences.push_back(std::move(s));
    }
  }
  const auto back = ParseConllX(WriteConllX(sentences));
  REQUIRE(back.size() == sentences.size());
  for (size_t i = 0; i < back.size(); ++i) {
    REQUIRE_FALSE(back[i].malformed());
    CHECK(*back[i].tree == *sentences[i].tree);
  }
}

TEST_CASE("coverage of the bundled fixtures") {
  const auto as = BuiltinSystem("arc-standard");
  const auto a3 = BuiltinSystem("attardi", 3);
  const auto rows = CoverageOfFiles({Fixture("projective.conll")}, as);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].size == 3);
  CHECK(rows[0].failures == 0);
  CHECK(rows[0].non_projective == 0);

  const auto np = CoverageOfFiles({Fixture("nonprojective_deg2.conll")}, a3)[0];
  CHECK(np.size == 3);
  CHECK(np.failures == 0);
  CHECK(np.non_projective == 3);

  const auto hard = CoverageOfFiles({Fixture("unparseable_attardi3.conll")}, a3)[0];
  CHECK(hard.size == 4);
  CHECK(hard.failures == 2);
  CHECK(hard.failing_sentences == std::vector{1, 3});

  const auto bad = CoverageOfFiles({Fixture("malformed.conll")}, as)[0];
  CHECK(bad.size == 2);
  CHECK(bad.malformed == 2);

  const auto missing = CoverageOfFiles({Fixture("does-not-exist.conll")}, as);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].error.has_value());

  CHECK_THROWS_AS(CoverageOfFiles({}, SystemSpec::Validate({LeftArc(3, 1)})), Error);
}

TEST_CASE("coverage never increases with depth") {
  for (const char* name : {"projective.conll", "nonprojective_deg2.conll",
                           "unparseable_attardi3.conll"}) {
    int previous = 1 << 30;
    for (int d = 2; d <= 5; ++d) {
      const auto row = CoverageOfFiles({Fixture(name)}, BuiltinSystem("attardi", d))[0];
      CHECK(row.failures <= previous);
      previous = row.failures;
    }
  }
}

TEST_CASE("coverage TSV is deterministic") {
  const auto a3 = BuiltinSystem("attardi", 3);
  const std::vector<std::string> files = {Fixture("unparseable_attardi3.conll"),
                                          Fixture("projective.conll")};
  const std::string first = CoverageTsv(CoverageOfFiles(files, a3));
  CHECK(first == CoverageTsv(CoverageOfFiles(files, a3)));
  CHECK(first.rfind("source\tsize\tfailures\tnon_projective\tmalformed\n", 0) == 0);
  CHECK(first.find('\r') == std::string::npos);
}

}  // namespace
}  // namespace canonparse
