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

#include <sstream>

#include "canonparse/cli.hpp"

namespace canonparse {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = CliMain(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Fixture(const char* name) {
  return std::string(CANONPARSE_FIXTURES_DIR) + "/" + name;
}

TEST_CASE("transform summary") {
  const auto r = Cli({"transform", "--system", "arc-standard"});
  CHECK(r.code == 0);
  CHECK(r.out.find("features\t3\n") != std::string::npos);
  CHECK(r.out.find("transitions\t6\n") != std::string::npos);
  CHECK(r.out.find("inventory\tsh.s sh.ns la.s:2,1 la.ns:2,1 ra.s:2,1 ra.ns:2,1\n") !=
        std::string::npos);

  const auto deg2 = Cli({"transform", "--system", "attardi-deg2"});
  CHECK(deg2.out.find("features\t5\n") != std::string::npos);
  CHECK(deg2.out.find("transitions\t10\n") != std::string::npos);

  const auto bad = Cli({"transform", "--system", "la:3,1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotMonotonic") != std::string::npos);
}

TEST_CASE("verify") {
  const auto ok = Cli({"verify", "--system", "arc-standard", "--max-len", "3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS\tn=3\tnon-ambiguity") != std::string::npos);

  const auto bad = Cli({"verify", "--system", "la:2,1;la:4,1", "--max-len", "2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("FAIL\tmonotonic", 0) == 0);

  const auto tiny = Cli({"verify", "--system", "arc-standard", "--max-len", "5",
                         "--budget", "5"});
  CHECK(tiny.code == 1);
  CHECK(tiny.out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("oracle output") {
  const auto r = Cli({"oracle", "--system", "arc-standard", "--conll",
                      Fixture("projective.conll"), "--enriched"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "sh.s sh.ns la.s:2,1 ra.s:2,1\n"
        "sh.s sh.ns la.ns:2,1 sh.s ra.s:2,1 ra.s:2,1\n"
        "sh.s sh.ns la.s:2,1 sh.ns la.ns:2,1 sh.ns sh.s ra.s:2,1 ra.s:2,1 "
        "ra.s:2,1\n");
  const auto base = Cli({"oracle", "--system", "arc-standard", "--conll",
                         Fixture("nonprojective_deg2.conll")});
  CHECK(base.out == "UNPARSEABLE\nUNPARSEABLE\nUNPARSEABLE\n");
  const auto bad = Cli({"oracle", "--system", "arc-standard", "--conll",
                        Fixture("malformed.conll")});
  CHECK(bad.out.find("MALFORMED\n") != std::string::npos);
}

TEST_CASE("coverage table") {
  const auto r = Cli({"coverage", "--system", "attardi-deg2", "--conll",
                      Fixture("projective.conll"),
                      Fixture("unparseable_attardi3.conll")});
  CHECK(r.code == 0);
  const std::string expected =
      "source\tsize\tfailures\tnon_projective\tmalformed\n" +
      Fixture("projective.conll") + "\t3\t0\t0\t0\n" +
      Fixture("unparseable_attardi3.conll") + "\t4\t2\t3\t0\n";
  CHECK(r.out == expected);

  const auto missing = Cli({"coverage", "--system", "arc-standard", "--conll",
                            Fixture("nope.conll")});
  CHECK(missing.code == 1);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("enumerate") {
  const auto r = Cli({"enumerate", "--system", "arc-standard", "--len", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n\tsystem\tcomputations\ttrees\tmax_ambiguity\n3\tla:2,1;ra:2,1\t13\t12\t2\n", 0) == 0);
  CHECK(r.out.find("{0->2,2->1,2->3}\t2\n") != std::string::npos);
  const auto e = Cli({"enumerate", "--system", "arc-standard", "--len", "3", "--enriched"});
  CHECK(e.out.find("\t12\t12\t1\n") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(Cli({}).code == 2);
  CHECK(Cli({"verify", "--system", "arc-standard"}).code == 2);
  CHECK(Cli({"transform", "--system", "zz:1"}).code == 2);
  CHECK(Cli({"transform", "--system", "arc-standard", "--tracking", "other"}).code == 2);
  CHECK(Cli({"frobnicate"}).code == 2);
  CHECK(Cli({"--help"}).code == 0);
}

}  // namespace
}  // namespace canonparse
