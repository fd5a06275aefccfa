// Copyright 2026 The ualg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ualg/catalog.hpp"
#include "ualg/cli.hpp"
#include "ualg/errors.hpp"
#include "ualg/text_format.hpp"

using namespace ualg;

namespace {

constexpr const char* kZ2 = "algebra z2\nsize 2\nop add 2\n0 1 1 0\nconst zero 0\ntop 0\nend";

constexpr const char* kZ4Ring = R"(# the ring Z/4
algebra z4ring
size 4
op add 2
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
op mul 2
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
const zero 0
const one 1
top 0
end
)";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ualg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ualg-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("parse the z2 example") {
  const auto a = parse_algebra(kZ2);
  CHECK(a.name() == "z2");
  CHECK(a.size() == 2);
  CHECK(a.signature().symbols() == std::vector<Symbol>{{"add", 2}, {"zero", 0}});
  CHECK(a.table(0) == std::vector<Element>{0, 1, 1, 0});
  CHECK(a.top() == 0u);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_algebra("algebra z2\nsize 2\nop add 2\n0 1 1 0\n"), ParseError);
  try {
    parse_algebra("algebra z2\nsize 2\nop add 2\n0 1\n1 2\nend\n");
    FAIL("expected ValueOutOfRange");
  } catch (const ValueOutOfRange& e) {
    CHECK(std::string(e.what()).rfind("5:3:", 0) == 0);
  }
  try {
    parse_algebra("algebra z2\nsize 2\nop add x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_algebra("size 2\nend"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 0\nend"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 2\nwhat\nend"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 2\nconst c 0\nconst c 1\nend"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 2\ntop 0\ntop 1\nend"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 2\nend\nextra"), ParseError);
  CHECK_THROWS_AS(parse_algebra("algebra a\nsize 2\ntop 2\nend"), ValueOutOfRange);
}

TEST_CASE("comments and free-form tables") {
  const auto a = parse_algebra("algebra z2 # name\nsize 2\n# a comment\nop add 2 0\n1\n\n 1 0 # row\nend");
  CHECK(a == parse_algebra("algebra z2\nsize 2\nop add 2\n0 1 1 0\nend"));
  CHECK_FALSE(a.top());
}

TEST_CASE("render round-trips") {
  const auto a = parse_algebra(kZ4Ring);
  const std::string text = render_algebra(a);
  CHECK(text.find("op add 2\n0 1 2 3\n1 2 3 0\n") != std::string::npos);
  CHECK(text.find("const one 1\n") != std::string::npos);
  CHECK(parse_algebra(text) == a);
  for (const auto& e : build_catalog(4)) CHECK(parse_algebra(render_algebra(e.algebra)) == e.algebra);
}

TEST_CASE("cli: induction to fixpoint") {
  const auto path = write_temp("z4ring.ua", kZ4Ring);
  const auto r = cli({"ind", path, "--set", "2", "--fixpoint"});
  CHECK(r.code == 0);
  CHECK(r.out == "{0,2}\nchain {2} ⊂ {0,2}\nfixpoint 1\n");
  CHECK(r.err.empty());

  const auto steps = cli({"ded", "catalog:bool-semiring", "--set", "1", "--steps", "1"});
  CHECK(steps.out == "{0,1}\nchain {1} ⊂ {0,1}\nfixpoint not reached in 1 steps\n");
  const auto stable = cli({"ded", "catalog:bool-semiring", "--set", "1", "--steps", "3"});
  CHECK(stable.out == "{0,1}\nchain {1} ⊂ {0,1}\nfixpoint 1\n");
  CHECK(cli({"ind", path, "--set", "-", "--fixpoint"}).out == "{}\nchain {}\nfixpoint 0\n");
}

TEST_CASE("cli: clot, normal, relations") {
  CHECK(cli({"clot", "catalog:bool-semiring", "--set", "1"}).out == "{0,1}\n");
  CHECK(cli({"normal", "catalog:bool-semiring", "--set", "1"}).out == "not-normal {0,1}\n");
  CHECK(cli({"normal", "catalog:z4-ring", "--set", "0,2"}).out == "normal {0,2}\n");
  CHECK(cli({"semicong", "catalog:pointed3", "--set", "1"}).out == "0 0\n1 0\n1 1\n2 2\n");
  CHECK(cli({"cong", "catalog:z4-monoid", "--set", "2"}).out ==
        "0 0\n0 2\n1 1\n1 3\n2 0\n2 2\n3 1\n3 3\n");
  CHECK(cli({"clot", "catalog:pointed3", "--set", "1", "--top", "2"}).out == "{1,2}\n");
}

TEST_CASE("cli: rank, chain, catalog") {
  const auto r = cli({"rank", "catalog:pointed3", "--mode", "ded"});
  CHECK(r.code == 0);
  CHECK(r.out == "per-algebra rank ded 1 witness {1}\nchain {1} ⊂ {0,1}\n");
  const auto c = cli({"chain", "--primes", "2,3,5,7", "--depth", "2"});
  CHECK(c.out == "stage 0 {2,6,15,35}\nstage 1 {1,2,3,6,15,35}\nstage 2 {1,2,3,5,6,15,35}\n");
  CHECK(cli({"catalog", "z2-monoid"}).out == "algebra z2-monoid\nsize 2\nop add 2\n0 1\n1 0\nconst zero 0\ntop 0\nend\n");
  CHECK(cli({"catalog"}).out.find("bool-semiring 2 boolean-semiring\n") != std::string::npos);
}

TEST_CASE("cli: verify") {
  const auto r = cli({"verify", "--suite", "theorem-a", "--limit", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS theorem-a ", 0) == 0);
  CHECK(r.out.substr(r.out.size() - 3) == " 0\n");

  const auto b = cli({"verify", "--suite", "theorem-b", "--limit", "2"});
  CHECK(b.code == 1);
  CHECK(b.out.rfind("FAIL theorem-b ", 0) == 0);
  CHECK(cli({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("cli: failure lines rerun as single cases") {
  const auto b = cli({"verify", "--suite", "theorem-b", "--limit", "2"});
  std::istringstream lines(b.out);
  std::string line;
  std::getline(lines, line);
  REQUIRE(std::getline(lines, line));
  // "  case catalog:z2-monoid --set 1 --top 0 check=..."
  std::istringstream words(line);
  std::string word, target, set, top;
  words >> word >> target >> word >> set >> word >> top;
  CHECK(target == "catalog:z2-monoid");
  const auto rerun = cli({"ind", target, "--set", set, "--top", top});
  CHECK(rerun.code == 0);
  CHECK(rerun.out.rfind("{0,1}\n", 0) == 0);
}

TEST_CASE("cli: input errors exit 2") {
  const auto missing = cli({"ind", "missing.ua", "--set", "1"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("missing.ua") != std::string::npos);
  CHECK(missing.out.empty());

  const auto no_top = write_temp("notop.ua", "algebra n\nsize 2\nop add 2\n0 1 1 0\nend\n");
  CHECK(cli({"ind", no_top, "--set", "1"}).code == 2);
  CHECK(cli({"ind", no_top, "--set", "1", "--top", "0"}).code == 0);
  CHECK(cli({"ind", no_top, "--set", "1", "--top", "5"}).code == 2);
  CHECK(cli({"ind", no_top, "--set", "7", "--top", "0"}).code == 2);
  CHECK(cli({"ind", no_top, "--set", "1,,0", "--top", "0"}).code == 2);
  const auto bad = write_temp("bad.ua", "algebra n\nsize 2\nop add 2\n0 1 1\n");
  const auto parse = cli({"clot", bad, "--set", "1", "--top", "0"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("5:1") != std::string::npos);
  CHECK(cli({"ind", "catalog:nothing", "--set", "1"}).code == 2);
  CHECK(cli({"rank", "catalog:z2-monoid", "--mode", "sideways"}).code == 2);
  CHECK(cli({"chain", "--primes", "2,4", "--depth", "2"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}
