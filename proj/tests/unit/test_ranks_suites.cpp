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

#include <set>

#include "ualg/catalog.hpp"
#include "ualg/errors.hpp"
#include "ualg/ranks.hpp"
#include "ualg/suites.hpp"

using namespace ualg;

namespace {

FiniteAlgebra named(const std::string& name) {
  auto e = find_catalog_entry(name);
  REQUIRE(e);
  return e->algebra;
}

}  // namespace

TEST_CASE("subset enumeration order") {
  CHECK(all_subsets(3) == std::vector<std::uint64_t>{0, 1, 2, 4, 3, 5, 6, 7});
  CHECK(nonempty_subsets(2) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK_THROWS_AS(all_subsets(25), CarrierTooLarge);
}

TEST_CASE("per-algebra ranks") {
  const auto trivial = named("trivial-pointed");
  CHECK(algebra_rank(trivial, 0, Mode::induction, 3).rank == 0u);
  CHECK(algebra_rank(trivial, 0, Mode::deduction, 3).rank == 0u);

  const auto pointed = named("pointed3");
  CHECK(algebra_rank(pointed, 0, Mode::induction, 3).rank == 0u);
  const auto ded = algebra_rank(pointed, 0, Mode::deduction, 3);
  CHECK(ded.rank == 1u);
  CHECK(ded.witness == ElementSet(3, {1}));
  CHECK(ded.witness_chain == std::vector<ElementSet>{ElementSet(3, {1}), ElementSet(3, {0, 1})});

  // Exhaustively, {0} and {1} are already inductive here.
  const auto boolean = named("bool-semiring");
  CHECK(algebra_rank(boolean, 0, Mode::induction, 3).rank == 0u);
  CHECK(algebra_rank(boolean, 0, Mode::deduction, 3).rank == 1u);

  CHECK(algebra_rank(named("z4-ring"), 0, Mode::induction, 3).rank == 1u);
  CHECK_FALSE(algebra_rank(pointed, 0, Mode::deduction, 0).rank);

  const auto big = make_algebra(Signature({{"t", 0}}), 17, {{0}}, 0);
  CHECK_THROWS_AS(algebra_rank(big, 0, Mode::induction, 2), CarrierTooLarge);
}

TEST_CASE("catalog contents") {
  const auto catalog = build_catalog(4);
  CHECK(catalog.size() >= 10);
  std::set<std::string> names;
  for (const auto& e : catalog) {
    CHECK(e.algebra.size() <= 4);
    CHECK(e.algebra.top().has_value());
    CHECK(names.insert(e.name()).second);
  }
  for (const char* n : {"z2-monoid", "z4-ring", "bool-semiring", "pointed2", "pointed4",
                        "z3-group", "minplus1", "z3-module", "trivial-monoid"}) {
    CHECK(names.count(n) == 1);
  }
  CHECK_THROWS_AS(build_catalog(1), ValueOutOfRange);
  CHECK(build_catalog(4).size() == catalog.size());
  CHECK(!find_catalog_entry("no-such-algebra"));
}

TEST_CASE("suite registry and rendering") {
  CHECK(suite_names().size() == 12);
  CHECK_THROWS_AS(run_suite("nope"), UnknownSuite);
  CHECK(set_argument(ElementSet(3)) == "-");
  CHECK(set_argument(ElementSet(3, {0, 2})) == "0,2");

  SuiteReport r;
  r.suite = "demo";
  r.cases = 3;
  CHECK(render(r) == "PASS demo 3 0\n");
  r.failures.push_back({"catalog:z2-monoid", "1", 0, "x", "a", "b"});
  CHECK(render(r) ==
        "FAIL demo 3 1\n  case catalog:z2-monoid --set 1 --top 0 check=\"x\" expected=a actual=b\n");
}

TEST_CASE("suites pass on a small catalog") {
  SuiteConfig config;
  config.limit = 3;
  config.threads = 2;
  for (const char* name : {"theorem-a", "theorem-c", "clot-idempotent", "term-oracle",
                           "semiring", "comm-monoid", "maltsev", "subtractive",
                           "jonsson-tarski", "rank0", "nat-chain"}) {
    const auto report = run_suite(name, config);
    INFO(render(report));
    CHECK(report.passed());
    CHECK(report.cases > 0);
  }
}

TEST_CASE("subalgebra suite reports the converse failures") {
  SuiteConfig config;
  config.limit = 2;
  const auto report = run_suite("theorem-b", config);
  REQUIRE_FALSE(report.passed());
  for (const auto& f : report.failures) CHECK(f.check == "ind I >= <I> => I >= <top>");
}

TEST_CASE("suites are deterministic across thread counts") {
  SuiteConfig one, many;
  one.threads = 1;
  many.threads = 4;
  const auto a = run_suite("theorem-b", one), b = run_suite("theorem-b", many);
  CHECK(a.cases == b.cases);
  CHECK(render(SuiteReport{a.suite, a.cases, a.failures, {}}) ==
        render(SuiteReport{b.suite, b.cases, b.failures, {}}));
}

TEST_CASE("extra algebras join the generic suites") {
  SuiteConfig config;
  config.limit = 2;
  const auto chain3 = make_algebra(Signature({{"min", 2}, {"top", 0}}), 3,
                                   {{0, 0, 0, 0, 1, 1, 0, 1, 2}, {2}}, 2, "chain3");
  config.extra.push_back(CatalogEntry{chain3, Family::trivial, {}, {}, {}, {}, {}});
  const auto base = run_suite("theorem-a", SuiteConfig{2, {}, {2, 3, 5, 7, 11}, 0, 4, 0});
  const auto with_extra = run_suite("theorem-a", config);
  CHECK(with_extra.passed());
  CHECK(with_extra.cases == base.cases + 7);

  config.extra.push_back(CatalogEntry{make_algebra(Signature({{"t", 0}}), 17, {{0}}, 0, "big"),
                                      Family::trivial, {}, {}, {}, {}, {}});
  CHECK_THROWS_AS(run_suite("theorem-a", config), CarrierTooLarge);
}

TEST_CASE("nat-chain suite with a truncated seed") {
  SuiteConfig config;
  config.primes = {2, 3, 5, 7};
  config.chain_m = 4;
  config.chain_depth = 4;
  CHECK(run_suite("nat-chain", config).passed());
}
