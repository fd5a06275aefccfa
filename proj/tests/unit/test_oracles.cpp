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

#include "ualg/catalog.hpp"
#include "ualg/errors.hpp"
#include "ualg/nat_chain.hpp"
#include "ualg/oracles.hpp"
#include "brute.hpp"

using namespace ualg;

namespace {

CatalogEntry entry(const std::string& name) {
  auto e = find_catalog_entry(name);
  REQUIRE(e);
  return *e;
}

SemiringView semiring(const std::string& name) {
  return SemiringView(entry(name).algebra, "add", "mul", "zero", "one");
}

ElementSet set(std::size_t n, std::initializer_list<Element> xs) { return ElementSet(n, xs); }

Term var(std::size_t i) { return Term::variable(i); }

BigNaturalSet nats(std::initializer_list<int> xs) {
  BigNaturalSet out;
  for (int x : xs) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("semiring view checks axioms") {
  CHECK_NOTHROW(semiring("bool-semiring"));
  for (const auto& e : build_catalog(5)) {
    if (!e.semiring) continue;
    CHECK_NOTHROW(SemiringView(e.algebra, e.semiring->add, e.semiring->mul, e.semiring->zero,
                               e.semiring->one));
  }
  // a group is not a semiring under (add, add)
  const auto g = entry("z3-group").algebra;
  CHECK_THROWS_AS(SemiringView(g, "add", "add", "zero"), AxiomViolation);
}

TEST_CASE("semiring ideal, induction and deduction formulas") {
  const auto b = semiring("bool-semiring");
  const auto z4 = semiring("z4-ring");
  CHECK(semiring_ideal_generated(b, ElementSet(2)) == set(2, {0}));
  CHECK(semiring_ideal_generated(b, set(2, {1})) == set(2, {0, 1}));
  CHECK(semiring_ideal_generated(z4, set(4, {2})) == set(4, {0, 2}));

  CHECK(semiring_ind_oracle(b, set(2, {1})) == set(2, {1}));
  CHECK(semiring_ind_oracle(z4, set(4, {2})) == set(4, {0, 2}));
  for (std::uint64_t m = 1; m < 16; m += 2) {  // 0 in I
    const auto i = ElementSet::from_mask(4, m);
    CHECK(semiring_ind_oracle(z4, i) == semiring_ideal_generated(z4, i));
  }

  CHECK(semiring_ded_oracle(b, set(2, {1})) == set(2, {0, 1}));
  CHECK(semiring_ded_oracle(z4, set(4, {0, 2})) == set(4, {0, 2}));

  CHECK(is_subtractive_ideal(b, set(2, {0})));
  CHECK_FALSE(is_subtractive_ideal(b, set(2, {1})));
  CHECK(is_subtractive_ideal(b, set(2, {0, 1})));
  CHECK(is_semiring_ideal(z4, set(4, {0, 2})));
  CHECK_FALSE(is_semiring_ideal(z4, set(4, {0, 1})));
}

TEST_CASE("subtractive ideals are fixed by the deduction formula") {
  for (const auto& e : build_catalog(4)) {
    if (!e.semiring) continue;
    const SemiringView s(e.algebra, e.semiring->add, e.semiring->mul, e.semiring->zero,
                         e.semiring->one);
    for (std::uint64_t m = 0; m < (1U << s.size()); ++m) {
      const auto i = ElementSet::from_mask(s.size(), m);
      if (is_subtractive_ideal(s, i)) CHECK(semiring_ded_oracle(s, i) == i);
    }
  }
}

TEST_CASE("commutative monoid oracles") {
  const auto z3 = entry("z3-monoid").algebra;
  const auto z4 = entry("z4-monoid").algebra;
  const auto sat3 = entry("sat3-monoid").algebra;
  CHECK(subsemigroup_generated(z3, "add", ElementSet(3)) == ElementSet(3));
  CHECK(subsemigroup_generated(z3, "add", set(3, {1})) == ElementSet::full(3));
  CHECK(subsemigroup_generated(z4, "add", set(4, {2})) == set(4, {0, 2}));

  CHECK(subtractive_closure_submonoid(z4, "add", ElementSet::full(4)) == ElementSet::full(4));
  CHECK(subtractive_closure_submonoid(z4, "add", set(4, {0, 2})) == set(4, {0, 2}));
  CHECK(subtractive_closure_submonoid(sat3, "add", set(4, {0, 3})) == ElementSet::full(4));

  CHECK(is_submonoid(z4, "add", 0, set(4, {0, 2})));
  CHECK_FALSE(is_submonoid(z4, "add", 0, set(4, {2})));
  CHECK(is_subtractive_submonoid(z4, "add", 0, set(4, {0, 2})));
  CHECK_FALSE(is_subtractive_submonoid(sat3, "add", 0, set(4, {0, 3})));
  CHECK(monoid_ded_formula(z4, "add", 0, set(4, {2})) == set(4, {0, 2}));
}

TEST_CASE("term identity checks") {
  const auto z4 = entry("z4-group");
  const auto& sig = z4.algebra.signature();
  const Term minus = Term::apply(sig, "add", {var(0), Term::apply(sig, "neg", {var(1)})});
  const Term p = Term::apply(sig, "add", {minus, var(2)});
  CHECK(check_maltsev_term(z4.algebra, p));
  CHECK(check_subtractive_term(z4.algebra, minus, 0));
  const Term s_from_p = substitute(p, {var(0), var(1), Term::apply(sig, "zero", {})});
  CHECK(check_subtractive_term(z4.algebra, s_from_p, 0));

  const auto b = entry("bool-semiring").algebra;
  const auto& bsig = b.signature();
  const Term sum3 = Term::apply(bsig, "add", {Term::apply(bsig, "add", {var(0), var(1)}), var(2)});
  CHECK_FALSE(check_maltsev_term(b, sum3));
  CHECK_FALSE(check_subtractive_term(b, "add", 0));

  for (const auto& e : build_catalog(4)) {
    if (e.monoid_add) CHECK(check_jonsson_tarski_term(e.algebra, *e.monoid_add, e.top()));
    if (e.family == Family::cyclic_group || e.family == Family::ring) {
      REQUIRE(e.maltsev);
      CHECK(check_maltsev_term(e.algebra, *e.maltsev));
    }
  }
  CHECK_FALSE(check_jonsson_tarski_term(entry("z4-ring").algebra, "mul", 0));

  const auto trivial = make_algebra(Signature({{"f", 3}}), 1, {{0}});
  CHECK(check_maltsev_term(trivial, "f"));
  const auto trivial_monoid = entry("trivial-monoid").algebra;
  CHECK(check_jonsson_tarski_term(trivial_monoid, "add", 0));
}

TEST_CASE("union-find congruence") {
  const auto z4 = entry("z4-monoid").algebra;
  CHECK(congruence_union_find(z4, {{2, 0}}) == brute::closure(z4, {{2, 0}}, true));
  CHECK(congruence_union_find(z4, {}) == BinRel::diagonal(4));
}

TEST_CASE("prime list validation") {
  CHECK_NOTHROW(validate_primes({2, 3, 5}));
  CHECK_THROWS_AS(validate_primes({}), InvalidPrimeList);
  CHECK_THROWS_AS(validate_primes({2, 2}), InvalidPrimeList);
  CHECK_THROWS_AS(validate_primes({2, 4}), InvalidPrimeList);
  CHECK_THROWS_AS(validate_primes({1, 3}), InvalidPrimeList);
}

TEST_CASE("deduction chain in (N, *, 1)") {
  const std::vector<BigNat> primes{2, 3, 5, 7};
  const auto seed = nats({2, 6, 15, 35});
  CHECK(nat_chain_seed(primes, 4) == seed);
  const auto chain = nat_mult_deduction_chain(primes, 4, 4);
  REQUIRE(chain.size() == 5);
  CHECK(chain[0] == seed);
  CHECK(chain[1] == nats({1, 2, 3, 6, 15, 35}));
  CHECK(chain[2] == nats({1, 2, 3, 5, 6, 15, 35}));
  CHECK(chain[3] == nats({1, 2, 3, 5, 7, 6, 15, 35}));
  CHECK(chain[4] == chain[3]);
  CHECK_THROWS_AS(nat_mult_deduction_chain(primes, 1, 2), InvalidPrimeList);
  CHECK_THROWS_AS(nat_mult_deduction_chain({2, 4}, 2, 2), InvalidPrimeList);
  CHECK(to_string(nats({1, 6})) == "{1,6}");
}

TEST_CASE("deduction chain agrees with the scanning oracle") {
  const std::vector<std::uint64_t> small{2, 3, 5, 7, 11, 13};
  for (std::size_t m = 2; m <= small.size(); ++m) {
    std::vector<BigNat> primes(small.begin(), small.end());
    const auto chain = nat_mult_deduction_chain(primes, m, m + 1);
    const auto expected = brute::nat_chain(small, m, m + 1);
    REQUIRE(chain.size() == expected.size());
    for (std::size_t n = 0; n < chain.size(); ++n) {
      BigNaturalSet e;
      for (auto x : expected[n]) e.insert(BigNat(x));
      INFO("m=", m, " n=", n);
      CHECK(chain[n] == e);
      if (n >= 1) CHECK(chain[n] == nat_chain_expected_stage(primes, m, n));
    }
  }
}

TEST_CASE("deduction chain with large primes stays exact") {
  const std::vector<BigNat> primes{BigNat("1000000007"), BigNat("998244353"),
                                   BigNat("1000000009")};
  const auto chain = nat_mult_deduction_chain(primes, 3, 3);
  CHECK(chain[2] == nat_chain_expected_stage(primes, 3, 2));
  CHECK(chain[2].count(BigNat("1000000009")) == 1);
}
