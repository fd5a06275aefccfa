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

#include "ualg/catalog.hpp"

#include <algorithm>
#include <functional>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

using Binary = std::function<Element(Element, Element)>;
using Unary = std::function<Element(Element)>;

std::vector<Element> binary_table(std::size_t n, const Binary& f) {
  std::vector<Element> t;
  t.reserve(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) t.push_back(f(x, y));
  }
  return t;
}

std::vector<Element> unary_table(std::size_t n, const Unary& f) {
  std::vector<Element> t;
  t.reserve(n);
  for (Element x = 0; x < n; ++x) t.push_back(f(x));
  return t;
}

Term var(std::size_t i) { return Term::variable(i); }

// k * y as y + y + ... + y, or the zero constant for k = 0.
Term repeated_sum(const Signature& sig, std::size_t k, const Term& y) {
  if (k == 0) return Term::apply(sig, "zero", {});
  Term acc = y;
  for (std::size_t i = 1; i < k; ++i) acc = Term::apply(sig, "add", {acc, y});
  return acc;
}

// Subtraction s(x, y) = p(x, y, 0) and Jonsson-Tarski u(x, y) = p(x, 0, y)
// derived from a Mal'tsev term p.
void derive_from_maltsev(CatalogEntry& e) {
  const Signature& sig = e.algebra.signature();
  const Term zero = Term::apply(sig, "zero", {});
  e.subtraction = substitute(*e.maltsev, {var(0), var(1), zero});
  e.jonsson_tarski = substitute(*e.maltsev, {var(0), zero, var(1)});
}

CatalogEntry entry(FiniteAlgebra a, Family f) {
  return CatalogEntry{std::move(a), f, std::nullopt, std::nullopt,
                      std::nullopt, std::nullopt,  std::nullopt};
}

Signature monoid_signature() { return Signature({{"add", 2}, {"zero", 0}}); }
Signature group_signature() { return Signature({{"add", 2}, {"neg", 1}, {"zero", 0}}); }
Signature ring_signature() {
  return Signature({{"add", 2}, {"mul", 2}, {"zero", 0}, {"one", 0}});
}

CatalogEntry cyclic_monoid(std::size_t n) {
  const Signature sig = monoid_signature();
  auto e = entry(make_algebra(sig, n,
                              {binary_table(n, [n](Element x, Element y) {
                                 return static_cast<Element>((x + y) % n);
                               }),
                               {0}},
                              0, "z" + std::to_string(n) + "-monoid"),
                 Family::cyclic_monoid);
  e.monoid_add = "add";
  // x - y + z with -y written as (n-1) copies of y.
  e.maltsev = Term::apply(
      sig, "add", {Term::apply(sig, "add", {var(0), repeated_sum(sig, n - 1, var(1))}), var(2)});
  derive_from_maltsev(e);
  return e;
}

CatalogEntry saturating_monoid(std::size_t k) {
  const std::size_t n = k + 1;
  auto e = entry(make_algebra(monoid_signature(), n,
                              {binary_table(n, [k](Element x, Element y) {
                                 return static_cast<Element>(std::min<std::size_t>(x + y, k));
                               }),
                               {0}},
                              0, "sat" + std::to_string(k) + "-monoid"),
                 Family::saturating_monoid);
  e.monoid_add = "add";
  return e;
}

CatalogEntry cyclic_group(std::size_t n) {
  const Signature sig = group_signature();
  auto e = entry(
      make_algebra(sig, n,
                   {binary_table(n, [n](Element x, Element y) {
                      return static_cast<Element>((x + y) % n);
                    }),
                    unary_table(n, [n](Element x) { return static_cast<Element>((n - x) % n); }),
                    {0}},
                   0, "z" + std::to_string(n) + "-group"),
      Family::cyclic_group);
  e.maltsev = Term::apply(
      sig, "add",
      {Term::apply(sig, "add", {var(0), Term::apply(sig, "neg", {var(1)})}), var(2)});
  derive_from_maltsev(e);
  return e;
}

CatalogEntry ring(std::size_t n) {
  const Signature sig = ring_signature();
  auto e = entry(make_algebra(sig, n,
                              {binary_table(n, [n](Element x, Element y) {
                                 return static_cast<Element>((x + y) % n);
                               }),
                               binary_table(n, [n](Element x, Element y) {
                                 return static_cast<Element>((x * y) % n);
                               }),
                               {0},
                               {static_cast<Element>(1 % n)}},
                              0, "z" + std::to_string(n) + "-ring"),
                 Family::ring);
  e.semiring = SemiringSymbols{"add", "mul", "zero", "one"};
  e.maltsev = Term::apply(
      sig, "add", {Term::apply(sig, "add", {var(0), repeated_sum(sig, n - 1, var(1))}), var(2)});
  derive_from_maltsev(e);
  return e;
}

CatalogEntry boolean_semiring() {
  auto e = entry(make_algebra(ring_signature(), 2,
                              {binary_table(2, [](Element x, Element y) { return x | y; }),
                               binary_table(2, [](Element x, Element y) { return x & y; }),
                               {0},
                               {1}},
                              0, "bool-semiring"),
                 Family::boolean_semiring);
  e.semiring = SemiringSymbols{"add", "mul", "zero", "one"};
  return e;
}

// Carrier {0, ..., k} plus infinity encoded as k + 1. Addition is min with
// identity infinity; multiplication is addition capped at k, with infinity
// absorbing.
CatalogEntry min_plus(std::size_t k) {
  const std::size_t n = k + 2;
  const Element inf = static_cast<Element>(k + 1);
  auto e = entry(make_algebra(ring_signature(), n,
                              {binary_table(n, [](Element x, Element y) { return std::min(x, y); }),
                               binary_table(n,
                                            [k, inf](Element x, Element y) {
                                              if (x == inf || y == inf) return inf;
                                              return static_cast<Element>(
                                                  std::min<std::size_t>(x + y, k));
                                            }),
                               {inf},
                               {0}},
                              inf, "minplus" + std::to_string(k)),
                 Family::min_plus);
  e.semiring = SemiringSymbols{"add", "mul", "zero", "one"};
  return e;
}

// Abelian group (Z_n, +, -, 0) with a unary scalar map x -> r*x per r in Z_n.
CatalogEntry cyclic_module(std::size_t n) {
  std::vector<Symbol> symbols{{"add", 2}, {"neg", 1}, {"zero", 0}};
  std::vector<std::vector<Element>> tables{
      binary_table(n, [n](Element x, Element y) { return static_cast<Element>((x + y) % n); }),
      unary_table(n, [n](Element x) { return static_cast<Element>((n - x) % n); }),
      {0}};
  for (std::size_t r = 0; r < n; ++r) {
    symbols.push_back({"s" + std::to_string(r), 1});
    tables.push_back(unary_table(n, [n, r](Element x) { return static_cast<Element>((r * x) % n); }));
  }
  const Signature sig(symbols);
  auto e = entry(make_algebra(sig, n, std::move(tables), 0, "z" + std::to_string(n) + "-module"),
                 Family::module);
  e.maltsev = Term::apply(
      sig, "add",
      {Term::apply(sig, "add", {var(0), Term::apply(sig, "neg", {var(1)})}), var(2)});
  derive_from_maltsev(e);
  return e;
}

// Z_2 x Z_2 as a Z_2-vector space: elements are 2-bit vectors, addition is xor.
CatalogEntry klein_module() {
  const Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}, {"s0", 1}, {"s1", 1}});
  auto e = entry(make_algebra(sig, 4,
                              {binary_table(4, [](Element x, Element y) { return x ^ y; }),
                               unary_table(4, [](Element x) { return x; }),
                               {0},
                               unary_table(4, [](Element) { return Element{0}; }),
                               unary_table(4, [](Element x) { return x; })},
                              0, "z2sq-module"),
                 Family::module);
  e.maltsev = Term::apply(
      sig, "add",
      {Term::apply(sig, "add", {var(0), Term::apply(sig, "neg", {var(1)})}), var(2)});
  derive_from_maltsev(e);
  return e;
}

CatalogEntry pointed_set(std::size_t n) {
  return entry(make_algebra(Signature({{"top", 0}}), n, {{0}}, 0,
                            "pointed" + std::to_string(n)),
               Family::pointed_set);
}

// Goedel implication on the chain 0 < 1 < ... < n-1 with top n-1:
// x -> y is top when x <= y and y otherwise. s(x, y) = y -> x is a
// subtraction for top, while the reduct has no Mal'tsev term.
CatalogEntry implication_chain(std::size_t n) {
  const Element top = static_cast<Element>(n - 1);
  const Signature sig({{"imp", 2}, {"one", 0}});
  auto e = entry(make_algebra(sig, n,
                              {binary_table(n, [top](Element x, Element y) {
                                 return x <= y ? top : y;
                               }),
                               {top}},
                              top, "goedel" + std::to_string(n)),
                 Family::implication_chain);
  e.subtraction = Term::apply(sig, "imp", {var(1), var(0)});
  return e;
}

std::vector<CatalogEntry> trivial_algebras() {
  std::vector<CatalogEntry> out;
  {
    auto e = cyclic_monoid(1);
    e.algebra = e.algebra.renamed("trivial-monoid");
    e.family = Family::trivial;
    out.push_back(std::move(e));
  }
  {
    auto e = cyclic_group(1);
    e.algebra = e.algebra.renamed("trivial-group");
    e.family = Family::trivial;
    out.push_back(std::move(e));
  }
  {
    auto e = ring(1);
    e.algebra = e.algebra.renamed("trivial-ring");
    e.family = Family::trivial;
    out.push_back(std::move(e));
  }
  {
    auto e = pointed_set(1);
    e.algebra = e.algebra.renamed("trivial-pointed");
    e.family = Family::trivial;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::cyclic_monoid: return "cyclic-monoid";
    case Family::saturating_monoid: return "saturating-monoid";
    case Family::cyclic_group: return "cyclic-group";
    case Family::ring: return "ring";
    case Family::boolean_semiring: return "boolean-semiring";
    case Family::min_plus: return "min-plus";
    case Family::module: return "module";
    case Family::pointed_set: return "pointed-set";
    case Family::implication_chain: return "implication-chain";
    case Family::trivial: return "trivial";
  }
  return "?";
}

std::vector<CatalogEntry> build_catalog(std::size_t limit) {
  if (limit < 2) throw ValueOutOfRange("catalog limit must be at least 2");
  std::vector<CatalogEntry> out;
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(cyclic_monoid(n));
  for (std::size_t k = 1; k + 1 <= limit; ++k) out.push_back(saturating_monoid(k));
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(cyclic_group(n));
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(ring(n));
  out.push_back(boolean_semiring());
  for (std::size_t k = 1; k + 2 <= limit; ++k) out.push_back(min_plus(k));
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(cyclic_module(n));
  if (limit >= 4) out.push_back(klein_module());
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(pointed_set(n));
  for (std::size_t n = 2; n <= limit; ++n) out.push_back(implication_chain(n));
  for (auto& e : trivial_algebras()) out.push_back(std::move(e));
  return out;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  for (auto& e : build_catalog(16)) {
    if (e.name() == name) return std::move(e);
  }
  return std::nullopt;
}

}  // namespace ualg
