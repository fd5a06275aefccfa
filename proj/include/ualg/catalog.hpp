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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

enum class Family {
  cyclic_monoid,      // (Z_n, +, 0)
  saturating_monoid,  // ({0..k}, min(x+y, k), 0)
  cyclic_group,       // (Z_n, +, -, 0)
  ring,               // (Z_n, +, *, 0, 1)
  boolean_semiring,   // ({0,1}, or, and, 0, 1)
  min_plus,           // ({0..k, inf}, min, capped +, inf, 0)
  module,             // abelian group with one unary map per scalar
  pointed_set,        // a set with one constant and no other operations
  implication_chain,  // ({0..k}, Goedel implication, k)
  trivial,            // one-element algebra
};

const char* to_string(Family f);

struct SemiringSymbols {
  std::string add, mul, zero;
  std::optional<std::string> one;
};

/// A catalog algebra plus what is known about it. The distinguished element
/// is stored as the algebra's top.
struct CatalogEntry {
  FiniteAlgebra algebra;
  Family family;
  std::optional<SemiringSymbols> semiring;
  /// Symbol of the commutative monoid operation (with identity = top).
  std::optional<std::string> monoid_add;
  /// Candidate terms in x0, x1 (, x2); suites verify them before use.
  std::optional<Term> maltsev;
  std::optional<Term> subtraction;
  std::optional<Term> jonsson_tarski;

  const std::string& name() const { return algebra.name(); }
  Element top() const { return *algebra.top(); }
};

/// Deterministic catalog of algebras with at most `limit` elements. Throws
/// ValueOutOfRange for limit < 2.
std::vector<CatalogEntry> build_catalog(std::size_t limit);

/// Looks an entry up by name in build_catalog(16); nullopt if absent.
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

}  // namespace ualg
