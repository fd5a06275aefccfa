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

// Variety-specific descriptions of induction, deduction and normality, each
// computed without going through the generic relation closure. They serve as
// cross-checks for the engine in closure.hpp.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ualg/algebra.hpp"
#include "ualg/relation.hpp"
#include "ualg/term.hpp"

namespace ualg {

// ---------------------------------------------------------------------------
// Semirings

/// An algebra viewed as a semiring (S, +, ., 0 [, 1]). The constructor checks
/// every axiom exhaustively and throws AxiomViolation naming the first one
/// that fails.
class SemiringView {
 public:
  SemiringView(FiniteAlgebra algebra, std::string_view add, std::string_view mul,
               std::string_view zero, std::optional<std::string_view> one = std::nullopt);

  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return algebra_.size(); }
  Element zero() const noexcept { return zero_; }
  std::optional<Element> one() const noexcept { return one_; }
  Element add(Element x, Element y) const { return add_table_[x * size() + y]; }
  Element mul(Element x, Element y) const { return mul_table_[x * size() + y]; }

 private:
  FiniteAlgebra algebra_;
  std::vector<Element> add_table_;
  std::vector<Element> mul_table_;
  Element zero_ = 0;
  std::optional<Element> one_;
};

/// The two-sided ideal generated by I: smallest additive submonoid containing
/// I and closed under multiplication by arbitrary elements on either side.
ElementSet semiring_ideal_generated(const SemiringView& s, const ElementSet& i);

/// I + ideal(I); empty for empty I.
ElementSet semiring_ind_oracle(const SemiringView& s, const ElementSet& i);

/// {x | x + y in I for some y in ideal(I)}; empty for empty I.
ElementSet semiring_ded_oracle(const SemiringView& s, const ElementSet& i);

bool is_semiring_ideal(const SemiringView& s, const ElementSet& i);

/// An ideal I with x + y in I and y in I implying x in I.
bool is_subtractive_ideal(const SemiringView& s, const ElementSet& i);

// ---------------------------------------------------------------------------
// Commutative monoids, given by the symbol of the binary operation.

/// Closure of I under the operation alone, without adjoining the identity.
ElementSet subsemigroup_generated(const FiniteAlgebra& m, std::string_view add,
                                  const ElementSet& i);

/// Repeatedly adds x whenever x + y and y lie in the current set, until stable.
ElementSet subtractive_closure_submonoid(const FiniteAlgebra& m, std::string_view add,
                                         const ElementSet& i);

/// {x | x + y_1 + ... + y_m in I for some y_1, ..., y_m in I, m >= 0}.
ElementSet monoid_ded_formula(const FiniteAlgebra& m, std::string_view add, Element zero,
                              const ElementSet& i);

bool is_submonoid(const FiniteAlgebra& m, std::string_view add, Element zero,
                  const ElementSet& i);
bool is_subtractive_submonoid(const FiniteAlgebra& m, std::string_view add, Element zero,
                              const ElementSet& i);

// ---------------------------------------------------------------------------
// Term conditions, each checked exhaustively over the carrier. Terms use
// variables x0, x1 (and x2 for the Mal'tsev term).

/// p(x, y, y) = x and p(x, x, y) = y.
bool check_maltsev_term(const FiniteAlgebra& a, const Term& p);
bool check_maltsev_term(const FiniteAlgebra& a, std::string_view symbol);

/// s(x, x) = 0 and s(x, 0) = x.
bool check_subtractive_term(const FiniteAlgebra& a, const Term& s, Element zero);
bool check_subtractive_term(const FiniteAlgebra& a, std::string_view symbol, Element zero);

/// u(x, 0) = x = u(0, x).
bool check_jonsson_tarski_term(const FiniteAlgebra& a, const Term& u, Element zero);
bool check_jonsson_tarski_term(const FiniteAlgebra& a, std::string_view symbol, Element zero);

/// f(x0, ..., x_{k-1}) for a symbol of arity k.
Term symbol_term(const Signature& sig, std::string_view symbol);

// ---------------------------------------------------------------------------
// Generic cross-checks.

/// Congruence generated by `pairs`, by union-find: merge the classes of
/// f(..., a, ...) and f(..., b, ...) whenever a and b share a class, until
/// nothing changes.
BinRel congruence_union_find(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs);

/// Pairs (t(x, y), t(x, top)) over all terms t of depth <= max_depth, with
/// x ranging over the carrier and y over I. Returns the set once two
/// consecutive depths agree (or at max_depth).
BinRel term_semicongruence(const FiniteAlgebra& a, Element top, const ElementSet& i,
                           std::size_t max_depth);

/// {t(x, y) | y in I, t(x, top) in I}.
ElementSet term_induction(const FiniteAlgebra& a, Element top, const ElementSet& i,
                          std::size_t max_depth);
/// {t(x, top) | t(x, y) in I, y in I}.
ElementSet term_deduction(const FiniteAlgebra& a, Element top, const ElementSet& i,
                          std::size_t max_depth);
/// {t(x, y) | y in I, t(x, top) = top}.
ElementSet term_clot(const FiniteAlgebra& a, Element top, const ElementSet& i,
                     std::size_t max_depth);

}  // namespace ualg
