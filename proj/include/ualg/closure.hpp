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

// Closure constructions relative to a distinguished element `top`.
//
// For a set I, let R be the semicongruence (reflexive compatible relation)
// generated by I x {top}. Then
//
//   induction  ind I = RI = {x | x R y for some y in I}
//   deduction  ded I = IR = {x | y R x for some y in I}
//   clot       C(I)  = R top
//
// and I is normal when it is the class of top in the congruence generated by
// I x {top}. Each of ind and ded regenerates R from its own argument, so
// iterating them gives two increasing chains I = I(0) <= I(1) <= ...

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/relation.hpp"

namespace ualg {

/// Smallest reflexive compatible relation containing `pairs`.
/// Throws SizeOverflow if size^2 exceeds `carrier_limit`.
BinRel semicongruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs,
                                std::size_t carrier_limit = kDefaultCarrierLimit);

/// Union of R, R°R, RR°R, R°RR°R, ... for R the generated semicongruence.
BinRel congruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs,
                            std::size_t carrier_limit = kDefaultCarrierLimit);

/// The pairs I x {top}.
std::vector<ElementPair> pairs_to_top(const ElementSet& s, Element top);

/// The semicongruence generated by I x {top}.
BinRel top_semicongruence(const FiniteAlgebra& a, Element top, const ElementSet& s);

ElementSet clot_closure(const FiniteAlgebra& a, Element top, const ElementSet& s);
ElementSet top_induction(const FiniteAlgebra& a, Element top, const ElementSet& s);
ElementSet top_deduction(const FiniteAlgebra& a, Element top, const ElementSet& s);

enum class Mode { induction, deduction };

const char* to_string(Mode m);

struct ClosureReport {
  /// Distinct stages I(0) < I(1) < ... < I(k). When the fixpoint is reached
  /// at step k, the next stage would repeat chain[k].
  std::vector<ElementSet> chain;
  std::optional<std::size_t> steps_to_fixpoint;
  /// The semicongruence generated by I(0) x {top}.
  BinRel relation_used;

  const ElementSet& last() const { return chain.back(); }
};

/// Applies ind (or ded) up to `max_steps` times, stopping early at a
/// fixpoint. A fixpoint at step k is detected only if k < max_steps, since it
/// takes one more application to observe it.
ClosureReport iterate(const FiniteAlgebra& a, Element top, const ElementSet& s, Mode mode,
                      std::size_t max_steps);

/// Iterates until the fixpoint; the chain stabilises within size() steps.
ClosureReport iterate_to_fixpoint(const FiniteAlgebra& a, Element top, const ElementSet& s,
                                  Mode mode);

struct NormalityResult {
  bool normal = false;
  /// Class of top in the congruence generated by I x {top}.
  ElementSet top_class;
};

/// Whether I is exactly the class of top in the congruence generated by
/// I x {top}. The empty set is never normal since the class contains top.
NormalityResult is_top_normal(const FiniteAlgebra& a, Element top, const ElementSet& s);

/// Inclusions R^n I <= ind^(n) I <= R^(2^n - 1) I and the dual ones for
/// deduction, with R generated once from the original I x {top}; plus the
/// decompositions ind^(oo) I = U_k R^k I and ded^(oo) I = U_k I R^k.
struct SandwichReport {
  bool induction_lower = true;
  bool induction_upper = true;
  bool deduction_lower = true;
  bool deduction_upper = true;
  bool induction_decomposition = true;
  bool deduction_decomposition = true;

  bool ok() const {
    return induction_lower && induction_upper && deduction_lower && deduction_upper &&
           induction_decomposition && deduction_decomposition;
  }
};

SandwichReport sandwich_report(const FiniteAlgebra& a, Element top, const ElementSet& s,
                               std::size_t n);
bool check_sandwich(const FiniteAlgebra& a, Element top, const ElementSet& s, std::size_t n);

}  // namespace ualg
