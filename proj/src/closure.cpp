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

#include "ualg/closure.hpp"

#include <limits>

#include "ualg/detail/closure_kernel.hpp"
#include "ualg/errors.hpp"

namespace ualg {

namespace {

void require_top(const FiniteAlgebra& a, Element top) {
  if (top >= a.size()) {
    throw ValueOutOfRange("top " + std::to_string(top) + " is not below size " +
                          std::to_string(a.size()));
  }
}

void require_subset(const FiniteAlgebra& a, const ElementSet& s) {
  if (s.universe() != a.size()) throw SizeMismatch("set is not a subset of the carrier");
}

}  // namespace

BinRel semicongruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs,
                                std::size_t carrier_limit) {
  const std::size_t n = a.size();
  if (n > carrier_limit / n) {
    throw SizeOverflow("square of a " + std::to_string(n) + "-element algebra exceeds the " +
                       std::to_string(carrier_limit) + "-element carrier limit");
  }
  // Closure inside A x A without materialising its tables: a pair (x, y) is
  // encoded x*n+y and each operation acts componentwise.
  std::vector<std::size_t> arities;
  for (std::size_t op = 0; op < a.signature().size(); ++op) arities.push_back(a.arity(op));

  ElementSet seed = BinRel::diagonal(n).encoded();
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) {
      throw ValueOutOfRange("pair (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside carrier of size " + std::to_string(n));
    }
    seed.insert(static_cast<Element>(x * n + y));
  }
  // Constants (c, c) are already on the diagonal.

  std::vector<Element> left, right;
  const auto apply = [&](std::size_t op, std::span<const Element> args) {
    left.resize(args.size());
    right.resize(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
      left[i] = static_cast<Element>(args[i] / n);
      right[i] = static_cast<Element>(args[i] % n);
    }
    return static_cast<Element>(a.apply(op, left) * n + a.apply(op, right));
  };
  return BinRel::from_encoded(n, detail::close_under(arities, apply, seed));
}

BinRel congruence_generated(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs,
                            std::size_t carrier_limit) {
  const BinRel r = semicongruence_generated(a, pairs, carrier_limit);
  const BinRel r_op = opposite(r);
  // Stage k is the alternating word of length k ending in R; each stage
  // prefixes the previous one with the letter the previous one did not start
  // with. Stages only grow because R is reflexive. Once both letters fix a
  // stage, every longer word collapses onto it.
  BinRel stage = r;
  bool prefix_op = true;
  std::size_t stable_in_a_row = 0;
  while (stable_in_a_row < 2) {
    BinRel next = compose(prefix_op ? r_op : r, stage);
    prefix_op = !prefix_op;
    if (next == stage) {
      ++stable_in_a_row;
    } else {
      stable_in_a_row = 0;
      stage = std::move(next);
    }
  }
  return stage;
}

std::vector<ElementPair> pairs_to_top(const ElementSet& s, Element top) {
  std::vector<ElementPair> out;
  out.reserve(s.count());
  s.for_each([&](Element y) { out.emplace_back(y, top); });
  return out;
}

BinRel top_semicongruence(const FiniteAlgebra& a, Element top, const ElementSet& s) {
  require_top(a, top);
  require_subset(a, s);
  return semicongruence_generated(a, pairs_to_top(s, top));
}

ElementSet clot_closure(const FiniteAlgebra& a, Element top, const ElementSet& s) {
  const BinRel r = top_semicongruence(a, top, s);
  return left_image(r, ElementSet(a.size(), {top}));
}

ElementSet top_induction(const FiniteAlgebra& a, Element top, const ElementSet& s) {
  return left_image(top_semicongruence(a, top, s), s);
}

ElementSet top_deduction(const FiniteAlgebra& a, Element top, const ElementSet& s) {
  return right_image(top_semicongruence(a, top, s), s);
}

const char* to_string(Mode m) { return m == Mode::induction ? "ind" : "ded"; }

ClosureReport iterate(const FiniteAlgebra& a, Element top, const ElementSet& s, Mode mode,
                      std::size_t max_steps) {
  ClosureReport report;
  report.relation_used = top_semicongruence(a, top, s);
  report.chain.push_back(s);
  for (std::size_t step = 0; step < max_steps; ++step) {
    const ElementSet& current = report.chain.back();
    const BinRel r = step == 0 ? report.relation_used : top_semicongruence(a, top, current);
    ElementSet next = mode == Mode::induction ? left_image(r, current) : right_image(r, current);
    if (next == current) {
      report.steps_to_fixpoint = step;
      break;
    }
    report.chain.push_back(std::move(next));
  }
  return report;
}

ClosureReport iterate_to_fixpoint(const FiniteAlgebra& a, Element top, const ElementSet& s,
                                  Mode mode) {
  // A strictly increasing chain of subsets of an n-set has at most n+1 stages.
  return iterate(a, top, s, mode, a.size() + 1);
}

NormalityResult is_top_normal(const FiniteAlgebra& a, Element top, const ElementSet& s) {
  require_top(a, top);
  require_subset(a, s);
  const BinRel c = congruence_generated(a, pairs_to_top(s, top));
  NormalityResult result;
  result.top_class = left_image(c, ElementSet(a.size(), {top}));
  result.normal = result.top_class == s;
  return result;
}

SandwichReport sandwich_report(const FiniteAlgebra& a, Element top, const ElementSet& s,
                               std::size_t n) {
  const BinRel r = top_semicongruence(a, top, s);
  // 2^n - 1, saturating; powers of a reflexive relation stabilise long before.
  const std::uint64_t upper_exp =
      n >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n) - 1;
  const BinRel lower_pow = power(r, n);
  const BinRel upper_pow = power(r, upper_exp);

  const ElementSet ind_n = iterate(a, top, s, Mode::induction, n).last();
  const ElementSet ded_n = iterate(a, top, s, Mode::deduction, n).last();

  SandwichReport rep;
  rep.induction_lower = left_image(lower_pow, s).is_subset_of(ind_n);
  rep.induction_upper = ind_n.is_subset_of(left_image(upper_pow, s));
  rep.deduction_lower = right_image(lower_pow, s).is_subset_of(ded_n);
  rep.deduction_upper = ded_n.is_subset_of(right_image(upper_pow, s));

  // U_k R^k I, accumulated until the images stop growing.
  ElementSet ind_union = s;
  ElementSet ded_union = s;
  ElementSet ind_img = s;
  ElementSet ded_img = s;
  while (true) {
    ElementSet ind_next = left_image(r, ind_img);
    ElementSet ded_next = right_image(r, ded_img);
    const bool grew = !(ind_next == ind_img) || !(ded_next == ded_img);
    ind_union |= ind_next;
    ded_union |= ded_next;
    ind_img = std::move(ind_next);
    ded_img = std::move(ded_next);
    if (!grew) break;
  }
  rep.induction_decomposition = iterate_to_fixpoint(a, top, s, Mode::induction).last() == ind_union;
  rep.deduction_decomposition = iterate_to_fixpoint(a, top, s, Mode::deduction).last() == ded_union;
  return rep;
}

bool check_sandwich(const FiniteAlgebra& a, Element top, const ElementSet& s, std::size_t n) {
  return sandwich_report(a, top, s, n).ok();
}

}  // namespace ualg
