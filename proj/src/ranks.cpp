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

#include "ualg/ranks.hpp"

#include <algorithm>
#include <bit>

#include "ualg/errors.hpp"

namespace ualg {

std::vector<std::uint64_t> all_subsets(std::size_t n) {
  if (n > 24) throw CarrierTooLarge("cannot enumerate subsets of more than 24 elements");
  std::vector<std::uint64_t> masks(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return masks;
}

std::vector<std::uint64_t> nonempty_subsets(std::size_t n) {
  auto masks = all_subsets(n);
  masks.erase(masks.begin());
  return masks;
}

RankResult algebra_rank(const FiniteAlgebra& a, Element top, Mode mode, std::size_t max_n,
                        std::size_t enumeration_limit) {
  if (a.size() > enumeration_limit) {
    throw CarrierTooLarge("rank search enumerates subsets of at most " +
                          std::to_string(enumeration_limit) + " elements; algebra '" +
                          a.name() + "' has " + std::to_string(a.size()));
  }
  RankResult result;
  result.mode = mode;
  result.rank = 0;
  bool have_witness = false;
  for (std::uint64_t mask : nonempty_subsets(a.size())) {
    const ElementSet s = ElementSet::from_mask(a.size(), mask);
    // max_n + 1 applications are needed to observe a fixpoint at step max_n.
    ClosureReport rep = iterate(a, top, s, mode, max_n + 1);
    if (!rep.steps_to_fixpoint) {
      result.rank.reset();
      result.witness = s;
      result.witness_chain = std::move(rep.chain);
      return result;
    }
    if (!have_witness || *rep.steps_to_fixpoint > *result.rank) {
      result.rank = rep.steps_to_fixpoint;
      result.witness = s;
      result.witness_chain = std::move(rep.chain);
      have_witness = true;
    }
  }
  return result;
}

}  // namespace ualg
