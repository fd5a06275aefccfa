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

#include <cstdint>
#include <optional>
#include <vector>

#include "ualg/closure.hpp"

namespace ualg {

inline constexpr std::size_t kDefaultEnumerationLimit = 16;

/// Per-algebra induction or deduction rank: the least n with
/// I(n) = I(n+1) for every nonempty subset I of this one algebra. This only
/// bounds the rank of a variety from below.
struct RankResult {
  Mode mode = Mode::induction;
  /// nullopt when some subset had not stabilised after max_n steps.
  std::optional<std::size_t> rank;
  /// First subset (in enumeration order) attaining the rank, or the first
  /// that failed to stabilise.
  ElementSet witness;
  /// Distinct stages of the witness chain.
  std::vector<ElementSet> witness_chain;
};

/// Nonempty subsets of {0, ..., n-1} as bit masks, by increasing size and
/// then numerically. Throws CarrierTooLarge for n > 24.
std::vector<std::uint64_t> nonempty_subsets(std::size_t n);

/// All subsets including the empty one, in the same order.
std::vector<std::uint64_t> all_subsets(std::size_t n);

/// Exhaustive rank search. Throws CarrierTooLarge when the algebra has more
/// than `enumeration_limit` elements.
RankResult algebra_rank(const FiniteAlgebra& a, Element top, Mode mode, std::size_t max_n,
                        std::size_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace ualg
