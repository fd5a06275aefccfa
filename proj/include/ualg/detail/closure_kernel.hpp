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

#include <cstddef>
#include <span>
#include <vector>

#include "ualg/element_set.hpp"

namespace ualg::detail {

// Steps `pos` to the next tuple where coordinates before `first` range over
// [0, p), coordinate `first` is pinned to p and later ones range over [0, p].
// Rightmost coordinate varies fastest. Returns false once exhausted.
inline bool advance(std::vector<std::size_t>& pos, std::size_t first, std::size_t p) {
  for (std::size_t i = pos.size(); i-- > 0;) {
    if (i == first) continue;
    const std::size_t bound = (i < first) ? p : p + 1;
    if (++pos[i] < bound) return true;
    pos[i] = 0;
  }
  return false;
}

// Worklist closure of `seed` under a family of operations. `apply(op, args)`
// evaluates operation `op`; `arities[op]` is its arity.
//
// Members are kept in discovery order. Processing the member at position p
// evaluates exactly the argument tuples over positions [0, p] whose largest
// position is p, so every tuple over the final set is evaluated once.
// Constants must already be in the seed.
template <typename Apply>
ElementSet close_under(std::span<const std::size_t> arities, const Apply& apply,
                       const ElementSet& seed) {
  ElementSet result = seed;
  std::vector<Element> members = seed.members();
  std::vector<Element> args;
  std::vector<std::size_t> pos;

  for (std::size_t p = 0; p < members.size(); ++p) {
    for (std::size_t op = 0; op < arities.size(); ++op) {
      const std::size_t k = arities[op];
      if (k == 0) continue;
      args.resize(k);
      for (std::size_t first = 0; first < k; ++first) {
        if (first > 0 && p == 0) break;
        pos.assign(k, 0);
        pos[first] = p;
        do {
          for (std::size_t i = 0; i < k; ++i) args[i] = members[pos[i]];
          const Element v = apply(op, std::span<const Element>(args));
          if (!result.contains(v)) {
            result.insert(v);
            members.push_back(v);
          }
        } while (advance(pos, first, p));
      }
    }
  }
  return result;
}

}  // namespace ualg::detail
