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


// Deliberately naive reference implementations for tests.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/relation.hpp"
#include "ualg/term.hpp"

namespace ualg::brute {

/// Calls f(args) for every tuple over `values` of the given arity.
template <class F>
void for_each_tuple(const std::vector<Element>& values, std::size_t arity, F&& f) {
  std::vector<Element> args(arity);
  std::vector<std::size_t> idx(arity, 0);
  if (arity > 0 && values.empty()) return;
  for (;;) {
    for (std::size_t i = 0; i < arity; ++i) args[i] = values[idx[i]];
    f(args);
    std::size_t k = arity;
    while (k > 0 && ++idx[k - 1] == values.size()) idx[--k] = 0;
    if (k == 0) return;
  }
}

/// Naive fixpoint: apply every operation to every tuple of pairs until no
/// new pair appears. With `congruence`, also close under symmetry and
/// transitivity on every round.
inline BinRel closure(const FiniteAlgebra& a, const std::vector<ElementPair>& seed,
                      bool congruence) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  for (auto [x, y] : seed) m[x][y] = true;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Element> codes;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j]) codes.push_back(static_cast<Element>(i * n + j));
      }
    }
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      for_each_tuple(codes, a.arity(op), [&](const std::vector<Element>& args) {
        std::vector<Element> l, r;
        for (Element c : args) {
          l.push_back(c / n);
          r.push_back(c % n);
        }
        const Element x = a.apply(op, l), y = a.apply(op, r);
        if (!m[x][y]) {
          m[x][y] = true;
          changed = true;
        }
      });
    }
    if (!congruence) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j] && !m[j][i]) {
          m[j][i] = true;
          changed = true;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (m[i][j] && m[j][k] && !m[i][k]) {
            m[i][k] = true;
            changed = true;
          }
        }
      }
    }
  }
  BinRel out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j]) out.insert(static_cast<Element>(i), static_cast<Element>(j));
    }
  }
  return out;
}

/// Relational product by triple loop.
inline BinRel compose(const BinRel& r, const BinRel& s) {
  const std::size_t n = r.size();
  BinRel out(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (r.contains(a, b) && s.contains(b, c)) out.insert(a, c);
      }
    }
  }
  return out;
}

/// Every term of depth <= depth in variables x0..x{vars-1}.
inline std::vector<Term> all_terms(const Signature& sig, std::size_t vars, std::size_t depth) {
  std::vector<Term> terms;
  for (std::size_t v = 0; v < vars; ++v) terms.push_back(Term::variable(v));
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) terms.push_back(Term::apply(s, {}));
  }
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Term> next = terms;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const std::size_t k = sig[s].arity;
      if (k == 0) continue;
      std::vector<Element> idx(terms.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Element>(i);
      for_each_tuple(idx, k, [&](const std::vector<Element>& pick) {
        std::vector<Term> args;
        for (Element i : pick) args.push_back(terms[i]);
        Term t = Term::apply(s, std::move(args));
        if (t.depth() == d) next.push_back(std::move(t));
      });
    }
    terms = std::move(next);
  }
  return terms;
}

/// Stages of the deduction chain in (N, *, 1) by scanning 1..max(J):
/// x is kept when x * p lies in J for some product p of members of J.
inline std::vector<std::set<std::uint64_t>> nat_chain(const std::vector<std::uint64_t>& primes,
                                                      std::size_t m, std::size_t depth) {
  std::set<std::uint64_t> j;
  std::uint64_t prev = 1;
  for (std::size_t i = 0; i < m; ++i) {
    j.insert(prev * primes[i]);
    prev = primes[i];
  }
  std::vector<std::set<std::uint64_t>> stages{j};
  for (std::size_t step = 0; step < depth; ++step) {
    const std::uint64_t top = *j.rbegin();
    std::set<std::uint64_t> products{1};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::uint64_t p : std::set<std::uint64_t>(products)) {
        for (std::uint64_t y : j) {
          if (p * y <= top && products.insert(p * y).second) grew = true;
        }
      }
    }
    std::set<std::uint64_t> next;
    for (std::uint64_t x = 1; x <= top; ++x) {
      for (std::uint64_t p : products) {
        if (j.count(x * p)) next.insert(x);
      }
    }
    j = std::move(next);
    stages.push_back(j);
  }
  return stages;
}

}  // namespace ualg::brute
