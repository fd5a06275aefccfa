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

#include "ualg/oracles.hpp"

#include <array>
#include <deque>
#include <numeric>

#include "ualg/errors.hpp"

namespace ualg {

namespace {

std::size_t binary_symbol(const FiniteAlgebra& a, std::string_view name) {
  const std::size_t op = a.signature().index_of(name);
  if (a.arity(op) != 2) {
    throw ArityMismatch("symbol '" + std::string(name) + "' is not binary");
  }
  return op;
}

Element binop(const FiniteAlgebra& a, std::size_t op, Element x, Element y) {
  const std::array<Element, 2> args{x, y};
  return a.apply(op, args);
}

Element constant_value(const FiniteAlgebra& a, std::string_view name) {
  const std::size_t op = a.signature().index_of(name);
  if (a.arity(op) != 0) throw ArityMismatch("symbol '" + std::string(name) + "' is not a constant");
  return a.table(op)[0];
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Semirings

SemiringView::SemiringView(FiniteAlgebra algebra, std::string_view add, std::string_view mul,
                           std::string_view zero, std::optional<std::string_view> one)
    : algebra_(std::move(algebra)) {
  const std::size_t add_op = binary_symbol(algebra_, add);
  const std::size_t mul_op = binary_symbol(algebra_, mul);
  add_table_ = algebra_.table(add_op);
  mul_table_ = algebra_.table(mul_op);
  zero_ = constant_value(algebra_, zero);
  if (one) one_ = constant_value(algebra_, *one);

  const std::size_t n = size();
  const auto fail = [&](const std::string& axiom, Element x, Element y, Element z) {
    throw AxiomViolation("'" + algebra_.name() + "' is not a semiring: " + axiom +
                         " fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                         std::to_string(z) + ")");
  };
  for (Element x = 0; x < n; ++x) {
    if (this->add(zero_, x) != x || this->add(x, zero_) != x) fail("additive identity", x, 0, 0);
    if (this->mul(zero_, x) != zero_ || this->mul(x, zero_) != zero_) {
      fail("zero absorption", x, 0, 0);
    }
    if (one_ && (this->mul(*one_, x) != x || this->mul(x, *one_) != x)) {
      fail("multiplicative identity", x, 0, 0);
    }
    for (Element y = 0; y < n; ++y) {
      if (this->add(x, y) != this->add(y, x)) fail("additive commutativity", x, y, 0);
      for (Element z = 0; z < n; ++z) {
        if (this->add(this->add(x, y), z) != this->add(x, this->add(y, z))) {
          fail("additive associativity", x, y, z);
        }
        if (this->mul(this->mul(x, y), z) != this->mul(x, this->mul(y, z))) {
          fail("multiplicative associativity", x, y, z);
        }
        if (this->mul(x, this->add(y, z)) != this->add(this->mul(x, y), this->mul(x, z))) {
          fail("left distributivity", x, y, z);
        }
        if (this->mul(this->add(x, y), z) != this->add(this->mul(x, z), this->mul(y, z))) {
          fail("right distributivity", x, y, z);
        }
      }
    }
  }
}

ElementSet semiring_ideal_generated(const SemiringView& s, const ElementSet& i) {
  const std::size_t n = s.size();
  ElementSet ideal = i;
  ideal.insert(s.zero());
  const std::vector<Element> seed = ideal.members();
  std::deque<Element> work(seed.begin(), seed.end());
  const auto push = [&](Element v) {
    if (!ideal.contains(v)) {
      ideal.insert(v);
      work.push_back(v);
    }
  };
  while (!work.empty()) {
    const Element y = work.front();
    work.pop_front();
    for (Element x = 0; x < n; ++x) {
      push(s.mul(x, y));
      push(s.mul(y, x));
      if (ideal.contains(x)) push(s.add(x, y));
    }
  }
  return ideal;
}

ElementSet semiring_ind_oracle(const SemiringView& s, const ElementSet& i) {
  const ElementSet ideal = semiring_ideal_generated(s, i);
  ElementSet out(s.size());
  i.for_each([&](Element x) { ideal.for_each([&](Element y) { out.insert(s.add(x, y)); }); });
  return out;
}

ElementSet semiring_ded_oracle(const SemiringView& s, const ElementSet& i) {
  const ElementSet ideal = semiring_ideal_generated(s, i);
  ElementSet out(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    ideal.for_each([&](Element y) {
      if (i.contains(s.add(x, y))) out.insert(x);
    });
  }
  return out;
}

bool is_semiring_ideal(const SemiringView& s, const ElementSet& i) {
  return semiring_ideal_generated(s, i) == i;
}

bool is_subtractive_ideal(const SemiringView& s, const ElementSet& i) {
  if (!is_semiring_ideal(s, i)) return false;
  for (Element x = 0; x < s.size(); ++x) {
    if (i.contains(x)) continue;
    bool violated = false;
    i.for_each([&](Element y) { violated = violated || i.contains(s.add(x, y)); });
    if (violated) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Commutative monoids

ElementSet subsemigroup_generated(const FiniteAlgebra& m, std::string_view add,
                                  const ElementSet& i) {
  const std::size_t op = binary_symbol(m, add);
  ElementSet out = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x : out.members()) {
      for (Element y : out.members()) {
        const Element z = binop(m, op, x, y);
        if (!out.contains(z)) {
          out.insert(z);
          changed = true;
        }
      }
    }
  }
  return out;
}

ElementSet subtractive_closure_submonoid(const FiniteAlgebra& m, std::string_view add,
                                         const ElementSet& i) {
  const std::size_t op = binary_symbol(m, add);
  ElementSet out = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < m.size(); ++x) {
      if (out.contains(x)) continue;
      bool witnessed = false;
      out.for_each([&](Element y) { witnessed = witnessed || out.contains(binop(m, op, x, y)); });
      if (witnessed) {
        out.insert(x);
        changed = true;
      }
    }
  }
  return out;
}

ElementSet monoid_ded_formula(const FiniteAlgebra& m, std::string_view add, Element zero,
                              const ElementSet& i) {
  // Sums y_1 + ... + y_m with m >= 0 form the submonoid generated by I.
  ElementSet sums = subsemigroup_generated(m, add, i);
  sums.insert(zero);
  const std::size_t op = binary_symbol(m, add);
  ElementSet out(m.size());
  for (Element x = 0; x < m.size(); ++x) {
    sums.for_each([&](Element s) {
      if (i.contains(binop(m, op, x, s))) out.insert(x);
    });
  }
  return out;
}

bool is_submonoid(const FiniteAlgebra& m, std::string_view add, Element zero,
                  const ElementSet& i) {
  return i.contains(zero) && subsemigroup_generated(m, add, i) == i;
}

bool is_subtractive_submonoid(const FiniteAlgebra& m, std::string_view add, Element zero,
                              const ElementSet& i) {
  return is_submonoid(m, add, zero, i) && subtractive_closure_submonoid(m, add, i) == i;
}

// ---------------------------------------------------------------------------
// Term conditions

Term symbol_term(const Signature& sig, std::string_view symbol) {
  const std::size_t op = sig.index_of(symbol);
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig[op].arity; ++i) args.push_back(Term::variable(i));
  return Term::apply(op, std::move(args));
}

bool check_maltsev_term(const FiniteAlgebra& a, const Term& p) {
  p.check(a.signature());
  const Element n = static_cast<Element>(a.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::array<Element, 3> xyy{x, y, y};
      const std::array<Element, 3> xxy{x, x, y};
      if (eval_term(a, p, xyy) != x || eval_term(a, p, xxy) != y) return false;
    }
  }
  return true;
}

bool check_maltsev_term(const FiniteAlgebra& a, std::string_view symbol) {
  const std::size_t op = a.signature().index_of(symbol);
  if (a.arity(op) != 3) throw ArityMismatch("Mal'tsev symbol must be ternary");
  return check_maltsev_term(a, symbol_term(a.signature(), symbol));
}

bool check_subtractive_term(const FiniteAlgebra& a, const Term& s, Element zero) {
  s.check(a.signature());
  for (Element x = 0; x < a.size(); ++x) {
    const std::array<Element, 2> xx{x, x};
    const std::array<Element, 2> x0{x, zero};
    if (eval_term(a, s, xx) != zero || eval_term(a, s, x0) != x) return false;
  }
  return true;
}

bool check_subtractive_term(const FiniteAlgebra& a, std::string_view symbol, Element zero) {
  binary_symbol(a, symbol);
  return check_subtractive_term(a, symbol_term(a.signature(), symbol), zero);
}

bool check_jonsson_tarski_term(const FiniteAlgebra& a, const Term& u, Element zero) {
  u.check(a.signature());
  for (Element x = 0; x < a.size(); ++x) {
    const std::array<Element, 2> x0{x, zero};
    const std::array<Element, 2> zx{zero, x};
    if (eval_term(a, u, x0) != x || eval_term(a, u, zx) != x) return false;
  }
  return true;
}

bool check_jonsson_tarski_term(const FiniteAlgebra& a, std::string_view symbol, Element zero) {
  binary_symbol(a, symbol);
  return check_jonsson_tarski_term(a, symbol_term(a.signature(), symbol), zero);
}

// ---------------------------------------------------------------------------
// Generic cross-checks

BinRel congruence_union_find(const FiniteAlgebra& a, const std::vector<ElementPair>& pairs) {
  const std::size_t n = a.size();
  DisjointSets classes(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw ValueOutOfRange("pair outside carrier");
    classes.unite(x, y);
  }
  // Compatibility with every basic translation f(c_1, .., x, .., c_k) makes
  // the partition a congruence; it suffices to relate each element to its
  // representative.
  std::vector<Element> args, args2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      const std::size_t k = a.arity(op);
      if (k == 0) continue;
      args.assign(k, 0);
      while (true) {
        for (std::size_t pos = 0; pos < k; ++pos) {
          const Element rep = static_cast<Element>(classes.find(args[pos]));
          if (rep == args[pos]) continue;
          args2 = args;
          args2[pos] = rep;
          if (classes.unite(a.apply(op, args), a.apply(op, args2))) changed = true;
        }
        std::size_t i = k;
        while (i > 0 && ++args[i - 1] == n) args[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  BinRel out(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (classes.find(x) == classes.find(y)) out.insert(x, y);
    }
  }
  return out;
}

BinRel term_semicongruence(const FiniteAlgebra& a, Element top, const ElementSet& i,
                           std::size_t max_depth) {
  if (top >= a.size()) throw ValueOutOfRange("top outside carrier");
  // Values of t(x, y) and t(x, top) are computed together in A x A: the
  // x-variables evaluate to (x, x) and the y-variables to (y, top).
  const FiniteAlgebra square = product_square(a);
  const std::size_t n = a.size();
  ElementSet generators(n * n);
  for (Element x = 0; x < n; ++x) generators.insert(static_cast<Element>(x * n + x));
  i.for_each([&](Element y) { generators.insert(static_cast<Element>(y * n + top)); });
  return BinRel::from_encoded(n, enumerate_term_images(square, generators, max_depth));
}

ElementSet term_induction(const FiniteAlgebra& a, Element top, const ElementSet& i,
                          std::size_t max_depth) {
  const BinRel r = term_semicongruence(a, top, i, max_depth);
  ElementSet out(a.size());
  for (auto [value, at_top] : r.pairs()) {
    if (i.contains(at_top)) out.insert(value);
  }
  return out;
}

ElementSet term_deduction(const FiniteAlgebra& a, Element top, const ElementSet& i,
                          std::size_t max_depth) {
  const BinRel r = term_semicongruence(a, top, i, max_depth);
  ElementSet out(a.size());
  for (auto [value, at_top] : r.pairs()) {
    if (i.contains(value)) out.insert(at_top);
  }
  return out;
}

ElementSet term_clot(const FiniteAlgebra& a, Element top, const ElementSet& i,
                     std::size_t max_depth) {
  const BinRel r = term_semicongruence(a, top, i, max_depth);
  ElementSet out(a.size());
  for (auto [value, at_top] : r.pairs()) {
    if (at_top == top) out.insert(value);
  }
  return out;
}

}  // namespace ualg
