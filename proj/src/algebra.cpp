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

#include "ualg/algebra.hpp"

#include <limits>
#include <set>

#include "ualg/detail/closure_kernel.hpp"
#include "ualg/errors.hpp"

namespace ualg {

namespace {

// n^k, or nullopt on overflow.
std::optional<std::size_t> checked_pow(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > std::numeric_limits<std::size_t>::max() / n) return std::nullopt;
    r *= n;
  }
  return r;
}

std::vector<std::size_t> arities_of(const Signature& sig) {
  std::vector<std::size_t> out;
  out.reserve(sig.size());
  for (const auto& s : sig.symbols()) out.push_back(s.arity);
  return out;
}

ElementSet with_constants(const FiniteAlgebra& a, ElementSet s) {
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    if (a.arity(op) == 0) s.insert(a.table(op)[0]);
  }
  return s;
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (!seen.insert(s.name).second) throw DuplicateSymbol("duplicate symbol '" + s.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownSymbol("unknown symbol '" + std::string(name) + "'");
}

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                             std::vector<std::vector<Element>> tables,
                             std::optional<Element> top)
    : name_(std::move(name)),
      sig_(std::move(sig)),
      size_(size),
      tables_(std::move(tables)),
      top_(top) {
  if (size_ == 0) throw ValueOutOfRange("algebra size must be positive");
  if (tables_.size() != sig_.size()) {
    throw ArityMismatch("expected " + std::to_string(sig_.size()) + " tables, got " +
                        std::to_string(tables_.size()));
  }
  for (std::size_t op = 0; op < sig_.size(); ++op) {
    const auto expected = checked_pow(size_, sig_[op].arity);
    if (!expected) throw SizeOverflow("table of '" + sig_[op].name + "' is too large");
    if (tables_[op].size() != *expected) {
      throw ArityMismatch("table of '" + sig_[op].name + "' has " +
                          std::to_string(tables_[op].size()) + " entries, expected " +
                          std::to_string(*expected));
    }
    for (std::size_t i = 0; i < tables_[op].size(); ++i) {
      if (tables_[op][i] >= size_) {
        throw ValueOutOfRange("table of '" + sig_[op].name + "' entry " + std::to_string(i) +
                              " is " + std::to_string(tables_[op][i]) + ", not below size " +
                              std::to_string(size_));
      }
    }
  }
  if (top_ && *top_ >= size_) {
    throw ValueOutOfRange("top " + std::to_string(*top_) + " is not below size " +
                          std::to_string(size_));
  }
}

FiniteAlgebra FiniteAlgebra::with_top(std::optional<Element> top) const {
  return FiniteAlgebra(name_, sig_, size_, tables_, top);
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Element FiniteAlgebra::resolve_top(std::optional<Element> explicit_top) const {
  const auto t = explicit_top ? explicit_top : top_;
  if (!t) throw MissingTop("algebra '" + name_ + "' has no distinguished element");
  if (*t >= size_) {
    throw ValueOutOfRange("top " + std::to_string(*t) + " is not below size " +
                          std::to_string(size_));
  }
  return *t;
}

FiniteAlgebra make_algebra(Signature sig, std::size_t size,
                           std::vector<std::vector<Element>> tables, std::optional<Element> top,
                           std::string name) {
  return FiniteAlgebra(std::move(name), std::move(sig), size, std::move(tables), top);
}

FiniteAlgebra product_square(const FiniteAlgebra& a, std::size_t carrier_limit) {
  const std::size_t n = a.size();
  const auto n2 = checked_pow(n, 2);
  if (!n2 || *n2 > carrier_limit) {
    throw SizeOverflow("square of a " + std::to_string(n) + "-element algebra exceeds the " +
                       std::to_string(carrier_limit) + "-element carrier limit");
  }
  std::vector<std::vector<Element>> tables;
  tables.reserve(a.signature().size());
  std::vector<Element> left, right;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const std::size_t k = a.arity(op);
    const auto entries = checked_pow(*n2, k);
    if (!entries) throw SizeOverflow("product table too large");
    std::vector<Element> table(*entries);
    left.resize(k);
    right.resize(k);
    for (std::size_t idx = 0; idx < *entries; ++idx) {
      // Decode the argument tuple, leftmost argument slowest.
      std::size_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        const std::size_t pair = rest % *n2;
        rest /= *n2;
        left[i] = static_cast<Element>(pair / n);
        right[i] = static_cast<Element>(pair % n);
      }
      table[idx] = static_cast<Element>(a.apply(op, left) * n + a.apply(op, right));
    }
    tables.push_back(std::move(table));
  }
  std::optional<Element> top;
  if (a.top()) top = static_cast<Element>(*a.top() * n + *a.top());
  return FiniteAlgebra(a.name() + "^2", a.signature(), *n2, std::move(tables), top);
}

ElementSet generate_subalgebra(const FiniteAlgebra& a, const ElementSet& seed) {
  if (seed.universe() != a.size()) throw SizeMismatch("seed is not a subset of the carrier");
  const auto arities = arities_of(a.signature());
  const auto apply = [&a](std::size_t op, std::span<const Element> args) {
    return a.apply(op, args);
  };
  return detail::close_under(arities, apply, with_constants(a, seed));
}

ElementSet enumerate_term_images(const FiniteAlgebra& a, const ElementSet& generators,
                                 std::size_t max_depth) {
  if (generators.universe() != a.size()) {
    throw SizeMismatch("generators are not a subset of the carrier");
  }
  // Level d holds the values of all terms of depth <= d.
  ElementSet level = with_constants(a, generators);
  std::vector<Element> args;
  for (std::size_t depth = 0; depth < max_depth; ++depth) {
    const std::vector<Element> values = level.members();
    if (values.empty()) break;
    ElementSet next = level;
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      const std::size_t k = a.arity(op);
      if (k == 0) continue;
      std::vector<std::size_t> digits(k, 0);
      args.resize(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) args[i] = values[digits[i]];
        next.insert(a.apply(op, args));
        std::size_t i = k;
        while (i > 0 && ++digits[i - 1] == values.size()) digits[--i] = 0;
        if (i == 0) break;
      }
    }
    if (next == level) break;
    level = std::move(next);
  }
  return level;
}

}  // namespace ualg
