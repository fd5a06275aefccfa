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

// Finite algebras over arbitrary signatures. An algebra of size n has carrier
// {0, ..., n-1}; each operation of arity k is a table of n^k entries stored
// row-major with the leftmost argument varying slowest.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/element_set.hpp"

namespace ualg {

inline constexpr std::size_t kDefaultCarrierLimit = 4096;

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  /// Throws DuplicateSymbol if two symbols share a name.
  explicit Signature(std::vector<Symbol> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find, but throws UnknownSymbol.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

class FiniteAlgebra {
 public:
  /// Validating constructor; see make_algebra.
  FiniteAlgebra(std::string name, Signature sig, std::size_t size,
                std::vector<std::vector<Element>> tables, std::optional<Element> top = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return size_; }
  std::optional<Element> top() const noexcept { return top_; }
  const std::vector<Element>& table(std::size_t op) const { return tables_[op]; }
  std::size_t arity(std::size_t op) const { return sig_[op].arity; }

  /// Table lookup; args.size() must equal the arity of op.
  Element apply(std::size_t op, std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * size_ + a;
    return tables_[op][idx];
  }

  /// The same algebra with a different distinguished element.
  FiniteAlgebra with_top(std::optional<Element> top) const;
  FiniteAlgebra renamed(std::string name) const;

  /// Returns `explicit_top` if given, otherwise the stored top; throws MissingTop.
  Element resolve_top(std::optional<Element> explicit_top = std::nullopt) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::string name_;
  Signature sig_;
  std::size_t size_;
  std::vector<std::vector<Element>> tables_;
  std::optional<Element> top_;
};

/// Builds and validates an algebra. Errors: ArityMismatch when a table does
/// not have size^arity entries, ValueOutOfRange for entries or top >= size,
/// DuplicateSymbol.
FiniteAlgebra make_algebra(Signature sig, std::size_t size,
                           std::vector<std::vector<Element>> tables,
                           std::optional<Element> top = std::nullopt,
                           std::string name = "algebra");

/// A = A x A with componentwise operations; pair (a, b) is encoded as a*n + b.
/// Throws SizeOverflow when n^2 exceeds `carrier_limit`.
FiniteAlgebra product_square(const FiniteAlgebra& a,
                             std::size_t carrier_limit = kDefaultCarrierLimit);

/// Smallest subset containing `seed` and every constant, closed under all
/// operations.
ElementSet generate_subalgebra(const FiniteAlgebra& a, const ElementSet& seed);

/// Values of all terms of depth <= max_depth whose variables range over
/// `generators`. Variables and constants have depth 0.
ElementSet enumerate_term_images(const FiniteAlgebra& a, const ElementSet& generators,
                                 std::size_t max_depth);

}  // namespace ualg
