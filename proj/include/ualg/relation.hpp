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

// Binary relations on a finite carrier as bit-packed boolean matrices.
//
// Composition is read left to right along a chain: a (R*S) c iff there is b
// with a R b and b S c. Under this convention the left image of I under the
// n-fold power R^n is the n-fold iterate of the left image, R(R(...(RI))).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/element_set.hpp"

namespace ualg {

using ElementPair = std::pair<Element, Element>;

class BinRel {
 public:
  BinRel() = default;
  /// The empty relation on {0, ..., n-1}.
  explicit BinRel(std::size_t n);

  static BinRel diagonal(std::size_t n);
  static BinRel full(std::size_t n);
  /// Throws ValueOutOfRange for components >= n.
  static BinRel from_pairs(std::size_t n, const std::vector<ElementPair>& pairs);
  /// Inverse of the a*n+b pair encoding used by product_square.
  static BinRel from_encoded(std::size_t n, const ElementSet& support);

  std::size_t size() const noexcept { return rows_.size(); }
  bool contains(Element a, Element b) const { return rows_[a].contains(b); }
  void insert(Element a, Element b);

  /// Row a: the set {b | a R b}.
  const ElementSet& row(Element a) const { return rows_[a]; }

  std::size_t count() const;
  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_subset_of(const BinRel& other) const;

  /// Pairs sorted lexicographically.
  std::vector<ElementPair> pairs() const;
  /// Support as a subset of the product carrier, pair (a, b) -> a*n+b.
  ElementSet encoded() const;

  BinRel& operator|=(const BinRel& other);
  friend BinRel operator|(BinRel a, const BinRel& b) { return a |= b; }
  friend bool operator==(const BinRel&, const BinRel&) = default;
  friend BinRel compose(const BinRel& r, const BinRel& s);

 private:
  std::vector<ElementSet> rows_;
};

/// a (R*S) c iff exists b: a R b and b S c. Throws SizeMismatch.
BinRel compose(const BinRel& r, const BinRel& s);
/// Transpose.
BinRel opposite(const BinRel& r);
/// R^e by repeated squaring; R^0 is the diagonal.
BinRel power(const BinRel& r, std::uint64_t e);

/// RI = {x | exists y in I: x R y}.
ElementSet left_image(const BinRel& r, const ElementSet& s);
/// IR = {x | exists y in I: y R x}.
ElementSet right_image(const BinRel& r, const ElementSet& s);

/// True iff R contains (c, c) for every constant c and is closed under every
/// operation acting componentwise.
bool is_compatible(const FiniteAlgebra& a, const BinRel& r);

/// One "a b" line per pair, sorted lexicographically.
std::string dump(const BinRel& r);

}  // namespace ualg
