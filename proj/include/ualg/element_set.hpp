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
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ualg {

using Element = std::uint32_t;

/// A subset of the carrier {0, ..., n-1} of some finite algebra.
class ElementSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members);
  ElementSet(std::size_t universe, const std::vector<Element>& members);

  static ElementSet full(std::size_t universe);
  /// Bit i of `mask` selects element i; requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Element x) const { return x < bits_.size() && bits_.test(x); }
  /// Throws ValueOutOfRange when x is outside the universe.
  void insert(Element x);
  void erase(Element x);

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

  std::vector<Element> members() const;
  std::uint64_t mask() const;

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<Element>(i));
    }
  }

  const Bits& bits() const noexcept { return bits_; }
  Bits& bits() noexcept { return bits_; }

 private:
  Bits bits_;
};

/// "{0,2,3}" -- sorted, brace-delimited, no spaces.
std::string to_string(const ElementSet& s);

}  // namespace ualg
