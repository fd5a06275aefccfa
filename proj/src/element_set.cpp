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

#include "ualg/element_set.hpp"

#include "ualg/errors.hpp"

namespace ualg {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Element> members)
    : bits_(universe) {
  for (Element x : members) insert(x);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<Element>& members)
    : bits_(universe) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw SizeOverflow("from_mask needs a universe of at most 64 elements");
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

void ElementSet::insert(Element x) {
  if (x >= bits_.size()) {
    throw ValueOutOfRange("element " + std::to_string(x) + " outside carrier of size " +
                          std::to_string(bits_.size()));
  }
  bits_.set(x);
}

void ElementSet::erase(Element x) {
  if (x < bits_.size()) bits_.reset(x);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (universe() != other.universe()) throw SizeMismatch("element sets over different carriers");
  return bits_.is_subset_of(other.bits_);
}

bool ElementSet::intersects(const ElementSet& other) const {
  if (universe() != other.universe()) throw SizeMismatch("element sets over different carriers");
  return bits_.intersects(other.bits_);
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (universe() != other.universe()) throw SizeMismatch("element sets over different carriers");
  bits_ |= other.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (universe() != other.universe()) throw SizeMismatch("element sets over different carriers");
  bits_ &= other.bits_;
  return *this;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(count());
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::uint64_t ElementSet::mask() const {
  if (universe() > 64) throw SizeOverflow("mask needs a universe of at most 64 elements");
  std::uint64_t m = 0;
  for_each([&](Element x) { m |= std::uint64_t{1} << x; });
  return m;
}

std::string to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element x) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
  });
  out += '}';
  return out;
}

}  // namespace ualg
