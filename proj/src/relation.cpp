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

#include "ualg/relation.hpp"

#include "ualg/errors.hpp"

namespace ualg {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw SizeMismatch("carrier sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

BinRel::BinRel(std::size_t n) : rows_(n, ElementSet(n)) {}

BinRel BinRel::diagonal(std::size_t n) {
  BinRel r(n);
  for (std::size_t a = 0; a < n; ++a) r.rows_[a].insert(static_cast<Element>(a));
  return r;
}

BinRel BinRel::full(std::size_t n) {
  BinRel r;
  r.rows_.assign(n, ElementSet::full(n));
  return r;
}

BinRel BinRel::from_pairs(std::size_t n, const std::vector<ElementPair>& pairs) {
  BinRel r(n);
  for (auto [a, b] : pairs) r.insert(a, b);
  return r;
}

BinRel BinRel::from_encoded(std::size_t n, const ElementSet& support) {
  require_same_size(support.universe(), n * n);
  BinRel r(n);
  support.for_each([&](Element p) {
    r.rows_[p / n].insert(static_cast<Element>(p % n));
  });
  return r;
}

void BinRel::insert(Element a, Element b) {
  if (a >= size() || b >= size()) {
    throw ValueOutOfRange("pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") outside carrier of size " + std::to_string(size()));
  }
  rows_[a].insert(b);
}

std::size_t BinRel::count() const {
  std::size_t c = 0;
  for (const auto& row : rows_) c += row.count();
  return c;
}

bool BinRel::is_reflexive() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (!rows_[a].contains(static_cast<Element>(a))) return false;
  }
  return true;
}

bool BinRel::is_symmetric() const { return *this == opposite(*this); }

bool BinRel::is_transitive() const { return compose(*this, *this).is_subset_of(*this); }

bool BinRel::is_subset_of(const BinRel& other) const {
  require_same_size(size(), other.size());
  for (std::size_t a = 0; a < size(); ++a) {
    if (!rows_[a].is_subset_of(other.rows_[a])) return false;
  }
  return true;
}

std::vector<ElementPair> BinRel::pairs() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    rows_[a].for_each([&](Element b) { out.emplace_back(static_cast<Element>(a), b); });
  }
  return out;
}

ElementSet BinRel::encoded() const {
  const std::size_t n = size();
  ElementSet s(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    rows_[a].for_each([&](Element b) { s.insert(static_cast<Element>(a * n + b)); });
  }
  return s;
}

BinRel& BinRel::operator|=(const BinRel& other) {
  require_same_size(size(), other.size());
  for (std::size_t a = 0; a < size(); ++a) rows_[a] |= other.rows_[a];
  return *this;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  require_same_size(r.size(), s.size());
  BinRel out(r.size());
  for (std::size_t a = 0; a < r.size(); ++a) {
    ElementSet& acc = out.rows_[a];
    r.row(static_cast<Element>(a)).for_each([&](Element b) { acc |= s.row(b); });
  }
  return out;
}

BinRel opposite(const BinRel& r) {
  BinRel out(r.size());
  for (auto [a, b] : r.pairs()) out.insert(b, a);
  return out;
}

BinRel power(const BinRel& r, std::uint64_t e) {
  BinRel result = BinRel::diagonal(r.size());
  BinRel base = r;
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    e >>= 1U;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

ElementSet left_image(const BinRel& r, const ElementSet& s) {
  require_same_size(r.size(), s.universe());
  ElementSet out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r.row(static_cast<Element>(x)).intersects(s)) out.insert(static_cast<Element>(x));
  }
  return out;
}

ElementSet right_image(const BinRel& r, const ElementSet& s) {
  require_same_size(r.size(), s.universe());
  ElementSet out(r.size());
  s.for_each([&](Element y) { out |= r.row(y); });
  return out;
}

bool is_compatible(const FiniteAlgebra& a, const BinRel& r) {
  require_same_size(a.size(), r.size());
  const std::vector<ElementPair> support = r.pairs();
  std::vector<Element> left, right;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const std::size_t k = a.arity(op);
    if (k == 0) {
      const Element c = a.table(op)[0];
      if (!r.contains(c, c)) return false;
      continue;
    }
    if (support.empty()) continue;
    std::vector<std::size_t> digits(k, 0);
    left.resize(k);
    right.resize(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        left[i] = support[digits[i]].first;
        right[i] = support[digits[i]].second;
      }
      if (!r.contains(a.apply(op, left), a.apply(op, right))) return false;
      std::size_t i = k;
      while (i > 0 && ++digits[i - 1] == support.size()) digits[--i] = 0;
      if (i == 0) break;
    }
  }
  return true;
}

std::string dump(const BinRel& r) {
  std::string out;
  for (auto [a, b] : r.pairs()) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

}  // namespace ualg
