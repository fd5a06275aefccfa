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

#include "ualg/nat_chain.hpp"

#include "ualg/errors.hpp"

namespace ualg {

namespace {

bool is_prime(const BigNat& p) {
  if (p < 2) return false;
  for (BigNat d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void add_divisors(const BigNat& v, BigNaturalSet& out) {
  for (BigNat d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.insert(d);
      out.insert(v / d);
    }
  }
}

}  // namespace

void validate_primes(const std::vector<BigNat>& primes) {
  if (primes.empty()) throw InvalidPrimeList("prime list is empty");
  std::set<BigNat> seen;
  for (const BigNat& p : primes) {
    if (!is_prime(p)) throw InvalidPrimeList(p.str() + " is not prime");
    if (!seen.insert(p).second) throw InvalidPrimeList(p.str() + " is repeated");
  }
}

BigNaturalSet nat_chain_seed(const std::vector<BigNat>& primes, std::size_t m) {
  validate_primes(primes);
  if (m < 1 || m > primes.size()) {
    throw InvalidPrimeList("truncation " + std::to_string(m) + " needs between 1 and " +
                           std::to_string(primes.size()) + " primes");
  }
  BigNaturalSet seed;
  BigNat previous = 1;  // p_0
  for (std::size_t k = 0; k < m; ++k) {
    seed.insert(previous * primes[k]);
    previous = primes[k];
  }
  return seed;
}

BigNaturalSet divisor_universe(const BigNaturalSet& s) {
  BigNaturalSet out;
  for (const BigNat& v : s) add_divisors(v, out);
  return out;
}

BigNaturalSet nat_mult_deduction(const BigNaturalSet& j) {
  // x * y_1 * ... * y_k = z with z, y_i in J, so only products of members
  // dividing some z matter.
  const auto divides_member = [&](const BigNat& v) {
    for (const BigNat& z : j) {
      if (z % v == 0) return true;
    }
    return false;
  };
  BigNaturalSet products{1};
  std::vector<BigNat> work{1};
  while (!work.empty()) {
    const BigNat p = work.back();
    work.pop_back();
    for (const BigNat& y : j) {
      const BigNat q = p * y;
      if (divides_member(q) && products.insert(q).second) work.push_back(q);
    }
  }
  BigNaturalSet out;
  for (const BigNat& z : j) {
    for (const BigNat& p : products) {
      if (z % p == 0) out.insert(z / p);
    }
  }
  return out;
}

std::vector<BigNaturalSet> nat_mult_deduction_chain(const std::vector<BigNat>& primes,
                                                    std::size_t m, std::size_t depth) {
  if (m < 2) throw InvalidPrimeList("truncation must be at least 2");
  std::vector<BigNaturalSet> chain{nat_chain_seed(primes, m)};
  for (std::size_t n = 0; n < depth; ++n) chain.push_back(nat_mult_deduction(chain.back()));
  return chain;
}

BigNaturalSet nat_chain_expected_stage(const std::vector<BigNat>& primes, std::size_t m,
                                       std::size_t n) {
  const BigNaturalSet seed = nat_chain_seed(primes, m);
  BigNaturalSet out = seed;
  out.insert(1);
  for (std::size_t j = 1; j <= n + 1 && j <= primes.size(); ++j) {
    for (const BigNat& z : seed) {
      if (z % primes[j - 1] == 0) out.insert(primes[j - 1]);
    }
  }
  return out;
}

std::string to_string(const BigNaturalSet& s) {
  std::string out = "{";
  bool first = true;
  for (const BigNat& v : s) {
    if (!first) out += ',';
    first = false;
    out += v.str();
  }
  out += '}';
  return out;
}

}  // namespace ualg
