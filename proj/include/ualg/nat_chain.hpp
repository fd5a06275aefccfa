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

// Deduction in the multiplicative monoid (N, *, 1) with top = 1, over exact
// integers. In a commutative monoid,
//
//   ded J = {x | x * y_1 * ... * y_m in J for some y_1, ..., y_m in J}.
//
// Every element of ded J divides an element of J, so starting from a finite
// seed every stage of the chain lives among the divisors of the seed.

#pragma once

#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ualg {

using BigNat = boost::multiprecision::cpp_int;
using BigNaturalSet = std::set<BigNat>;

/// Throws InvalidPrimeList unless the list is nonempty, duplicate-free and
/// every entry is prime (by trial division).
void validate_primes(const std::vector<BigNat>& primes);

/// {p_0 p_1, p_1 p_2, ..., p_{m-1} p_m} with p_0 = 1 and p_1, p_2, ... the
/// given primes. Requires 1 <= m <= primes.size().
BigNaturalSet nat_chain_seed(const std::vector<BigNat>& primes, std::size_t m);

/// All positive divisors of members of `s`, by trial division (small inputs only).
BigNaturalSet divisor_universe(const BigNaturalSet& s);

/// One deduction step in (N, *, 1) applied to a finite set J.
BigNaturalSet nat_mult_deduction(const BigNaturalSet& j);

/// Stages ded^(0) I, ..., ded^(depth) I for the truncated seed
/// I = nat_chain_seed(primes, m). Requires m >= 2.
std::vector<BigNaturalSet> nat_mult_deduction_chain(const std::vector<BigNat>& primes,
                                                    std::size_t m, std::size_t depth);

/// ({p_0, ..., p_{n+1}} u I) restricted to the divisors of I.
BigNaturalSet nat_chain_expected_stage(const std::vector<BigNat>& primes, std::size_t m,
                                       std::size_t n);

std::string to_string(const BigNaturalSet& s);

}  // namespace ualg
