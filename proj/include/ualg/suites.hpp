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

// Named verification suites. Each runs an exhaustive check over the catalog
// (plus any extra algebras) and collects every failing case.
//
//   theorem-a        nonempty I: normal <=> ind I = I and ded I = I
//   theorem-b        nonempty I: I contains <top> <=> ind I contains <I>
//   theorem-c        R^n I <= ind^(n) I <= R^(2^n-1) I, the dual for ded, and
//                    the decompositions of the fixpoints, for n = 0..3
//   clot-idempotent  C(C(I)) = C(I)
//   term-oracle      relation closure agrees with term enumeration (n <= 4)
//   semiring         ind I = I + ideal(I), ded I by formula, ranks <= 1,
//                    R*R = R, normal <=> subtractive ideal
//   comm-monoid      ind I = subsemigroup, ded by formula, deductive
//                    submonoids = subtractive submonoids
//   maltsev          ind = ded, semicongruences are congruences, rank <= 1
//   subtractive      ranks <= 2, fixpoints of ind and ded equal the clot
//   jonsson-tarski   subtractive plus Jonsson-Tarski term: ranks <= 1
//   rank0            pointed sets: ind I = I, deduction rank 1
//   nat-chain        deduction chain in (N, *, 1) over exact integers

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/catalog.hpp"
#include "ualg/nat_chain.hpp"

namespace ualg {

struct SuiteConfig {
  /// Catalog size bound.
  std::size_t limit = 4;
  /// Extra algebras checked alongside the catalog (suites that need variety
  /// data such as a semiring view only use catalog entries).
  std::vector<CatalogEntry> extra;
  std::vector<BigNat> primes{2, 3, 5, 7, 11};
  /// Truncation m of the nat-chain seed; 0 means all primes.
  std::size_t chain_m = 0;
  std::size_t chain_depth = 4;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t threads = 0;
};

struct SuiteFailure {
  /// "catalog:<name>" or a user algebra name, or "chain" for nat-chain.
  std::string target;
  std::string set;
  std::optional<Element> top;
  std::string check;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for names outside suite_names().
SuiteReport run_suite(std::string_view name, const SuiteConfig& config = {});

/// "PASS suite cases failures" (or FAIL), then one indented line per failure.
std::string render(const SuiteReport& report);

/// Comma-separated members, or "-" for the empty set (the CLI --set syntax).
std::string set_argument(const ElementSet& s);

}  // namespace ualg
