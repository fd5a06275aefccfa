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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// A term over some signature: a variable x_i or f(t_1, ..., t_k).
class Term {
 public:
  static Term variable(std::size_t index);
  static Term apply(std::size_t symbol, std::vector<Term> args);
  /// Looks the symbol up by name in `sig` and checks the arity.
  static Term apply(const Signature& sig, std::string_view symbol, std::vector<Term> args);

  bool is_variable() const noexcept { return is_variable_; }
  std::size_t variable_index() const noexcept { return index_; }
  std::size_t symbol() const noexcept { return index_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  /// Variables and constants have depth 0.
  std::size_t depth() const;
  /// One past the largest variable index; 0 for ground terms.
  std::size_t variable_bound() const;

  /// Throws UnknownSymbol or ArityMismatch if the term is not well formed.
  void check(const Signature& sig) const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term() = default;

  bool is_variable_ = true;
  std::size_t index_ = 0;
  std::vector<Term> args_;
};

std::string to_string(const Term& t, const Signature& sig);

/// Replaces each variable x_i by replacements[i]. Throws UnboundVariable when
/// a variable has no replacement.
Term substitute(const Term& t, const std::vector<Term>& replacements);

/// Evaluates `t` with x_i bound to env[i]. Throws UnboundVariable when a
/// variable index is >= env.size().
Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> env);

}  // namespace ualg
