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

#include "ualg/term.hpp"

#include <algorithm>

#include "ualg/errors.hpp"

namespace ualg {

Term Term::variable(std::size_t index) {
  Term t;
  t.is_variable_ = true;
  t.index_ = index;
  return t;
}

Term Term::apply(std::size_t symbol, std::vector<Term> args) {
  Term t;
  t.is_variable_ = false;
  t.index_ = symbol;
  t.args_ = std::move(args);
  return t;
}

Term Term::apply(const Signature& sig, std::string_view symbol, std::vector<Term> args) {
  const std::size_t op = sig.index_of(symbol);
  if (sig[op].arity != args.size()) {
    throw ArityMismatch("symbol '" + sig[op].name + "' has arity " +
                        std::to_string(sig[op].arity) + ", given " +
                        std::to_string(args.size()) + " arguments");
  }
  return apply(op, std::move(args));
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth() + 1);
  return d;
}

std::size_t Term::variable_bound() const {
  if (is_variable_) return index_ + 1;
  std::size_t b = 0;
  for (const auto& a : args_) b = std::max(b, a.variable_bound());
  return b;
}

void Term::check(const Signature& sig) const {
  if (is_variable_) return;
  if (index_ >= sig.size()) {
    throw UnknownSymbol("symbol index " + std::to_string(index_) + " not in signature");
  }
  if (sig[index_].arity != args_.size()) {
    throw ArityMismatch("symbol '" + sig[index_].name + "' applied to " +
                        std::to_string(args_.size()) + " arguments");
  }
  for (const auto& a : args_) a.check(sig);
}

std::string to_string(const Term& t, const Signature& sig) {
  if (t.is_variable()) return "x" + std::to_string(t.variable_index());
  std::string out = sig[t.symbol()].name;
  if (t.args().empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(t.args()[i], sig);
  }
  out += ')';
  return out;
}

Term substitute(const Term& t, const std::vector<Term>& replacements) {
  if (t.is_variable()) {
    if (t.variable_index() >= replacements.size()) {
      throw UnboundVariable("no replacement for x" + std::to_string(t.variable_index()));
    }
    return replacements[t.variable_index()];
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& sub : t.args()) args.push_back(substitute(sub, replacements));
  return Term::apply(t.symbol(), std::move(args));
}

Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> env) {
  if (t.is_variable()) {
    if (t.variable_index() >= env.size()) {
      throw UnboundVariable("variable x" + std::to_string(t.variable_index()) + " is unbound");
    }
    return env[t.variable_index()];
  }
  if (t.symbol() >= a.signature().size() || a.arity(t.symbol()) != t.args().size()) {
    t.check(a.signature());
  }
  std::vector<Element> args;
  args.reserve(t.args().size());
  for (const auto& sub : t.args()) args.push_back(eval_term(a, sub, env));
  return a.apply(t.symbol(), args);
}

}  // namespace ualg
