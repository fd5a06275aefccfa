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

#include "ualg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "ualg/closure.hpp"
#include "ualg/errors.hpp"
#include "ualg/oracles.hpp"
#include "ualg/ranks.hpp"

namespace ualg {

namespace {

struct Target {
  std::string id;
  const CatalogEntry* entry;
};

struct Partial {
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
};

// Failure recorder bound to one algebra.
class Checker {
 public:
  Checker(const Target& t, Partial& out) : target_(t), out_(out) {}

  const FiniteAlgebra& algebra() const { return target_.entry->algebra; }
  const CatalogEntry& entry() const { return *target_.entry; }
  Element top() const { return target_.entry->top(); }
  std::size_t size() const { return algebra().size(); }

  void count() { ++out_.cases; }

  void fail(const ElementSet* s, std::string check, std::string expected, std::string actual) {
    out_.failures.push_back(SuiteFailure{target_.id, s ? set_argument(*s) : "-", top(),
                                         std::move(check), std::move(expected),
                                         std::move(actual)});
  }

  void expect(bool ok, const ElementSet& s, const char* check, std::string expected,
              std::string actual) {
    if (!ok) fail(&s, check, std::move(expected), std::move(actual));
  }

  void expect_eq(const ElementSet& s, const char* check, const ElementSet& expected,
                 const ElementSet& actual) {
    if (!(expected == actual)) fail(&s, check, to_string(expected), to_string(actual));
  }

  /// Per-algebra rank must not exceed `bound`.
  void expect_rank_at_most(Mode mode, std::size_t bound) {
    count();
    const RankResult r = algebra_rank(algebra(), top(), mode, bound);
    if (!r.rank) {
      fail(&r.witness, std::string("rank ") + to_string(mode), "<= " + std::to_string(bound),
           "> " + std::to_string(bound));
    }
  }

  void expect_rank_equal(Mode mode, std::size_t expected) {
    count();
    const RankResult r = algebra_rank(algebra(), top(), mode, expected + 1);
    if (r.rank != expected) {
      fail(&r.witness, std::string("rank ") + to_string(mode), std::to_string(expected),
           r.rank ? std::to_string(*r.rank) : "exceeded");
    }
  }

 private:
  const Target& target_;
  Partial& out_;
};

using EntryCheck = std::function<void(Checker&)>;

std::vector<Target> targets_for(const std::vector<CatalogEntry>& catalog,
                                const std::vector<CatalogEntry>& extra) {
  std::vector<Target> out;
  for (const auto& e : catalog) out.push_back({"catalog:" + e.name(), &e});
  for (const auto& e : extra) {
    if (e.algebra.top()) out.push_back({e.name(), &e});
  }
  return out;
}

// Runs `check` on every target, possibly concurrently; results keep target order.
Partial run_targets(const std::vector<Target>& targets, std::size_t threads,
                    const std::function<bool(const CatalogEntry&)>& applies,
                    const EntryCheck& check) {
  std::vector<const Target*> selected;
  for (const auto& t : targets) {
    if (applies(*t.entry)) selected.push_back(&t);
  }
  std::vector<Partial> partials(selected.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      Checker c(*selected[i], partials[i]);
      try {
        check(c);
      } catch (const Error& e) {
        c.fail(nullptr, "exception", "no error", e.what());
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(selected.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Partial total;
  for (auto& p : partials) {
    total.cases += p.cases;
    for (auto& f : p.failures) total.failures.push_back(std::move(f));
  }
  return total;
}

bool always(const CatalogEntry&) { return true; }

// ---------------------------------------------------------------------------
// Generic theorems

void theorem_a(Checker& c) {
  const auto& a = c.algebra();
  for (std::uint64_t mask : nonempty_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const bool normal = is_top_normal(a, c.top(), s).normal;
    const bool inductive = top_induction(a, c.top(), s) == s;
    const bool deductive = top_deduction(a, c.top(), s) == s;
    c.expect(normal == (inductive && deductive), s, "normal <=> inductive and deductive",
             normal ? "normal" : "not-normal",
             std::string("inductive=") + (inductive ? "yes" : "no") +
                 ",deductive=" + (deductive ? "yes" : "no"));
  }
}

void theorem_b(Checker& c) {
  const auto& a = c.algebra();
  const ElementSet top_subalgebra = generate_subalgebra(a, ElementSet(c.size(), {c.top()}));
  for (std::uint64_t mask : nonempty_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const bool contains_top_subalgebra = top_subalgebra.is_subset_of(s);
    const bool ind_contains_generated =
        generate_subalgebra(a, s).is_subset_of(top_induction(a, c.top(), s));
    if (contains_top_subalgebra && !ind_contains_generated) {
      c.fail(&s, "I >= <top> => ind I >= <I>", "ind I >= <I>", "ind I not >= <I>");
    }
    if (ind_contains_generated && !contains_top_subalgebra) {
      c.fail(&s, "ind I >= <I> => I >= <top>", "I >= <top>", "I not >= <top>");
    }
  }
}

void theorem_c(Checker& c) {
  for (std::uint64_t mask : nonempty_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    for (std::size_t n = 0; n <= 3; ++n) {
      c.count();
      const SandwichReport r = sandwich_report(c.algebra(), c.top(), s, n);
      if (r.ok()) continue;
      std::string broken;
      const auto note = [&](bool ok, const char* what) {
        if (ok) return;
        if (!broken.empty()) broken += ',';
        broken += what;
      };
      note(r.induction_lower, "R^n I <= ind^(n) I");
      note(r.induction_upper, "ind^(n) I <= R^(2^n-1) I");
      note(r.deduction_lower, "I R^n <= ded^(n) I");
      note(r.deduction_upper, "ded^(n) I <= I R^(2^n-1)");
      note(r.induction_decomposition, "ind^(oo) decomposition");
      note(r.deduction_decomposition, "ded^(oo) decomposition");
      c.fail(&s, "sandwich n=" + std::to_string(n), "all inclusions", broken);
    }
  }
}

void clot_idempotent(Checker& c) {
  for (std::uint64_t mask : all_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const ElementSet once = clot_closure(c.algebra(), c.top(), s);
    c.expect_eq(s, "clot(clot I) = clot I", once, clot_closure(c.algebra(), c.top(), once));
  }
}

void term_oracle(Checker& c) {
  const auto& a = c.algebra();
  // Each depth adds a pair or the enumeration has stabilised.
  const std::size_t depth = c.size() * c.size() + 1;
  for (std::uint64_t mask : all_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const BinRel r = top_semicongruence(a, c.top(), s);
    const BinRel terms = term_semicongruence(a, c.top(), s, depth);
    if (!(r == terms)) {
      c.fail(&s, "semicongruence = term pairs", std::to_string(terms.count()) + " pairs",
             std::to_string(r.count()) + " pairs");
    }
    c.expect_eq(s, "ind = term induction", term_induction(a, c.top(), s, depth),
                left_image(r, s));
    c.expect_eq(s, "ded = term deduction", term_deduction(a, c.top(), s, depth),
                right_image(r, s));
    c.expect_eq(s, "clot = term clot", term_clot(a, c.top(), s, depth),
                clot_closure(a, c.top(), s));
  }
}

// ---------------------------------------------------------------------------
// Varieties

bool is_nontrivial(const CatalogEntry& e) { return e.algebra.size() > 1; }

void semiring(Checker& c) {
  const auto& sym = *c.entry().semiring;
  const SemiringView view(c.algebra(), sym.add, sym.mul, sym.zero, sym.one);
  if (view.zero() != c.top()) {
    c.fail(nullptr, "top is the semiring zero", std::to_string(view.zero()),
           std::to_string(c.top()));
    return;
  }
  const auto& a = c.algebra();
  for (std::uint64_t mask : all_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const BinRel r = top_semicongruence(a, c.top(), s);
    const ElementSet ind = left_image(r, s);
    const ElementSet ded = right_image(r, s);
    c.expect_eq(s, "ind I = I + ideal(I)", semiring_ind_oracle(view, s), ind);
    c.expect_eq(s, "ded I = {x | x+y in I, y in ideal(I)}", semiring_ded_oracle(view, s), ded);
    c.expect_eq(s, "ind ind I = ind I", ind, top_induction(a, c.top(), ind));
    c.expect_eq(s, "ded ded I = ded I", ded, top_deduction(a, c.top(), ded));
    c.expect(compose(r, r) == r, s, "R*R = R", "transitive", "not transitive");
    if (!s.empty()) {
      const bool normal = is_top_normal(a, c.top(), s).normal;
      const bool subtractive = is_subtractive_ideal(view, s);
      c.expect(normal == subtractive, s, "normal <=> subtractive ideal",
               subtractive ? "normal" : "not-normal", normal ? "normal" : "not-normal");
    }
  }
  c.expect_rank_at_most(Mode::induction, 1);
  c.expect_rank_at_most(Mode::deduction, 1);
}

void comm_monoid(Checker& c) {
  const auto& a = c.algebra();
  const std::string& add = *c.entry().monoid_add;
  const Element zero = c.top();
  for (std::uint64_t mask : nonempty_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const ElementSet ind = top_induction(a, zero, s);
    const ElementSet ded = top_deduction(a, zero, s);
    c.expect_eq(s, "ind I = subsemigroup(I)", subsemigroup_generated(a, add, s), ind);
    c.expect_eq(s, "ind ind I = ind I", ind, top_induction(a, zero, ind));
    c.expect_eq(s, "ded I = {x | x+y_1+..+y_m in I}", monoid_ded_formula(a, add, zero, s), ded);
    if (is_submonoid(a, add, zero, s)) {
      const bool deductive = ded == s;
      const bool subtractive = is_subtractive_submonoid(a, add, zero, s);
      c.expect(deductive == subtractive, s, "deductive submonoid <=> subtractive submonoid",
               subtractive ? "deductive" : "not deductive",
               deductive ? "deductive" : "not deductive");
      c.expect_eq(s, "ded I = subtractive closure (submonoid I)",
                  subtractive_closure_submonoid(a, add, s), ded);
    }
  }
  c.expect_rank_at_most(Mode::induction, 1);
}

void maltsev(Checker& c) {
  const auto& a = c.algebra();
  c.count();
  if (!check_maltsev_term(a, *c.entry().maltsev)) {
    c.fail(nullptr, "Mal'tsev identities", "hold", "fail");
    return;
  }
  for (std::uint64_t mask : all_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    c.expect_eq(s, "ind I = ded I", top_induction(a, c.top(), s), top_deduction(a, c.top(), s));
  }
  // Pair sets: diagonal pairs never matter, so enumerate subsets of the
  // off-diagonal pairs, exhaustively when there are at most 12 of them and
  // otherwise all sets of one or two pairs.
  std::vector<ElementPair> off;
  for (Element x = 0; x < c.size(); ++x) {
    for (Element y = 0; y < c.size(); ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  std::vector<std::vector<ElementPair>> seeds;
  if (off.size() <= 12) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << off.size()); ++m) {
      std::vector<ElementPair> seed;
      for (std::size_t i = 0; i < off.size(); ++i) {
        if ((m >> i) & 1U) seed.push_back(off[i]);
      }
      seeds.push_back(std::move(seed));
    }
  } else {
    for (std::size_t i = 0; i < off.size(); ++i) {
      seeds.push_back({off[i]});
      for (std::size_t j = i + 1; j < off.size(); ++j) seeds.push_back({off[i], off[j]});
    }
  }
  for (const auto& seed : seeds) {
    c.count();
    const BinRel r = semicongruence_generated(a, seed);
    if (!r.is_symmetric() || !r.is_transitive()) {
      std::string pairs;
      for (auto [x, y] : seed) pairs += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      c.fail(nullptr, "semicongruence generated by " + pairs + " is a congruence", "congruence",
             std::string(r.is_symmetric() ? "" : "not symmetric ") +
                 (r.is_transitive() ? "" : "not transitive"));
    }
  }
  c.expect_rank_at_most(Mode::induction, 1);
  c.expect_rank_at_most(Mode::deduction, 1);
}

bool has_subtraction(const CatalogEntry& e) { return e.subtraction.has_value(); }

void subtractive(Checker& c) {
  const auto& a = c.algebra();
  c.count();
  if (!check_subtractive_term(a, *c.entry().subtraction, c.top())) {
    c.fail(nullptr, "s(x,x)=0 and s(x,0)=x", "hold", "fail");
    return;
  }
  c.expect_rank_at_most(Mode::induction, 2);
  c.expect_rank_at_most(Mode::deduction, 2);
  for (std::uint64_t mask : nonempty_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const ElementSet clot = clot_closure(a, c.top(), s);
    c.expect_eq(s, "ind^(oo) I = clot I", clot,
                iterate_to_fixpoint(a, c.top(), s, Mode::induction).last());
    c.expect_eq(s, "ded^(oo) I = clot I", clot,
                iterate_to_fixpoint(a, c.top(), s, Mode::deduction).last());
  }
}

bool has_subtraction_and_jt(const CatalogEntry& e) {
  return e.subtraction && e.jonsson_tarski;
}

void jonsson_tarski(Checker& c) {
  const auto& a = c.algebra();
  c.count();
  if (!check_subtractive_term(a, *c.entry().subtraction, c.top()) ||
      !check_jonsson_tarski_term(a, *c.entry().jonsson_tarski, c.top())) {
    c.fail(nullptr, "subtraction and Jonsson-Tarski identities", "hold", "fail");
    return;
  }
  c.expect_rank_at_most(Mode::induction, 1);
  c.expect_rank_at_most(Mode::deduction, 1);
}

bool is_pointed_set(const CatalogEntry& e) {
  return e.family == Family::pointed_set ||
         (e.family == Family::trivial && e.algebra.signature().size() == 1 &&
          e.algebra.signature()[0].arity == 0);
}

void rank0(Checker& c) {
  const auto& a = c.algebra();
  const ElementSet top_only(c.size(), {c.top()});
  for (std::uint64_t mask : all_subsets(c.size())) {
    const ElementSet s = ElementSet::from_mask(c.size(), mask);
    c.count();
    const BinRel expected_r = BinRel::from_pairs(c.size(), pairs_to_top(s, c.top())) |
                              BinRel::diagonal(c.size());
    c.expect(top_semicongruence(a, c.top(), s) == expected_r, s, "R = (I x {top}) u diagonal",
             "equal", "different");
    c.expect_eq(s, "ind I = I", s, top_induction(a, c.top(), s));
    if (!s.empty()) c.expect_eq(s, "ded I = I u {top}", s | top_only, top_deduction(a, c.top(), s));
  }
  c.expect_rank_equal(Mode::induction, 0);
  c.expect_rank_equal(Mode::deduction, is_nontrivial(c.entry()) ? 1 : 0);
}

// ---------------------------------------------------------------------------
// (N, *, 1)

// Whether q is a product of members of J (the empty product being 1).
bool is_product_of(const BigNat& q, const BigNaturalSet& j, std::map<BigNat, bool>& memo) {
  if (q == 1) return true;
  if (auto it = memo.find(q); it != memo.end()) return it->second;
  bool found = false;
  for (const BigNat& y : j) {
    if (y > 1 && q % y == 0 && is_product_of(q / y, j, memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(q, found);
  return found;
}

// One deduction step by scanning every divisor x of a member z and asking
// whether z / x factors over J.
BigNaturalSet divisor_deduction(const BigNaturalSet& j) {
  std::map<BigNat, bool> memo;
  BigNaturalSet out;
  for (const BigNat& x : divisor_universe(j)) {
    for (const BigNat& z : j) {
      if (z % x == 0 && is_product_of(z / x, j, memo)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

// Divisor enumeration is by trial division.
constexpr std::uint64_t kDivisorOracleBound = 1'000'000'000'000ULL;

Partial nat_chain(const SuiteConfig& config) {
  Partial out;
  const std::size_t m = config.chain_m == 0 ? config.primes.size() : config.chain_m;
  std::string primes;
  for (const auto& p : config.primes) primes += (primes.empty() ? "" : ",") + p.str();
  const auto fail = [&](std::size_t n, std::string check, std::string expected, std::string actual) {
    out.failures.push_back(SuiteFailure{"chain --primes " + primes + " --m " + std::to_string(m) +
                                            " --depth " + std::to_string(config.chain_depth),
                                        "stage " + std::to_string(n), std::nullopt,
                                        std::move(check), std::move(expected), std::move(actual)});
  };
  try {
    const auto chain = nat_mult_deduction_chain(config.primes, m, config.chain_depth);
    for (std::size_t n = 0; n < chain.size(); ++n) {
      ++out.cases;
      if (n > 0 && *chain[n - 1].rbegin() < kDivisorOracleBound) {
        const BigNaturalSet scanned = divisor_deduction(chain[n - 1]);
        if (scanned != chain[n]) {
          fail(n, "ded step = divisor oracle", to_string(scanned), to_string(chain[n]));
        }
      }
      // Stage 0 is the seed itself; the closed form describes stages n >= 1.
      const BigNaturalSet expected =
          n == 0 ? nat_chain_seed(config.primes, m) : nat_chain_expected_stage(config.primes, m, n);
      if (expected != chain[n]) fail(n, "stage = {p_0..p_(n+1)} u I", to_string(expected), to_string(chain[n]));
      if (n + 1 < chain.size() && n + 2 <= m && chain[n + 1].size() <= chain[n].size()) {
        fail(n, "strict growth", "|ded^(n+1)| > " + std::to_string(chain[n].size()),
             std::to_string(chain[n + 1].size()));
      }
    }
  } catch (const Error& e) {
    fail(0, "exception", "no error", e.what());
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "theorem-a", "theorem-b",   "theorem-c",      "clot-idempotent",
      "term-oracle", "semiring",  "comm-monoid",    "maltsev",
      "subtractive", "jonsson-tarski", "rank0",     "nat-chain"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw UnknownSuite("unknown suite '" + std::string(name) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);

  Partial result;
  if (name == "nat-chain") {
    result = nat_chain(config);
  } else {
    const std::vector<CatalogEntry> catalog = build_catalog(config.limit);
    for (const auto& e : config.extra) {
      if (e.algebra.size() > kDefaultEnumerationLimit) {
        throw CarrierTooLarge("algebra '" + e.name() + "' is too large for exhaustive suites");
      }
    }
    const std::vector<Target> targets = targets_for(catalog, config.extra);
    const auto run = [&](const std::function<bool(const CatalogEntry&)>& applies,
                         const EntryCheck& check) {
      return run_targets(targets, config.threads, applies, check);
    };
    if (name == "theorem-a") result = run(always, theorem_a);
    else if (name == "theorem-b") result = run(always, theorem_b);
    else if (name == "theorem-c") result = run(always, theorem_c);
    else if (name == "clot-idempotent") result = run(always, clot_idempotent);
    else if (name == "term-oracle") {
      result = run([](const CatalogEntry& e) { return e.algebra.size() <= 4; }, term_oracle);
    } else if (name == "semiring") {
      result = run([](const CatalogEntry& e) { return e.semiring.has_value(); }, semiring);
    } else if (name == "comm-monoid") {
      result = run([](const CatalogEntry& e) { return e.monoid_add.has_value(); }, comm_monoid);
    } else if (name == "maltsev") {
      result = run([](const CatalogEntry& e) { return e.maltsev.has_value(); }, maltsev);
    } else if (name == "subtractive") {
      result = run(has_subtraction, subtractive);
    } else if (name == "jonsson-tarski") {
      result = run(has_subtraction_and_jt, jonsson_tarski);
    } else if (name == "rank0") {
      result = run(is_pointed_set, rank0);
    }
  }
  report.cases = result.cases;
  report.failures = std::move(result.failures);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string set_argument(const ElementSet& s) {
  if (s.empty()) return "-";
  std::string out;
  s.for_each([&](Element x) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  });
  return out;
}

std::string render(const SuiteReport& report) {
  std::string out = (report.passed() ? "PASS " : "FAIL ") + report.suite + " " +
                    std::to_string(report.cases) + " " + std::to_string(report.failures.size()) +
                    "\n";
  for (const auto& f : report.failures) {
    out += "  case " + f.target + " --set " + f.set;
    if (f.top) out += " --top " + std::to_string(*f.top);
    out += " check=\"" + f.check + "\" expected=" + f.expected + " actual=" + f.actual + "\n";
  }
  return out;
}

}  // namespace ualg
