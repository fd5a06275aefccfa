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

#include "ualg/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>

#include "ualg/catalog.hpp"
#include "ualg/closure.hpp"
#include "ualg/errors.hpp"
#include "ualg/nat_chain.hpp"
#include "ualg/ranks.hpp"
#include "ualg/suites.hpp"
#include "ualg/text_format.hpp"

namespace ualg {

namespace {

constexpr std::size_t kChainPrintLimit = 32;

// Bad command-line values; reported like other input errors.
class UsageError : public Error {
  using Error::Error;
};

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  if (text == "-") return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

ElementSet parse_set(const std::string& text, std::size_t size) {
  ElementSet s(size);
  for (std::size_t v : parse_list(text, "set")) {
    if (v >= size) {
      throw ValueOutOfRange("set member " + std::to_string(v) + " is not below size " +
                            std::to_string(size));
    }
    s.insert(static_cast<Element>(v));
  }
  return s;
}

FiniteAlgebra load(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    auto entry = find_catalog_entry(name);
    if (!entry) throw UsageError("no catalog algebra named '" + name + "'");
    return entry->algebra;
  }
  return load_algebra_file(source);
}

std::string chain_line(const std::vector<ElementSet>& chain) {
  std::string out = "chain";
  for (std::size_t i = 0; i < chain.size() && i < kChainPrintLimit; ++i) {
    out += i == 0 ? " " : " ⊂ ";
    out += to_string(chain[i]);
  }
  if (chain.size() > kChainPrintLimit) {
    out += " ⊂ ... (" + std::to_string(chain.size() - kChainPrintLimit) + " more)";
  }
  return out;
}

struct AlgebraArgs {
  std::string file;
  std::string set;
  std::optional<std::size_t> top;

  void attach(CLI::App* cmd, bool with_set = true) {
    cmd->add_option("FILE", file, "algebra file, or catalog:NAME")->required();
    if (with_set) cmd->add_option("--set", set, "comma-separated elements, '-' for none")->required();
    cmd->add_option("--top", top, "distinguished element (overrides the file)");
  }
};

struct Loaded {
  FiniteAlgebra algebra;
  Element top;
  ElementSet set;
};

Loaded resolve(const AlgebraArgs& args, bool with_set = true) {
  FiniteAlgebra a = load(args.file);
  std::optional<Element> top;
  if (args.top) {
    if (*args.top >= a.size()) {
      throw ValueOutOfRange("top " + std::to_string(*args.top) + " is not below size " +
                            std::to_string(a.size()));
    }
    top = static_cast<Element>(*args.top);
  }
  const Element t = a.resolve_top(top);
  ElementSet s = with_set ? parse_set(args.set, a.size()) : ElementSet(a.size());
  return Loaded{std::move(a), t, std::move(s)};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closure engine for finite algebras: semicongruences, clots, induction and deduction"};
  app.name("ualg");
  app.require_subcommand(1);

  AlgebraArgs ind_args, ded_args, clot_args, normal_args, semi_args, cong_args, rank_args;
  std::optional<std::size_t> ind_steps, ded_steps;
  bool ind_fix = false, ded_fix = false;
  auto* ind = app.add_subcommand("ind", "iterate top-induction");
  auto* ded = app.add_subcommand("ded", "iterate top-deduction");
  for (auto [cmd, args, steps, fix] : {std::tuple{ind, &ind_args, &ind_steps, &ind_fix},
                                       std::tuple{ded, &ded_args, &ded_steps, &ded_fix}}) {
    args->attach(cmd);
    auto* s = cmd->add_option("--steps", *steps, "number of steps (default 1)");
    auto* f = cmd->add_flag("--fixpoint", *fix, "iterate until stable");
    s->excludes(f);
  }
  auto* clot = app.add_subcommand("clot", "top-clot of a set");
  clot_args.attach(clot);
  auto* normal = app.add_subcommand("normal", "is the set the top-class of a congruence");
  normal_args.attach(normal);
  auto* semicong = app.add_subcommand("semicong", "semicongruence generated by I x {top}");
  semi_args.attach(semicong);
  auto* cong = app.add_subcommand("cong", "congruence generated by I x {top}");
  cong_args.attach(cong);

  auto* rank = app.add_subcommand("rank", "per-algebra induction or deduction rank");
  rank_args.attach(rank, false);
  std::string rank_mode;
  std::size_t rank_max_n = 8;
  rank->add_option("--mode", rank_mode, "ind or ded")
      ->required()
      ->check(CLI::IsMember({"ind", "ded"}));
  rank->add_option("--max-n", rank_max_n, "largest rank searched");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteConfig config;
  std::vector<std::string> extra_files;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--limit", config.limit, "catalog size bound");
  verify->add_option("--threads", config.threads, "worker threads, 0 = hardware");
  verify->add_option("--algebra", extra_files, "extra algebra file (repeatable)");

  auto* chain = app.add_subcommand("chain", "deduction chain in (N, *, 1)");
  std::string primes_text;
  std::size_t chain_depth = 4;
  std::optional<std::size_t> chain_m;
  chain->add_option("--primes", primes_text, "comma-separated primes")->required();
  chain->add_option("--depth", chain_depth, "number of deduction steps")->required();
  chain->add_option("--m", chain_m, "seed length (default: all primes)");

  auto* catalog = app.add_subcommand("catalog", "list catalog algebras or print one");
  std::string catalog_name;
  std::size_t catalog_limit = 4;
  catalog->add_option("NAME", catalog_name, "algebra to print");
  catalog->add_option("--limit", catalog_limit, "catalog size bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    for (auto [cmd, args, steps, fix, mode] :
         {std::tuple{ind, &ind_args, &ind_steps, &ind_fix, Mode::induction},
          std::tuple{ded, &ded_args, &ded_steps, &ded_fix, Mode::deduction}}) {
      if (!cmd->parsed()) continue;
      const Loaded l = resolve(*args);
      const ClosureReport rep =
          *fix ? iterate_to_fixpoint(l.algebra, l.top, l.set, mode)
               : iterate(l.algebra, l.top, l.set, mode, steps->value_or(1));
      out << to_string(rep.last()) << "\n" << chain_line(rep.chain) << "\n";
      if (rep.steps_to_fixpoint) {
        out << "fixpoint " << *rep.steps_to_fixpoint << "\n";
      } else {
        out << "fixpoint not reached in " << rep.chain.size() - 1 << " steps\n";
      }
      return kExitOk;
    }
    if (clot->parsed()) {
      const Loaded l = resolve(clot_args);
      out << to_string(clot_closure(l.algebra, l.top, l.set)) << "\n";
      return kExitOk;
    }
    if (normal->parsed()) {
      const Loaded l = resolve(normal_args);
      const NormalityResult r = is_top_normal(l.algebra, l.top, l.set);
      out << (r.normal ? "normal " : "not-normal ") << to_string(r.top_class) << "\n";
      return kExitOk;
    }
    if (semicong->parsed()) {
      const Loaded l = resolve(semi_args);
      out << dump(top_semicongruence(l.algebra, l.top, l.set));
      return kExitOk;
    }
    if (cong->parsed()) {
      const Loaded l = resolve(cong_args);
      out << dump(congruence_generated(l.algebra, pairs_to_top(l.set, l.top)));
      return kExitOk;
    }
    if (rank->parsed()) {
      const Loaded l = resolve(rank_args, false);
      const Mode mode = rank_mode == "ind" ? Mode::induction : Mode::deduction;
      const RankResult r = algebra_rank(l.algebra, l.top, mode, rank_max_n);
      out << "per-algebra rank " << rank_mode << " ";
      if (r.rank) {
        out << *r.rank;
      } else {
        out << "> " << rank_max_n;
      }
      out << " witness " << to_string(r.witness) << "\n" << chain_line(r.witness_chain) << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      for (const auto& f : extra_files) {
        FiniteAlgebra a = load(f);
        config.extra.push_back(CatalogEntry{std::move(a), Family::trivial, {}, {}, {}, {}, {}});
      }
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      bool ok = true;
      for (const auto& name : names) {
        const SuiteReport report = run_suite(name, config);
        out << render(report);
        ok = ok && report.passed();
      }
      return ok ? kExitOk : kExitPropertyFailure;
    }
    if (chain->parsed()) {
      std::vector<BigNat> primes;
      for (std::size_t p : parse_list(primes_text, "prime list")) primes.emplace_back(p);
      validate_primes(primes);
      const auto stages =
          nat_mult_deduction_chain(primes, chain_m.value_or(primes.size()), chain_depth);
      for (std::size_t n = 0; n < stages.size(); ++n) {
        out << "stage " << n << " " << to_string(stages[n]) << "\n";
      }
      return kExitOk;
    }
    if (catalog->parsed()) {
      if (!catalog_name.empty()) {
        auto entry = find_catalog_entry(catalog_name);
        if (!entry) throw UsageError("no catalog algebra named '" + catalog_name + "'");
        out << render_algebra(entry->algebra);
        return kExitOk;
      }
      for (const auto& e : build_catalog(catalog_limit)) {
        out << e.name() << " " << e.algebra.size() << " " << to_string(e.family) << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ualg
