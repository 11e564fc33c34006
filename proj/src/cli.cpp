#include "hiso/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hiso/corpus.hpp"
#include "hiso/half_groups.hpp"
#include "hiso/halfiso.hpp"
#include "hiso/infinite.hpp"
#include "hiso/principal.hpp"
#include "hiso/report.hpp"
#include "hiso/table_io.hpp"

namespace hiso {
namespace {

// Environment override for the order ceiling of exhaustive searches.
int brute_cap() {
  const char* raw = std::getenv("HISO_BRUTE_CAP");
  if (raw == nullptr) return 10;
  std::string s(raw);
  if (s.empty()) throw std::invalid_argument("HISO_BRUTE_CAP is empty");
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("HISO_BRUTE_CAP must be a positive integer, got '" + s + "'");
  }
  long v = 0;
  try {
    v = std::stol(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("HISO_BRUTE_CAP out of range: '" + s + "'");
  }
  if (v < 1 || v > 1000)
    throw std::invalid_argument("HISO_BRUTE_CAP must be between 1 and 1000, got '" + s + "'");
  return static_cast<int>(v);
}

void require_same_order(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("tables have different orders (" +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
}

std::vector<std::pair<int, int>> support_pairs(const FinSuppElement& e) {
  return {e.support.begin(), e.support.end()};
}

std::string mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::All: return "all";
    case SearchMode::First: return "first";
    case SearchMode::SpecialOnly: return "special_only";
  }
  return "?";
}

int cmd_check(const std::string& table_arg, Report& rep) {
  CayleyTable t = resolve_table(table_arg);
  AlgebraClass cls = classify(t);
  rep.add_text("table", table_arg);
  rep.add_int("order", t.order());
  rep.add_text("class", to_string(cls.kind));
  if (cls.identity) rep.add_int("identity", *cls.identity);
  rep.add_bool("associative", is_associative(t));
  bool comm = is_commutative(t);
  rep.add_bool("commutative", comm);
  rep.add_int("K", static_cast<int>(commuting_set(t).size()));
  if (!comm) {
    PrincipalCount pc = principal_count(t);
    rep.add_int("log2_M", static_cast<int>(pc.log2_M));
    rep.add_pow2("M", pc.log2_M);
    if (cls.kind != AlgebraKind::Groupoid) {
      rep.add_int("r", pc.r);
      rep.add_int("log2_N", static_cast<int>(pc.log2_N));
      rep.add_pow2("N", pc.log2_N);
    }
  }
  return 0;
}

int cmd_halfiso(const std::string& a_arg, const std::string& b_arg,
                const std::string& perm_arg, SearchMode mode, Report& rep) {
  CayleyTable a = resolve_table(a_arg);
  CayleyTable b = resolve_table(b_arg);
  require_same_order(a, b);
  rep.add_text("a", a_arg);
  rep.add_text("b", b_arg);
  if (!perm_arg.empty()) {
    Permutation f = parse_permutation(perm_arg, a.order());
    rep.add_perm("perm", f);
    HalfIsoVerdict v = specialness(a, b, f);
    rep.add_bool("half_iso", v.is_half_iso);
    rep.add_bool("special", v.is_special);
    rep.add_bool("isomorphism", v.is_isomorphism);
    rep.add_bool("anti_isomorphism", v.is_anti_isomorphism);
    if (v.nonspecial_witness)
      rep.add_pair("witness", *v.nonspecial_witness);
    return v.is_half_iso ? 0 : 1;
  }
  rep.add_text("mode", mode_name(mode));
  std::vector<Permutation> found = search_half_isomorphisms(a, b, mode, brute_cap());
  rep.add_int("count", static_cast<int>(found.size()));
  for (std::size_t i = 0; i < found.size(); ++i)
    rep.add_perm("perm_" + std::to_string(i + 1), found[i]);
  return found.empty() ? 1 : 0;
}

int cmd_half_group(const std::string& table_arg, Report& rep) {
  CayleyTable t = resolve_table(table_arg);
  HalfAutomorphismGroups g = half_groups(t, brute_cap());
  rep.add_text("table", table_arg);
  rep.add_int("order", t.order());
  rep.add_int("aut", static_cast<int>(g.aut.size()));
  rep.add_int("ant", static_cast<int>(g.ant.size()));
  rep.add_int("half_s", static_cast<int>(g.half_s.size()));
  rep.add_int("half", static_cast<int>(g.half.size()));
  rep.add_int("index", g.index_mi);
  return 0;
}

int cmd_principal(const std::string& table_arg, bool count_only,
                  std::optional<long long> max_tables, bool with_mi,
                  Report& rep, std::ostream& err) {
  CayleyTable t = resolve_table(table_arg);
  AlgebraClass cls = classify(t);
  if (cls.kind == AlgebraKind::Groupoid)
    err << "warning: input is not a quasigroup; class data is informational\n";
  rep.add_text("table", table_arg);
  rep.add_int("order", t.order());
  rep.add_int("K", static_cast<int>(commuting_set(t).size()));
  PrincipalCount pc = principal_count(t);
  rep.add_int("log2_M", static_cast<int>(pc.log2_M));
  rep.add_pow2("M", pc.log2_M);
  rep.add_int("r", pc.r);
  rep.add_int("log2_N", static_cast<int>(pc.log2_N));
  rep.add_pow2("N", pc.log2_N);
  if (!count_only) {
    std::vector<CayleyTable> tables =
        enumerate_principal_quasigroups(t, max_tables);
    rep.add_int("tables", static_cast<int>(tables.size()));
    for (std::size_t i = 0; i < tables.size(); ++i)
      rep.add_table("table_" + std::to_string(i + 1), tables[i]);
  }
  if (with_mi) {
    std::vector<CayleyTable> family = enumerate_isomorphic_family(t, brute_cap());
    rep.add_int("mi_count", static_cast<int>(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i)
      rep.add_table("mi_" + std::to_string(i + 1), family[i]);
  }
  return 0;
}

int cmd_hrelated(const std::string& a_arg, const std::string& b_arg, Report& rep) {
  CayleyTable a = resolve_table(a_arg);
  CayleyTable b = resolve_table(b_arg);
  rep.add_text("a", a_arg);
  rep.add_text("b", b_arg);
  std::optional<Permutation> f = find_special_half_isomorphism(a, b, brute_cap());
  rep.add_bool("related", f.has_value());
  if (f) rep.add_perm("witness", *f);
  return f ? 0 : 1;
}

int cmd_infinite_demo(const std::string& a_arg, const std::string& b_arg,
                      const std::string& perm_arg, int samples,
                      std::uint64_t seed, Report& rep) {
  CayleyTable a = resolve_table(a_arg);
  CayleyTable b = resolve_table(b_arg);
  require_same_order(a, b);
  if (classify(a).kind != AlgebraKind::Loop)
    throw std::invalid_argument("the star table must be a loop");
  if (classify(b).kind != AlgebraKind::Loop)
    throw std::invalid_argument("the dot table must be a loop");
  rep.add_text("star", a_arg);
  rep.add_text("dot", b_arg);
  rep.add_int("order", a.order());
  Permutation f = Permutation::identity(a.order());
  if (!perm_arg.empty()) {
    f = parse_permutation(perm_arg, a.order());
  } else {
    bool found = false;
    for (const Permutation& cand :
         search_half_isomorphisms(a, b, SearchMode::All, brute_cap())) {
      if (!specialness(a, b, cand).is_special) {
        f = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      rep.add_bool("nonspecial_halfiso", false);
      return 1;
    }
  }
  LoopPair pair(a, b, f);
  rep.add_perm("f", pair.f());
  rep.add_pair("witness", pair.witness());
  rep.add_int("samples", samples);
  rep.add_int("seed", static_cast<int>(seed));
  std::optional<std::pair<FinSuppElement, FinSuppElement>> bad =
      find_half_automorphism_violation(pair, samples, seed);
  rep.add_bool("half_automorphism_ok", !bad.has_value());
  if (bad) {
    rep.add_support("violation_a", support_pairs(bad->first));
    rep.add_support("violation_b", support_pairs(bad->second));
  }
  auto [wa, wb] = nonspecial_witness_infinite(pair);
  rep.add_bool("inverse_violation_ok", true);
  rep.add_support("witness_a", support_pairs(wa));
  rep.add_support("witness_b", support_pairs(wb));
  return 0;
}

}  // namespace

CayleyTable resolve_table(const std::string& arg) {
  if (arg.rfind("./", 0) == 0 || (!arg.empty() && arg[0] == '/'))
    return load_table(arg);
  if (is_builtin_key(arg)) return builtin(arg);
  return load_table(arg);
}

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Half-isomorphism analysis for finite Cayley tables"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the report as JSON");

  std::string check_table;
  CLI::App* check = app.add_subcommand("check", "classify a table and count its families");
  check->add_option("table", check_table, "corpus key or file path")->required();
  check->add_flag("--json", json_mode, "emit the report as JSON");

  std::string hi_a, hi_b, hi_perm;
  bool hi_all = false, hi_first = false, hi_special = false;
  CLI::App* halfiso = app.add_subcommand("halfiso", "test a mapping or search for mappings");
  halfiso->add_option("a", hi_a, "domain table")->required();
  halfiso->add_option("b", hi_b, "codomain table")->required();
  CLI::Option* perm_opt = halfiso->add_option("--perm", hi_perm, "mapping to test (images or cycles)");
  CLI::Option* all_opt = halfiso->add_flag("--all", hi_all, "list every mapping (default)");
  CLI::Option* first_opt = halfiso->add_flag("--first", hi_first, "stop at the first mapping");
  CLI::Option* special_opt = halfiso->add_flag("--special-only", hi_special, "list special mappings only");
  perm_opt->excludes(all_opt)->excludes(first_opt)->excludes(special_opt);
  all_opt->excludes(first_opt)->excludes(special_opt);
  first_opt->excludes(special_opt);
  halfiso->add_flag("--json", json_mode, "emit the report as JSON");

  std::string hg_table;
  CLI::App* half_group = app.add_subcommand("half-group", "count the mapping groups of one table");
  half_group->add_option("table", hg_table, "corpus key or file path")->required();
  half_group->add_flag("--json", json_mode, "emit the report as JSON");

  std::string pr_table;
  bool pr_count_only = false, pr_mi = false;
  long long pr_max = -1;
  CLI::App* principal = app.add_subcommand("principal", "enumerate the principal family of a table");
  principal->add_option("table", pr_table, "corpus key or file path")->required();
  principal->add_flag("--count-only", pr_count_only, "print counts without tables");
  principal->add_option("--max", pr_max, "cap on enumerated tables")->check(CLI::PositiveNumber);
  principal->add_flag("--mi", pr_mi, "also list the isomorphic members");
  principal->add_flag("--json", json_mode, "emit the report as JSON");

  std::string hr_a, hr_b;
  CLI::App* hrelated = app.add_subcommand("hrelated", "decide whether a special mapping exists");
  hrelated->add_option("a", hr_a, "domain table")->required();
  hrelated->add_option("b", hr_b, "codomain table")->required();
  hrelated->add_flag("--json", json_mode, "emit the report as JSON");

  std::string inf_a, inf_b, inf_perm;
  int inf_samples = 10000;
  std::uint64_t inf_seed = 1;
  CLI::App* infinite = app.add_subcommand("infinite-demo", "sequence-loop construction over a loop pair");
  infinite->add_option("a", inf_a, "loop giving the odd coordinates")->required();
  infinite->add_option("b", inf_b, "loop giving the even coordinates")->required();
  infinite->add_option("--perm", inf_perm, "non-special mapping to lift (default: search)");
  infinite->add_option("--samples", inf_samples, "random products to test")->check(CLI::PositiveNumber);
  infinite->add_option("--seed", inf_seed, "generator seed");
  infinite->add_flag("--json", json_mode, "emit the report as JSON");

  std::vector<std::string> argv_store;
  argv_store.push_back("hiso");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report rep;
  int code = 0;
  try {
    brute_cap();  // reject a malformed override before any work
    if (*check) {
      code = cmd_check(check_table, rep);
    } else if (*halfiso) {
      SearchMode mode = SearchMode::All;
      if (hi_first) mode = SearchMode::First;
      if (hi_special) mode = SearchMode::SpecialOnly;
      code = cmd_halfiso(hi_a, hi_b, hi_perm, mode, rep);
    } else if (*half_group) {
      code = cmd_half_group(hg_table, rep);
    } else if (*principal) {
      std::optional<long long> max_tables;
      if (pr_max > 0) max_tables = pr_max;
      code = cmd_principal(pr_table, pr_count_only, max_tables, pr_mi, rep, err);
    } else if (*hrelated) {
      code = cmd_hrelated(hr_a, hr_b, rep);
    } else if (*infinite) {
      code = cmd_infinite_demo(inf_a, inf_b, inf_perm, inf_samples, inf_seed, rep);
    }
  } catch (const cap_exceeded_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const table_parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  rep.print(out, json_mode);
  return code;
}

}  // namespace hiso
