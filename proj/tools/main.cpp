// Batch front end over the workbench: axiom-class checks, filter theory,
// Stone representations, relational verification and transforms, and
// bounded representation search.  Exit codes: 0 pass/found/true,
// 1 fail/exhausted/false, 2 usage or parse error, 3 resource abort,
// 4 precondition violation.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "impalg/algebra.hpp"
#include "impalg/algebra_io.hpp"
#include "impalg/filters.hpp"
#include "impalg/relmodel.hpp"
#include "impalg/relmodel_io.hpp"
#include "impalg/search.hpp"
#include "impalg/stone.hpp"

namespace {

using namespace impalg;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAborted = 3;
constexpr int kExitPrecondition = 4;

int exit_for(const Error& e) { return e.code() == errc::parse ? kExitUsage : kExitPrecondition; }

bool terse(const std::string& format) { return format == "terse"; }

std::string witness_names(const FiniteAlgebra& alg, const std::vector<int>& witness) {
  std::string out = "(";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ",";
    out += alg.name(witness[i]);
  }
  out += ")";
  return out;
}

ClassId parse_class(const std::string& token) {
  const auto cls = class_from_string(token);
  if (!cls) fail(errc::parse, "unknown class '" + token + "'");
  return *cls;
}

Filter parse_filter_flag(const FiniteAlgebra& alg, const std::string& csv) {
  Filter f;
  size_t start = 0;
  while (start <= csv.size()) {
    const size_t comma = csv.find(',', start);
    const std::string name =
        csv.substr(start, comma == std::string::npos ? csv.size() - start : comma - start);
    if (!name.empty()) {
      const auto idx = alg.find(name);
      if (!idx) fail(errc::parse, "unknown element name '" + name + "'");
      f.members.push_back(*idx);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::sort(f.members.begin(), f.members.end());
  f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
  return f;
}

int element_index(const FiniteAlgebra& alg, const std::string& name) {
  const auto idx = alg.find(name);
  if (!idx) fail(errc::parse, "unknown element name '" + name + "'");
  return *idx;
}

// --- subcommand bodies -----------------------------------------------------

int run_check(const std::string& file, const std::string& cls_token, const std::string& format) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const ClassReport rep = check_class(alg, parse_class(cls_token));
  if (terse(format)) {
    std::cout << (rep.passed ? "passed" : "failed") << "\n";
  } else {
    std::cout << "class " << to_string(rep.cls) << "\n";
    std::cout << (rep.passed ? "passed" : "failed") << "\n";
    long long total = 0;
    for (const Violation& v : rep.violations) {
      std::cout << "violation " << v.axiom << " " << witness_names(alg, v.witness) << " count "
                << v.count << "\n";
      total += v.count;
    }
    if (!rep.passed) std::cout << "total " << total << "\n";
  }
  return rep.passed ? kExitPass : kExitFail;
}

int run_order(const std::string& file) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const DerivedOrder ord = derived_order(alg);
  std::cout << "one " << alg.name(ord.one) << "\n";
  for (int a = 0; a < ord.n; ++a)
    for (int b = 0; b < ord.n; ++b)
      if (ord.le(a, b)) std::cout << "leq " << alg.name(a) << " " << alg.name(b) << "\n";
  std::cout << "join\n";
  for (int a = 0; a < ord.n; ++a) {
    std::cout << alg.name(a) << ":";
    for (int b = 0; b < ord.n; ++b) std::cout << " " << alg.name(ord.plus(a, b));
    std::cout << "\n";
  }
  return kExitPass;
}

int run_reduct(const std::string& file, const std::string& target_token) {
  const FiniteAlgebra alg = read_algebra_file(file);
  std::cout << format_algebra(reduct(alg, parse_class(target_token)));
  return kExitPass;
}

int run_filters(const std::string& file, const std::string& kind_token) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const auto kind = filter_kind_from_string(kind_token);
  if (!kind) fail(errc::parse, "unknown filter kind '" + kind_token + "'");
  for (const Filter& f : enumerate_filters(alg, *kind))
    std::cout << format_filter(alg, f) << "\n";
  return kExitPass;
}

int run_filter_gen(const std::string& file, const std::string& filter_csv, const std::string& elem) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const Filter f = parse_filter_flag(alg, filter_csv);
  std::cout << format_filter(alg, generated_filter(alg, f, element_index(alg, elem))) << "\n";
  return kExitPass;
}

int run_prime_extend(const std::string& file, const std::string& filter_csv, const std::string& avoid) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const Filter f = parse_filter_flag(alg, filter_csv);
  std::cout << format_filter(alg, prime_extend(alg, f, element_index(alg, avoid))) << "\n";
  return kExitPass;
}

int run_prime_discriminate(const std::string& file, const std::string& filter_csv,
                           const std::string& a, const std::string& b) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const Filter f = parse_filter_flag(alg, filter_csv);
  std::cout << format_filter(alg,
                             prime_discriminate(alg, f, element_index(alg, a), element_index(alg, b)))
            << "\n";
  return kExitPass;
}

int run_stone(const std::string& file, bool verify, const std::string& format) {
  const FiniteAlgebra alg = read_algebra_file(file);
  const StoneRepresentation sr = stone_represent(alg);
  if (!terse(format)) {
    std::cout << "base " << sr.base.size() << "\n";
    for (size_t i = 0; i < sr.base.size(); ++i)
      std::cout << "filter " << i << " = " << format_filter(alg, sr.base[i]) << "\n";
    for (int a = 0; a < alg.size(); ++a) {
      std::cout << "map " << alg.name(a) << " = {";
      const auto& pos = sr.map[static_cast<size_t>(a)];
      for (size_t i = 0; i < pos.size(); ++i) std::cout << (i ? ", " : "") << pos[i];
      std::cout << "}\n";
    }
  }
  if (verify) {
    // stone_represent already validates the construction; re-check the
    // relational liftings as well before reporting.
    const RepVerdict rel = verify_representation(alg, relationalize(alg, sr, RepMode::relative));
    const RepVerdict abs = verify_representation(alg, relationalize(alg, sr, RepMode::absolute));
    const bool ok = rel.ok && abs.ok;
    if (terse(format))
      std::cout << (ok ? "pass" : "fail") << "\n";
    else
      std::cout << "verify " << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitPass : kExitFail;
  }
  return kExitPass;
}

int run_verify_rep(const std::string& algfile, const std::string& repfile,
                   const std::string& mode_override, const std::string& profile_override,
                   const std::string& format) {
  const FiniteAlgebra alg = read_algebra_file(algfile);
  Representation rep = read_representation_file(repfile, alg);
  if (!mode_override.empty()) {
    const auto mode = mode_from_string(mode_override);
    if (!mode) fail(errc::parse, "unknown mode '" + mode_override + "'");
    rep.mode = *mode;
  }
  if (!profile_override.empty()) rep.profile = profile_from_string(profile_override);
  const RepVerdict v = verify_representation(alg, rep);
  if (terse(format)) {
    std::cout << (v.ok ? "pass" : "fail") << "\n";
  } else {
    std::cout << (v.ok ? "pass" : "fail") << "\n";
    if (!v.ok) std::cout << "violation " << v.law << " " << v.witness << "\n";
  }
  return v.ok ? kExitPass : kExitFail;
}

int run_quotient(const std::string& algfile, const std::string& repfile) {
  const FiniteAlgebra alg = read_algebra_file(algfile);
  const Representation rep = read_representation_file(repfile, alg);
  std::cout << format_representation(alg, quotient_by_identity(alg, rep));
  return kExitPass;
}

int run_empty_zero(const std::string& algfile, const std::string& repfile) {
  const FiniteAlgebra alg = read_algebra_file(algfile);
  const Representation rep = read_representation_file(repfile, alg);
  std::cout << format_representation(alg, empty_zero(alg, rep));
  return kExitPass;
}

int run_weakening_check(const std::string& posetfile, const std::string& rel,
                        const std::string& format) {
  const Poset p = read_poset_file(posetfile);
  const bool ok = weakening_check(p, parse_pair_list(rel));
  std::cout << (ok ? "true" : "false") << "\n";
  (void)format;
  return ok ? kExitPass : kExitFail;
}

int run_weakening_arrow(const std::string& posetfile, const std::string& r, const std::string& s) {
  const Poset p = read_poset_file(posetfile);
  const PairSet out = weakening_arrow(p, parse_pair_list(r), parse_pair_list(s));
  std::cout << "rel";
  if (!out.empty()) std::cout << " " << format_pair_list(out);
  std::cout << "\n";
  return kExitPass;
}

int run_search_rep(const std::string& file, int max_base, const std::string& mode_token,
                   const std::string& profile_csv, bool up_to_iso,
                   std::optional<long long> node_limit, const std::string& format) {
  const FiniteAlgebra alg = read_algebra_file(file);
  SearchConfig cfg;
  cfg.max_base = max_base;
  const auto mode = mode_from_string(mode_token);
  if (!mode) fail(errc::parse, "unknown mode '" + mode_token + "'");
  cfg.mode = *mode;
  if (profile_csv.empty())
    cfg.profile = Profile{true, alg.has_compose(), false, false};
  else
    cfg.profile = profile_from_string(profile_csv);
  cfg.up_to_iso = up_to_iso;
  cfg.node_limit = node_limit;

  const SearchOutcome outcome = search_representation(alg, cfg);
  switch (outcome.kind) {
    case SearchOutcome::Kind::found:
      if (terse(format))
        std::cout << "found\n";
      else
        std::cout << format_representation(alg, *outcome.rep);
      return kExitPass;
    case SearchOutcome::Kind::exhausted:
      if (terse(format))
        std::cout << "exhausted\n";
      else
        std::cout << "exhausted " << outcome.bound << "\n";
      return kExitFail;
    case SearchOutcome::Kind::aborted:
      if (terse(format))
        std::cout << "aborted\n";
      else
        std::cout << "aborted " << outcome.node_limit << "\n";
      return kExitAborted;
  }
  return kExitPrecondition;
}

}  // namespace

const char* kFormatHelp = R"(File formats ('#' starts a comment, tokens are whitespace-separated):

  algebra file:
    elements <name>+
    arrow                     followed by one row per element, in order:
    <name>: <name>{n}         row r, column c gives r -> c
    compose                   optional section, same shape
    const one|id|zero <name>  optional, each at most once

  representation file:
    base <n>
    top (i,j) (k,l) ...
    map <name> = (i,j) ...    one line per element
    mode absolute|relative    optional, defaults to relative
    profile arrow,compose,strict-identity,zero-empty
                              optional, defaults to arrow

  poset file:
    base <n>
    leq (i,j) ...             reflexive pairs are implied

Exit codes: 0 pass/found/true, 1 fail/exhausted/false, 2 usage or parse
error, 3 resource abort, 4 precondition violation.)";

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for implication algebras and implication semigroups"};
  app.require_subcommand(1);
  app.footer(kFormatHelp);

  std::string algfile, repfile, posetfile;
  std::string cls_token = "ia", target_token, kind_token = "all";
  std::string filter_csv, elem, avoid, elem_a, elem_b;
  std::string format = "plain", mode_token = "relative", profile_csv, rel_arg, r_arg, s_arg;
  std::string mode_override, profile_override;
  bool verify = false, up_to_iso = false;
  int max_base = 2;
  long long node_limit_raw = -1;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: plain or terse")
        ->check(CLI::IsMember({"plain", "terse"}));
  };

  auto* check = app.add_subcommand("check", "Check an algebra against an axiom class");
  check->add_option("algfile", algfile)->required();
  check->add_option("--class", cls_token, "ia, positive-ia, isg, imonoid, or bsg")->required();
  add_format(check);

  auto* order = app.add_subcommand("order", "Print the derived order and join table");
  order->add_option("algfile", algfile)->required();

  auto* red = app.add_subcommand("reduct", "Project the algebra onto a smaller signature");
  red->add_option("algfile", algfile)->required();
  red->add_option("--target", target_token, "Target class")->required();

  auto* filters_cmd = app.add_subcommand("filters", "Enumerate implicative filters");
  filters_cmd->add_option("algfile", algfile)->required();
  filters_cmd->add_option("--kind", kind_token, "all, proper, prime, or irreducible");

  auto* fgen = app.add_subcommand("filter-gen", "Least filter containing a filter and an element");
  fgen->add_option("algfile", algfile)->required();
  fgen->add_option("--filter", filter_csv, "Comma-separated member names")->required();
  fgen->add_option("--element", elem)->required();

  auto* pext = app.add_subcommand("prime-extend", "Prime filter containing F that omits an element");
  pext->add_option("algfile", algfile)->required();
  pext->add_option("--filter", filter_csv)->required();
  pext->add_option("--avoid", avoid)->required();

  auto* pdis = app.add_subcommand("prime-discriminate",
                                  "Prime filter containing F with a inside and b outside");
  pdis->add_option("algfile", algfile)->required();
  pdis->add_option("--filter", filter_csv)->required();
  pdis->add_option("--a", elem_a)->required();
  pdis->add_option("--b", elem_b)->required();

  auto* stone = app.add_subcommand("stone", "Set representation over the prime filters");
  stone->add_option("algfile", algfile)->required();
  stone->add_flag("--verify", verify, "Re-check the representation invariants");
  add_format(stone);

  auto* vrep = app.add_subcommand("verify-rep", "Verify a relational representation");
  vrep->add_option("algfile", algfile)->required();
  vrep->add_option("repfile", repfile)->required();
  vrep->add_option("--mode", mode_override, "Override the file's mode");
  vrep->add_option("--profile", profile_override, "Override the file's profile");
  add_format(vrep);

  auto* quot = app.add_subcommand("quotient-identity", "Collapse the base by h(1')");
  quot->add_option("algfile", algfile)->required();
  quot->add_option("repfile", repfile)->required();

  auto* ez = app.add_subcommand("empty-zero", "Rebuild the representation with h(0) empty");
  ez->add_option("algfile", algfile)->required();
  ez->add_option("repfile", repfile)->required();

  auto* wcheck = app.add_subcommand("weakening-check", "Check leq;R;leq inside R");
  wcheck->add_option("posetfile", posetfile)->required();
  wcheck->add_option("--rel", rel_arg, "Pair list, e.g. \"(0,1) (1,2)\"")->required();
  add_format(wcheck);

  auto* warrow = app.add_subcommand("weakening-arrow", "Arrow of two weakening relations");
  warrow->add_option("posetfile", posetfile)->required();
  warrow->add_option("--r", r_arg)->required();
  warrow->add_option("--s", s_arg)->required();

  auto* srep = app.add_subcommand("search-rep", "Bounded search for a representation");
  srep->add_option("algfile", algfile)->required();
  srep->add_option("--max-base", max_base, "Largest base size to try")->required();
  srep->add_option("--mode", mode_token, "absolute or relative");
  srep->add_option("--profile", profile_csv, "Laws to enforce; defaults to the algebra's signature");
  srep->add_flag("--up-to-iso", up_to_iso, "Prune tops by point-permutation symmetry");
  srep->add_option("--node-limit", node_limit_raw, "Abort after this many search nodes");
  add_format(srep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(algfile, cls_token, format);
    if (order->parsed()) return run_order(algfile);
    if (red->parsed()) return run_reduct(algfile, target_token);
    if (filters_cmd->parsed()) return run_filters(algfile, kind_token);
    if (fgen->parsed()) return run_filter_gen(algfile, filter_csv, elem);
    if (pext->parsed()) return run_prime_extend(algfile, filter_csv, avoid);
    if (pdis->parsed()) return run_prime_discriminate(algfile, filter_csv, elem_a, elem_b);
    if (stone->parsed()) return run_stone(algfile, verify, format);
    if (vrep->parsed())
      return run_verify_rep(algfile, repfile, mode_override, profile_override, format);
    if (quot->parsed()) return run_quotient(algfile, repfile);
    if (ez->parsed()) return run_empty_zero(algfile, repfile);
    if (wcheck->parsed()) return run_weakening_check(posetfile, rel_arg, format);
    if (warrow->parsed()) return run_weakening_arrow(posetfile, r_arg, s_arg);
    if (srep->parsed()) {
      std::optional<long long> node_limit;
      if (srep->count("--node-limit")) node_limit = node_limit_raw;
      return run_search_rep(algfile, max_base, mode_token, profile_csv, up_to_iso, node_limit,
                            format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitUsage;
}
