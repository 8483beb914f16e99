// qchu -- finite-model checker for three-valued state spaces.
//
// Subcommands map onto the library: check-domain, quotient, properties,
// measure, specker, ortho, hilbert, symmetry, generate. Exit codes:
//   0  all checks pass
//   1  at least one check failed
//   2  input or usage error
//   3  only REPORT-mode discrepancies

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qchu/generators.hpp"
#include "qchu/io.hpp"
#include "qchu/measurement.hpp"
#include "qchu/ortho.hpp"
#include "qchu/report.hpp"
#include "qchu/symmetry.hpp"

using namespace qchu;

namespace {

int run_check_domain(const std::string& file, bool exhaustive) {
  const StateSpace S = load_state_space_file(file);
  Report report;
  report.title = "projective-domain check";
  report.add(S.poset.check_projective_domain(exhaustive));
  if (exhaustive) report.add(S.poset.check_axiom(AxiomId::JoinContinuity));
  std::cout << report.render();
  return report.exit_code();
}

int run_quotient(const std::string& file, const std::string& out) {
  const ChuSpace raw = load_chu_text(read_file(file));
  // note columns whose conjugate is not materialized in the input
  for (int t = 0; t < static_cast<int>(raw.tests.size()); ++t) {
    std::vector<TruthValue> bar(raw.preparations.size());
    for (std::size_t p = 0; p < raw.preparations.size(); ++p)
      bar[p] = truth_bar(raw.eval[p][t]);
    bool found = false;
    for (int u = 0; u < static_cast<int>(raw.tests.size()) && !found; ++u)
      found = raw.column(u) == bar;
    if (!found)
      std::cerr << "note: test " << raw.tests[t]
                << " has no conjugate column in the input\n";
  }
  const StateChu q = quotient(saturate(raw));
  StateSpace S;
  S.poset = q.states;
  write_file(out, save_state_space(S));
  return 0;
}

int run_properties(const std::string& file) {
  const StateSpace S = load_state_space_file(file);
  const Scheme& U = S.require_scheme();
  const Poset& p = S.poset;
  const std::vector<PropertyRecord> props = scheme_properties(S, U);

  std::cout << "== properties (ideal flag quantified over the scheme)\n";
  Report report;
  report.title = "per-property checks";
  auto set_names = [&](const StateSet& s) {
    std::string text = "{";
    bool first = true;
    for (int x : p.elements_of(s)) {
      if (!first) text += ",";
      text += p.name(x);
      first = false;
    }
    return text + "}";
  };
  bool conj2_ok = true;
  std::string conj2_witness;
  for (const PropertyRecord& l : props) {
    const MapFlags f = l.flags.quasi_classical
                           ? validate_measurement_map(S, theta_map(S, l), l, props)
                           : MapFlags{};
    const bool perfect = l.sigma_bar.has_value() && is_perfect(S, l);
    std::cout << l.id << "  sigma=" << p.name(l.sigma) << "  A=" << set_names(l.A)
              << "  Q=" << set_names(l.Q) << "  K=" << set_names(l.K)
              << "  testable=" << l.flags.testable
              << " quasi_classical=" << l.flags.quasi_classical
              << " minimal=" << l.flags.minimal << " first_kind=" << f.first_kind
              << " ideal=" << f.ideal << " perfect=" << perfect << "\n";
    report.add(theorem_min_eq_qcl(S, l, props));
    report.add(check_filter_meet_preservation(S, l));
    if (l.sigma_bar && is_discriminating(S, l.sigma, *l.sigma_bar) && !perfect &&
        conj2_ok) {
      conj2_ok = false;
      conj2_witness = l.id;
    }
  }
  CheckResult conj2 =
      conj2_ok ? CheckResult::pass(AxiomId::PerfectDiscriminating)
               : CheckResult::fail(AxiomId::PerfectDiscriminating, {conj2_witness},
                                   "discriminating test is not perfect");
  conj2.report_mode = true;
  report.add(conj2);
  std::cout << report.render();
  return report.exit_code();
}

int run_measure(const std::string& file, const std::string& sigma,
                const std::string& state) {
  const StateSpace S = load_state_space_file(file);
  const Scheme& U = S.require_scheme();
  const Poset& p = S.poset;
  const int si = p.index(sigma);
  const int st = p.index(state);
  if (si < 0) throw Error("unknown threshold state: " + sigma);
  if (st < 0) throw Error("unknown state: " + state);
  const int k = U.pair_with_first(si);
  if (k < 0) throw Error("no scheme pair with yes-threshold " + sigma);
  const PropertyRecord l = make_property(S, U.pairs[k].first, U.pairs[k].second);
  if (!l.Q.test(st)) throw Error("state " + state + " is not questionable for " + l.id);
  std::cout << "theta" << l.id << "(" << state << ") = "
            << p.name(measure_theta(S, l, st)) << "\n";
  return 0;
}

int run_specker(const std::string& file) {
  const StateSpace S = load_state_space_file(file);
  const Scheme& U = S.require_scheme();
  std::vector<PropertyRecord> props;
  for (const PropertyRecord& l : scheme_properties(S, U))
    if (l.flags.minimal) props.push_back(l);

  Report report;
  report.title = "pairwise vs joint compatibility sweep";
  const std::size_t n = props.size();
  const std::size_t max_size = n <= 16 ? 5 : 3;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> sweep = [&](std::size_t from) {
    if (chosen.size() >= 3) {
      std::vector<PropertyRecord> family;
      for (std::size_t i : chosen) family.push_back(props[i]);
      const CheckResult r = check_specker(S, family);
      if (r.verdict == Verdict::Fail) report.add(r);
    }
    if (chosen.size() == max_size) return;
    for (std::size_t i = from; i < n; ++i) {
      chosen.push_back(i);
      sweep(i + 1);
      chosen.pop_back();
    }
  };
  sweep(0);
  if (report.checks.empty()) {
    CheckResult ok = CheckResult::pass(
        AxiomId::Specker, "no discrepancy among " + std::to_string(n) +
                              " minimally disturbing properties");
    ok.report_mode = true;
    report.add(ok);
  }
  std::cout << report.render();
  return report.exit_code();
}

int run_ortho(const std::string& file) {
  const StateSpace S = load_state_space_file(file);
  const Scheme& U = S.require_scheme();
  Report report;
  report.title = "scheme validation and star laws";
  report.add(validate_scheme(S, U, true));
  report.add(check_star_laws(S, U));
  std::cout << report.render();
  return report.exit_code();
}

int run_hilbert(const std::string& file, const std::string& dot_out) {
  const StateSpace S = load_state_space_file(file);
  const Scheme& U = S.require_scheme();
  Report report;
  report.title = "closed-set lattice";
  const ClosedSetLattice L = build_closed_set_lattice(S, U);
  report.add(check_hilbert_lattice(L));
  report.add(check_kripke_frame(S, U));
  std::cout << "closed sets: " << L.closed.size() << "\n";
  std::cout << report.render();
  if (!dot_out.empty()) write_file(dot_out, dot_closed_set_lattice(L));
  return report.exit_code();
}

int run_symmetry(const std::string& file) {
  const Dictionary D = load_dictionary_file(file);
  Report report;
  report.title = "dictionary checks";
  const CheckResult morphism = check_chu_morphism(D);
  report.add(morphism);
  // the symmetry and preservation checks presuppose the morphism condition
  if (morphism.ok()) {
    report.add(check_symmetry(D));
    report.add(check_preservation(D));
    const ClosedSetLattice ls = build_closed_set_lattice(*D.source, D.source_scheme());
    const ClosedSetLattice lt = build_closed_set_lattice(*D.target, D.target_scheme());
    report.add(induced_lattice_map(D, ls, lt).verdict);
  }
  std::cout << report.render();
  return report.exit_code();
}

StateSpace parse_operand(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const int n = colon == std::string::npos ? 0 : std::stoi(spec.substr(colon + 1));
  if (family == "boolean") return gen_boolean(n);
  if (family == "mo") return gen_mo(n);
  if (family == "trivial") return gen_trivial();
  throw Error("unknown product operand: " + spec);
}

int run_generate(const std::string& family, int n, const std::string& left,
                 const std::string& right, std::uint64_t seed, int preps, int tests,
                 const std::string& out) {
  if (family == "random-chu") {
    write_file(out, save_chu(random_chu(seed, preps, tests)));
    return 0;
  }
  StateSpace S;
  if (family == "boolean")
    S = gen_boolean(n);
  else if (family == "mo")
    S = gen_mo(n);
  else if (family == "chain")
    S = gen_chain(n);
  else if (family == "n5")
    S = gen_n5();
  else if (family == "trivial")
    S = gen_trivial();
  else if (family == "product")
    S = gen_product(parse_operand(left), parse_operand(right));
  else
    throw Error("unknown family: " + family);
  write_file(out, save_state_space(S));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model checks for three-valued state spaces"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string out = "-";
  std::string dot_out;
  std::string sigma, state;
  bool exhaustive = false;
  std::string family, left, right;
  int n = 0, preps = 4, tests = 3;
  std::uint64_t seed = 1;

  CLI::App* check = app.add_subcommand("check-domain", "order axioms of a state space");
  check->add_option("file", file);
  check->add_flag("--exhaustive", exhaustive,
                  "verify the definitional forms of the finite-trivial axioms");

  CLI::App* quot = app.add_subcommand("quotient", "saturate and quotient a chu3 space");
  quot->add_option("file", file);
  quot->add_option("-o,--output", out);

  CLI::App* props = app.add_subcommand("properties", "per-test regions and flags");
  props->add_option("file", file);

  CLI::App* meas = app.add_subcommand("measure", "apply a minimally disturbing map");
  meas->add_option("file", file);
  meas->add_option("--sigma", sigma)->required();
  meas->add_option("--state", state)->required();

  CLI::App* spk = app.add_subcommand("specker", "pairwise vs joint compatibility sweep");
  spk->add_option("file", file);

  CLI::App* orth = app.add_subcommand("ortho", "scheme validation and star laws");
  orth->add_option("file", file);

  CLI::App* hil = app.add_subcommand("hilbert", "closed-set lattice checks");
  hil->add_option("file", file);
  hil->add_option("--dot", dot_out, "write the Hasse diagram as DOT");

  CLI::App* sym = app.add_subcommand("symmetry", "dictionary checks");
  sym->add_option("file", file);

  CLI::App* gen = app.add_subcommand("generate", "write a fixture");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", n);
  gen->add_option("--left", left);
  gen->add_option("--right", right);
  gen->add_option("--seed", seed);
  gen->add_option("--preps", preps);
  gen->add_option("--tests", tests);
  gen->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are input errors
  }

  try {
    if (check->parsed()) return run_check_domain(file, exhaustive);
    if (quot->parsed()) return run_quotient(file, out);
    if (props->parsed()) return run_properties(file);
    if (meas->parsed()) return run_measure(file, sigma, state);
    if (spk->parsed()) return run_specker(file);
    if (orth->parsed()) return run_ortho(file);
    if (hil->parsed()) return run_hilbert(file, dot_out);
    if (sym->parsed()) return run_symmetry(file);
    if (gen->parsed())
      return run_generate(family, n, left, right, seed, preps, tests, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
