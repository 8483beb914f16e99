// Writes the shipped fixture corpus: state spaces, one chu3 space, the mo(2)
// dictionaries, and the expected-verdict table. Verdicts are derived from the
// optimized checks and cross-checked against the definitional oracles before
// anything is written; a disagreement aborts.
//
// usage: qchu-make-fixtures [--check] DIR
//   --check  compare against the files already in DIR instead of writing;
//            exit 1 on any difference (used as a CI test)

#include <filesystem>
#include <iostream>
#include <map>

#include <json.hpp>

#include "oracles.hpp"
#include "qchu/generators.hpp"
#include "qchu/io.hpp"
#include "qchu/ortho.hpp"
#include "qchu/symmetry.hpp"

using namespace qchu;

namespace {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::TrivialFinite: return "trivial_finite";
  }
  return "?";
}

Dictionary mo2_dictionary(const std::shared_ptr<const StateSpace>& m,
                          std::map<std::string, std::string> perm) {
  perm["0"] = "0";
  const Poset& p = m->poset;
  Dictionary d;
  d.source = m;
  d.target = m;
  d.f_states.resize(p.size());
  std::vector<int> inverse(p.size());
  for (int s = 0; s < p.size(); ++s) {
    d.f_states[s] = p.index(perm.at(p.name(s)));
    inverse[d.f_states[s]] = s;
  }
  for (const auto& [sig, sigp] : m->scheme->pairs)
    d.f_tests.emplace_back(inverse[sig], inverse[sigp]);
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  bool check_mode = false;
  std::string dir;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--check")
      check_mode = true;
    else
      dir = arg;
  }
  if (dir.empty()) {
    std::cerr << "usage: qchu-make-fixtures [--check] DIR\n";
    return 2;
  }

  std::map<std::string, std::string> files;

  std::map<std::string, StateSpace> spaces;
  spaces["bool2.json"] = gen_boolean(2);
  spaces["bool3.json"] = gen_boolean(3);
  spaces["bool4.json"] = gen_boolean(4);
  spaces["mo1.json"] = gen_mo(1);
  spaces["mo2.json"] = gen_mo(2);
  spaces["mo3.json"] = gen_mo(3);
  spaces["chain3.json"] = gen_chain(3);
  spaces["n5.json"] = gen_n5();
  spaces["mo2xmo2.json"] = gen_product(gen_mo(2), gen_mo(2));
  spaces["bool2xbool2.json"] = gen_product(gen_boolean(2), gen_boolean(2));
  for (const auto& [name, space] : spaces) files[name] = save_state_space(space);

  files["random1.chu3.json"] = save_chu(random_chu(1, 4, 3));

  auto m = std::make_shared<StateSpace>(gen_mo(2));
  const Poset& p = m->poset;
  {
    Dictionary swap = mo2_dictionary(
        m, {{"a", "b"}, {"a'", "b'"}, {"b", "a"}, {"b'", "a'"}});
    files["dict_mo2_swap.json"] = save_dictionary(swap, "mo2.json", "mo2.json");

    Dictionary morphism = swap;
    morphism.f_tests = mo2_dictionary(m, {{"a", "a"}, {"a'", "a'"}, {"b", "b"},
                                          {"b'", "b'"}})
                           .f_tests;
    files["dict_corrupt_morphism.json"] =
        save_dictionary(morphism, "mo2.json", "mo2.json");

    Dictionary inject = mo2_dictionary(
        m, {{"a", "a"}, {"a'", "a'"}, {"b", "b"}, {"b'", "b'"}});
    inject.f_states[p.index("a'")] = p.index("a");
    files["dict_corrupt_injective.json"] =
        save_dictionary(inject, "mo2.json", "mo2.json");

    Dictionary surj = mo2_dictionary(
        m, {{"a", "a"}, {"a'", "a'"}, {"b", "b"}, {"b'", "b'"}});
    const int k_b = m->scheme->find_pair(p.index("b"), p.index("b'"));
    const int k_a = m->scheme->find_pair(p.index("a"), p.index("a'"));
    surj.f_tests[k_b] = surj.f_tests[k_a];
    files["dict_corrupt_surjective.json"] =
        save_dictionary(surj, "mo2.json", "mo2.json");

    Dictionary bar = mo2_dictionary(
        m, {{"a", "a"}, {"a'", "a'"}, {"b", "b"}, {"b'", "b'"}});
    bar.f_tests[k_a] = bar_pair(bar.f_tests[k_a]);
    files["dict_corrupt_bar.json"] = save_dictionary(bar, "mo2.json", "mo2.json");
  }

  // expected verdicts, cross-checked against the oracles where a twin exists
  nlohmann::json verdicts;
  const std::vector<AxiomId> twins = {
      AxiomId::BoundedComplete,  AxiomId::StrongAtomicity,
      AxiomId::RelativeComplement, AxiomId::LowerSemimodular,
      AxiomId::CondUpperSemimodular, AxiomId::CondModular,
      AxiomId::Atomistic,        AxiomId::NoType2};
  for (const auto& [name, space] : spaces) {
    nlohmann::json table;
    if (space.poset.size() <= 12) {
      for (AxiomId id : twins) {
        const CheckResult got = space.poset.check_axiom(id);
        const bool expect = oracle::check_axiom(space.poset, id);
        if ((got.verdict == Verdict::Pass) != expect) {
          std::cerr << "oracle disagreement on " << name << " / " << axiom_name(id)
                    << "\n";
          return 2;
        }
        table[axiom_name(id)] = verdict_name(got.verdict);
        if (got.verdict == Verdict::Fail) {
          nlohmann::json w = nlohmann::json::array();
          for (const std::string& x : got.witness) w.push_back(x);
          table[axiom_name(id) + ".witness"] = w;
          table[axiom_name(id) + ".derived"] = "definitional oracle scan";
        }
      }
    } else {
      for (AxiomId id : twins)
        table[axiom_name(id)] = verdict_name(space.poset.check_axiom(id).verdict);
      table["note"] = "oracle sweep skipped above 12 elements";
    }
    if (space.scheme) {
      for (const CheckResult& c : validate_scheme(space, *space.scheme, true))
        table[axiom_name(c.id)] = verdict_name(c.verdict);
      for (const CheckResult& c : check_star_laws(space, *space.scheme))
        table[axiom_name(c.id)] = verdict_name(c.verdict);
    }
    verdicts[name] = std::move(table);
  }
  files["expected_verdicts.json"] = verdicts.dump(2) + "\n";

  const std::filesystem::path base(dir);
  if (!check_mode) std::filesystem::create_directories(base);
  int rc = 0;
  for (const auto& [name, text] : files) {
    const std::string path = (base / name).string();
    if (check_mode) {
      std::string existing;
      try {
        existing = read_file(path);
      } catch (const Error&) {
        std::cerr << "missing fixture: " << name << "\n";
        rc = 1;
        continue;
      }
      if (existing != text) {
        std::cerr << "stale fixture: " << name << "\n";
        rc = 1;
      }
    } else {
      write_file(path, text);
    }
  }
  if (!check_mode) std::cout << "wrote " << files.size() << " fixtures to " << dir << "\n";
  return rc;
}
