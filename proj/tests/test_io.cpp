#include <doctest.h>

#include <filesystem>
#include <map>
#include <fstream>

#include "qchu/generators.hpp"
#include "qchu/io.hpp"
#include "qchu/report.hpp"

using namespace qchu;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("state_space round trip is canonical") {
  const StateSpace m = gen_mo(2);
  const std::string text = save_state_space(m);
  const StateSpace loaded = load_state_space_text(text);
  CHECK(save_state_space(loaded) == text);
  CHECK(loaded.poset.size() == m.poset.size());
  REQUIRE(loaded.scheme.has_value());
  CHECK(loaded.scheme->pairs.size() == 4);

  const StateSpace b3 = gen_boolean(3);
  const std::string bt = save_state_space(b3);
  CHECK(save_state_space(load_state_space_text(bt)) == bt);
}

TEST_CASE("chu3 round trip") {
  const ChuSpace c = random_chu(5, 4, 3);
  const std::string text = save_chu(c);
  CHECK(load_chu_text(text) == c);
  CHECK(save_chu(load_chu_text(text)) == text);
}

TEST_CASE("schema errors carry JSON pointers") {
  try {
    load_chu_text(R"({"kind":"chu3","preparations":["p"],"tests":["t"],
                      "evaluation":[["X"]]})");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer == "/evaluation/0/0");
  }
  CHECK_THROWS_AS(load_chu_text("not json"), SchemaError);
  CHECK_THROWS_AS(load_state_space_text(R"({"kind":"chu3"})"), SchemaError);
  CHECK_THROWS_AS(
      load_state_space_text(R"({"kind":"state_space","elements":["a","b"],"leq":[]})"),
      NoBottomError);
  try {
    load_state_space_text(
        R"({"kind":"state_space","elements":["0","a"],"leq":[["0","a"]],
            "star":{"a":"zzz"}})");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer == "/star/a");
  }
}

TEST_CASE("dictionary files resolve their spaces") {
  const std::string space_file = temp_path("qchu_mo2.json");
  write_file(space_file, save_state_space(gen_mo(2)));

  auto m = std::make_shared<StateSpace>(load_state_space_file(space_file));
  Dictionary d;
  d.source = m;
  d.target = m;
  const Poset& p = m->poset;
  d.f_states.resize(p.size());
  std::vector<int> inverse(p.size());
  std::map<std::string, std::string> perm = {
      {"0", "0"}, {"a", "b"}, {"a'", "b'"}, {"b", "a"}, {"b'", "a'"}};
  for (int s = 0; s < p.size(); ++s) {
    d.f_states[s] = p.index(perm.at(p.name(s)));
    inverse[d.f_states[s]] = s;
  }
  for (const auto& [sig, sigp] : m->scheme->pairs)
    d.f_tests.emplace_back(inverse[sig], inverse[sigp]);

  const std::string dict_file = temp_path("qchu_dict.json");
  write_file(dict_file, save_dictionary(d, "qchu_mo2.json", "qchu_mo2.json"));
  const Dictionary loaded = load_dictionary_file(dict_file);
  CHECK(loaded.f_states == d.f_states);
  CHECK(loaded.f_tests == d.f_tests);
  CHECK(save_dictionary(loaded, "qchu_mo2.json", "qchu_mo2.json") ==
        save_dictionary(d, "qchu_mo2.json", "qchu_mo2.json"));
}

TEST_CASE("dot export shapes a digraph of the closed sets") {
  const StateSpace m = gen_mo(2);
  const ClosedSetLattice L = build_closed_set_lattice(m, *m.scheme);
  const std::string dot = dot_closed_set_lattice(L);
  CHECK(dot.substr(0, 7) == "digraph");
  std::size_t nodes = 0, pos = 0;
  while ((pos = dot.find("label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  CHECK(nodes == L.closed.size());
  // bottom covers every atom: four edges out of n0
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
}

TEST_CASE("report rendering and exit codes") {
  Report r;
  r.title = "demo";
  r.add(CheckResult::pass(AxiomId::BoundedComplete));
  CHECK(r.exit_code() == 0);
  CHECK(r.render().find("[PASS] BoundedComplete") != std::string::npos);
  CHECK(r.render().find("summary: PASS") != std::string::npos);

  CheckResult rpt = CheckResult::fail(AxiomId::Specker, {"l1"}, "pairwise only");
  rpt.report_mode = true;
  r.add(rpt);
  CHECK(r.exit_code() == 3);
  CHECK(r.render().find("[RPT!] Specker") != std::string::npos);
  CHECK(r.render().find("summary: PASS-WITH-DISCREPANCIES") != std::string::npos);

  r.add(CheckResult::fail(AxiomId::CondModular, {"a", "b", "c"}, "broken"));
  CHECK(r.exit_code() == 1);
  CHECK(r.render().find("witness=(a,b,c)") != std::string::npos);
  CHECK(r.render().find("summary: FAIL") != std::string::npos);

  Report t;
  t.title = "trivial";
  t.add(CheckResult::trivial(AxiomId::MeetContinuous));
  CHECK(t.exit_code() == 0);
  CHECK(t.render().find("[TRIV] MeetContinuous") != std::string::npos);
}
