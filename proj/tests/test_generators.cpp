#include <doctest.h>

#include "fixtures.hpp"
#include "qchu/generators.hpp"
#include "qchu/ortho.hpp"

using namespace qchu;

TEST_CASE("generator ranges") {
  CHECK_THROWS_AS(gen_boolean(1), RangeError);
  CHECK_THROWS_AS(gen_boolean(7), RangeError);
  CHECK_THROWS_AS(gen_mo(0), RangeError);
  CHECK_THROWS_AS(gen_mo(9), RangeError);
  CHECK_THROWS_AS(gen_chain(2), RangeError);
  CHECK_THROWS_AS(random_chu(1, 0, 3), RangeError);
  CHECK_THROWS_AS(random_chu(1, 65, 3), RangeError);
}

TEST_CASE("generated posets match the hand-built ones") {
  CHECK(gen_boolean(2).poset.same_elements(fixtures::bool2()));
  CHECK(gen_boolean(3).poset.same_elements(fixtures::bool3()));
  CHECK(gen_mo(2).poset.same_elements(fixtures::mo2()));
  CHECK(gen_chain(3).poset.same_elements(fixtures::chain3()));
  CHECK(gen_n5().poset.same_elements(fixtures::n5()));
  CHECK(gen_boolean(4).poset.size() == 15);
  CHECK(gen_mo(5).poset.size() == 11);
}

TEST_CASE("generated spaces pass the projective-domain and scheme sweeps") {
  std::vector<StateSpace> corpus;
  for (int n = 2; n <= 4; ++n) corpus.push_back(gen_boolean(n));
  for (int n = 1; n <= 4; ++n) corpus.push_back(gen_mo(n));
  corpus.push_back(gen_product(gen_mo(2), gen_mo(2)));
  corpus.push_back(gen_product(gen_boolean(2), gen_boolean(2)));
  for (const StateSpace& S : corpus) {
    for (const CheckResult& c : S.poset.check_projective_domain())
      CHECK(c.verdict != Verdict::Fail);
    REQUIRE(S.scheme.has_value());
    for (const CheckResult& c : validate_scheme(S, *S.scheme, true))
      CHECK(c.verdict == Verdict::Pass);
  }
}

TEST_CASE("counterexample generators fail where expected") {
  CHECK(gen_chain(3).poset.check_axiom(AxiomId::NoType2).verdict == Verdict::Fail);
  CHECK(gen_chain(3).poset.check_axiom(AxiomId::BoundedComplete).verdict ==
        Verdict::Pass);
  CHECK(gen_n5().poset.check_axiom(AxiomId::CondModular).verdict == Verdict::Fail);
}

TEST_CASE("products") {
  const StateSpace unit = gen_product(gen_mo(2), gen_trivial());
  CHECK(unit.poset.size() == gen_mo(2).poset.size());
  // unit law: same order structure up to the renaming x -> x|0
  const StateSpace m = gen_mo(2);
  for (int i = 0; i < m.poset.size(); ++i)
    for (int j = 0; j < m.poset.size(); ++j)
      CHECK(m.poset.leq(i, j) ==
            unit.poset.leq(unit.poset.index(m.poset.name(i) + "|0"),
                           unit.poset.index(m.poset.name(j) + "|0")));

  const StateSpace pp = gen_product(gen_mo(2), gen_mo(2));
  CHECK(pp.poset.size() == 35);  // (5+top)^2 minus the product top
  CHECK(pp.poset.pure_states().pure.count() == 8);

  CHECK_THROWS_AS(gen_product(gen_mo(2), gen_mo(2), 16), SizeLimitError);
  CHECK_THROWS_AS(gen_product(gen_chain(3), gen_mo(2)), Error);
}

TEST_CASE("from_lattice") {
  // the full three-bit lattice with complement collapses to the boolean space
  Poset cube = Poset::from_pairs(
      {"0", "1", "2", "3", "12", "13", "23", "123"},
      {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "12"}, {"1", "13"}, {"2", "12"},
       {"2", "23"}, {"3", "13"}, {"3", "23"}, {"12", "123"}, {"13", "123"},
       {"23", "123"}});
  std::vector<int> star(cube.size(), -1);
  auto link = [&](const char* x, const char* y) {
    star[cube.index(x)] = cube.index(y);
    star[cube.index(y)] = cube.index(x);
  };
  link("1", "23");
  link("2", "13");
  link("3", "12");
  const StateSpace s = from_lattice(cube, star);
  CHECK(s.poset.same_elements(gen_boolean(3).poset));
  CHECK(s.scheme->pairs == gen_boolean(3).scheme->pairs);

  // the pentagon has a top but is not modular
  std::vector<int> no_star(gen_n5().poset.size(), -1);
  CHECK_THROWS_AS(from_lattice(gen_n5().poset, no_star), NotProjectiveLatticeError);

  // MO2 plus a top is the modular ortholattice it came from
  Poset mo2l = Poset::from_pairs({"0", "a", "a'", "b", "b'", "1"},
                                 {{"0", "a"},
                                  {"0", "a'"},
                                  {"0", "b"},
                                  {"0", "b'"},
                                  {"a", "1"},
                                  {"a'", "1"},
                                  {"b", "1"},
                                  {"b'", "1"}});
  std::vector<int> mstar(mo2l.size(), -1);
  mstar[mo2l.index("a")] = mo2l.index("a'");
  mstar[mo2l.index("a'")] = mo2l.index("a");
  mstar[mo2l.index("b")] = mo2l.index("b'");
  mstar[mo2l.index("b'")] = mo2l.index("b");
  const StateSpace sm = from_lattice(mo2l, mstar);
  CHECK(sm.poset.same_elements(gen_mo(2).poset));

  // round trip: completing a generated space and cutting it again
  const StateSpace b3 = gen_boolean(3);
  const StateSpace again = from_lattice(cube, star);
  CHECK(again.poset.same_elements(b3.poset));
}

TEST_CASE("random chu spaces are reproducible") {
  const ChuSpace a = random_chu(1, 4, 3);
  const ChuSpace b = random_chu(1, 4, 3);
  CHECK(a == b);
  const ChuSpace c = random_chu(2, 4, 3);
  CHECK(a != c);
}
