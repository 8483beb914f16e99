#pragma once

// Hand-built posets used across the unit tests. Deliberately constructed from
// raw cover pairs rather than through the generators, so the two layers can
// check each other.

#include "qchu/poset.hpp"

namespace qchu::fixtures {

inline Poset bool2() {
  return Poset::from_pairs({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
}

inline Poset bool3() {
  return Poset::from_pairs({"0", "1", "2", "3", "12", "13", "23"},
                           {{"0", "1"},
                            {"0", "2"},
                            {"0", "3"},
                            {"1", "12"},
                            {"1", "13"},
                            {"2", "12"},
                            {"2", "23"},
                            {"3", "13"},
                            {"3", "23"}});
}

inline Poset chain3() {
  return Poset::from_pairs({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}});
}

inline Poset mo2() {
  return Poset::from_pairs({"0", "a", "a'", "b", "b'"},
                           {{"0", "a"}, {"0", "a'"}, {"0", "b"}, {"0", "b'"}});
}

inline Poset n5() {
  return Poset::from_pairs({"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline StateSet set_of(const Poset& p, std::initializer_list<const char*> names) {
  StateSet s(p.size());
  for (const char* n : names) s.set(p.index(n));
  return s;
}

}  // namespace qchu::fixtures
