#include "qchu/generators.hpp"

#include <algorithm>

#include "qchu/ortho.hpp"

namespace qchu {

namespace {

std::string subset_name(unsigned mask) {
  if (mask == 0) return "0";
  std::string s;
  for (int b = 0; b < 8; ++b)
    if (mask & (1u << b)) s += static_cast<char>('1' + b);
  return s;
}

}  // namespace

StateSpace gen_boolean(int n) {
  if (n < 2 || n > 6) throw RangeError("boolean family needs 2 <= n <= 6");
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < full; ++m) masks.push_back(m);  // proper subsets only
  std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> names;
  for (unsigned m : masks) names.push_back(subset_name(m));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j)
      if ((masks[i] & masks[j]) == masks[i]) pairs.emplace_back(names[i], names[j]);
  StateSpace out;
  out.poset = Poset::from_pairs(std::move(names), pairs);
  std::vector<int> star(out.poset.size(), -1);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (masks[i] == 0) continue;
    star[out.poset.index(subset_name(masks[i]))] =
        out.poset.index(subset_name(full & ~masks[i]));
  }
  out.scheme = scheme_from_star(out, star);
  return out;
}

StateSpace gen_mo(int n) {
  if (n < 1 || n > 8) throw RangeError("mo family needs 1 <= n <= 8");
  std::vector<std::string> names{"0"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int k = 0; k < n; ++k) {
    const std::string base(1, static_cast<char>('a' + k));
    names.push_back(base);
    names.push_back(base + "'");
    pairs.emplace_back("0", base);
    pairs.emplace_back("0", base + "'");
  }
  StateSpace out;
  out.poset = Poset::from_pairs(std::move(names), pairs);
  std::vector<int> star(out.poset.size(), -1);
  for (int k = 0; k < n; ++k) {
    const std::string base(1, static_cast<char>('a' + k));
    const int i = out.poset.index(base);
    const int j = out.poset.index(base + "'");
    star[i] = j;
    star[j] = i;
  }
  out.scheme = scheme_from_star(out, star);
  return out;
}

StateSpace gen_chain(int k) {
  if (k < 3 || k > 27) throw RangeError("chain family needs 3 <= k <= 27");
  std::vector<std::string> names{"0"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 1; i < k; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
    pairs.emplace_back(names[i - 1], names[i]);
  }
  StateSpace out;
  out.poset = Poset::from_pairs(std::move(names), pairs);
  return out;
}

StateSpace gen_n5() {
  StateSpace out;
  out.poset = Poset::from_pairs({"0", "a", "b", "c", "1"},
                                {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  return out;
}

StateSpace gen_trivial() {
  StateSpace out;
  out.poset = Poset::from_pairs({"0"}, {});
  out.scheme = Scheme{};
  return out;
}

namespace {

/// The operand completed to a lattice: adds a top unless one exists already.
struct Completed {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
  std::vector<int> star;  // -1 undefined; bottom* = top, top* = bottom
  int bottom, top;
};

Completed complete_space(const StateSpace& s) {
  const Poset& p = s.poset;
  Completed c;
  const StateSet max = p.maximal();
  const bool has_top = max.count() == 1;
  const int n = p.size() + (has_top ? 0 : 1);
  c.names = p.names();
  if (!has_top) {
    std::string top = "T";
    while (p.index(top) >= 0) top += "T";
    c.names.push_back(top);
  }
  c.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) c.leq[i][j] = p.leq(i, j);
  c.top = has_top ? static_cast<int>(max.find_first()) : n - 1;
  c.bottom = p.bottom();
  for (int i = 0; i < n; ++i) {
    c.leq[i][c.top] = true;
    c.leq[c.top][c.top] = true;
  }
  c.star.assign(n, -1);
  if (s.scheme && s.scheme->star)
    for (int i = 0; i < p.size(); ++i) c.star[i] = (*s.scheme->star)[i];
  c.star[c.bottom] = c.top;
  c.star[c.top] = c.bottom;
  return c;
}

}  // namespace

StateSpace gen_product(const StateSpace& a, const StateSpace& b, std::size_t max_size) {
  if (!a.scheme || !b.scheme) throw Error("product operands need schemes");
  const Completed ca = complete_space(a);
  const Completed cb = complete_space(b);
  const std::size_t na = ca.names.size(), nb = cb.names.size();
  if (na * nb - 1 > max_size) throw SizeLimitError("product exceeds the size limit");

  // all pairs except the product top, in row-major order
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (!(static_cast<int>(i) == ca.top && static_cast<int>(j) == cb.top))
        cells.emplace_back(static_cast<int>(i), static_cast<int>(j));
  auto cell_index = [&](int i, int j) {
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (cells[k] == std::make_pair(i, j)) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::string> names;
  for (const auto& [i, j] : cells) names.push_back(ca.names[i] + "|" + cb.names[j]);
  const int n = static_cast<int>(cells.size());
  std::vector<bool> rel(static_cast<std::size_t>(n) * n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rel[x * n + y] = ca.leq[cells[x].first][cells[y].first] &&
                       cb.leq[cells[x].second][cells[y].second];
  StateSpace out;
  out.poset = Poset::from_relation(std::move(names), std::move(rel));
  std::vector<int> star(n, -1);
  for (int x = 0; x < n; ++x) {
    if (x == out.poset.bottom()) continue;
    const int si = ca.star[cells[x].first];
    const int sj = cb.star[cells[x].second];
    if (si < 0 || sj < 0) throw NotOrthocomplementError("componentwise star undefined");
    star[x] = cell_index(si, sj);
    if (star[x] < 0) throw NotOrthocomplementError("componentwise star escapes the product");
  }
  out.scheme = scheme_from_star(out, star);
  return out;
}

StateSpace from_lattice(const Poset& lattice, const std::vector<int>& star) {
  const int n = lattice.size();
  const StateSet max = lattice.maximal();
  if (max.count() != 1) throw NotProjectiveLatticeError("lattice has no top");
  const int top = static_cast<int>(max.find_first());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      StateSet pair(n);
      pair.set(i);
      pair.set(j);
      try {
        lattice.meet_of(pair);
        if (!lattice.join_of(pair))
          throw NotProjectiveLatticeError("join missing between " + lattice.name(i) +
                                          " and " + lattice.name(j));
      } catch (const NoMeetError&) {
        throw NotProjectiveLatticeError("meet missing between " + lattice.name(i) + " and " +
                                        lattice.name(j));
      } catch (const AmbiguousJoinError&) {
        throw NotProjectiveLatticeError("join ambiguous between " + lattice.name(i) +
                                        " and " + lattice.name(j));
      }
    }
  // modularity: a ⊑ c implies a ⊔ (b ⊓ c) = (a ⊔ b) ⊓ c
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!lattice.leq(a, c)) continue;
        const int lhs = *lattice.join2(a, lattice.meet2(b, c));
        const int rhs = lattice.meet2(*lattice.join2(a, b), c);
        if (lhs != rhs)
          throw NotProjectiveLatticeError("modularity fails at (" + lattice.name(a) + "," +
                                          lattice.name(b) + "," + lattice.name(c) + ")");
      }
  if (!lattice.check_axiom(AxiomId::Atomistic).ok())
    throw NotProjectiveLatticeError("lattice is not atomistic");
  // completely meet-irreducible elements must be the coatoms
  for (int i = 0; i < n; ++i) {
    if (i == top) continue;
    StateSet strict_up = lattice.up_set(i);
    strict_up.reset(i);
    bool cmi = false;
    for (auto m = strict_up.find_first(); m != StateSet::npos; m = strict_up.find_next(m))
      if (strict_up.is_subset_of(lattice.up_set(static_cast<int>(m)))) cmi = true;
    const bool coatom = lattice.covers(i, top);
    if (cmi != coatom)
      throw NotProjectiveLatticeError("completely meet-irreducible elements differ from coatoms at " +
                                      lattice.name(i));
  }
  // join-irreducible elements must be the atoms
  for (int i = 0; i < n; ++i) {
    if (i == lattice.bottom()) continue;
    StateSet strict_down = lattice.down_set(i);
    strict_down.reset(i);
    bool ji = false;
    for (auto m = strict_down.find_first(); m != StateSet::npos; m = strict_down.find_next(m))
      if (strict_down.is_subset_of(lattice.down_set(static_cast<int>(m)))) ji = true;
    const bool atom = lattice.covers(lattice.bottom(), i);
    if (ji != atom)
      throw NotProjectiveLatticeError("join-irreducible elements differ from atoms at " +
                                      lattice.name(i));
  }
  // star must be an orthocomplementation of the full lattice
  for (int i = 0; i < n; ++i) {
    if (i == top || i == lattice.bottom()) continue;
    const int s = star[i];
    if (s < 0) throw NotOrthocomplementError("star undefined at " + lattice.name(i));
    if (star[s] != i) throw NotOrthocomplementError("star not involutive at " + lattice.name(i));
    if (lattice.meet2(i, s) != lattice.bottom() || *lattice.join2(i, s) != top)
      throw NotOrthocomplementError("star is not a complement at " + lattice.name(i));
    for (int j = 0; j < n; ++j) {
      if (j == top || j == lattice.bottom()) continue;
      if (lattice.leq(i, j) && !lattice.leq(star[j], s))
        throw NotOrthocomplementError("star not order-reversing between " + lattice.name(i) +
                                      " and " + lattice.name(j));
    }
  }

  std::vector<std::string> names;
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != top) {
      keep.push_back(i);
      names.push_back(lattice.name(i));
    }
  const int m = static_cast<int>(keep.size());
  std::vector<bool> rel(static_cast<std::size_t>(m) * m, false);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) rel[x * m + y] = lattice.leq(keep[x], keep[y]);
  StateSpace out;
  out.poset = Poset::from_relation(std::move(names), std::move(rel));
  std::vector<int> sub_star(m, -1);
  for (int x = 0; x < m; ++x) {
    if (keep[x] == lattice.bottom()) continue;
    const int s = star[keep[x]];
    sub_star[x] = out.poset.index(lattice.name(s));
    if (sub_star[x] < 0) throw NotOrthocomplementError("star escapes the state space");
  }
  out.scheme = scheme_from_star(out, sub_star);
  return out;
}

ChuSpace random_chu(std::uint64_t seed, int n_prep, int n_test) {
  if (n_prep < 1 || n_prep > 64 || n_test < 1 || n_test > 64)
    throw RangeError("random_chu sizes must be within 1..64");
  SplitMix64 rng(seed);
  ChuSpace out;
  for (int p = 0; p < n_prep; ++p) out.preparations.push_back("p" + std::to_string(p));
  for (int t = 0; t < n_test; ++t) out.tests.push_back("t" + std::to_string(t));
  out.eval.assign(n_prep, std::vector<TruthValue>(n_test));
  for (int p = 0; p < n_prep; ++p)
    for (int t = 0; t < n_test; ++t)
      out.eval[p][t] = static_cast<TruthValue>(rng.next() % 3);
  return out;
}

}  // namespace qchu
