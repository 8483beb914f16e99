#include "oracles.hpp"

#include <algorithm>

namespace qchu::oracle {

std::vector<std::vector<int>> all_subsets(int n, bool nonempty) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = nonempty ? 1 : 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b)) s.push_back(b);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<int> naive_meet(const Poset& p, const std::vector<int>& subset) {
  std::vector<int> lb;
  for (int c = 0; c < p.size(); ++c) {
    bool below_all = true;
    for (int s : subset) below_all &= p.leq(c, s);
    if (below_all) lb.push_back(c);
  }
  for (int m : lb) {
    bool greatest = true;
    for (int x : lb) greatest &= p.leq(x, m);
    if (greatest) return m;
  }
  return std::nullopt;
}

std::optional<int> naive_join(const Poset& p, const std::vector<int>& subset) {
  std::vector<int> ub;
  for (int c = 0; c < p.size(); ++c) {
    bool above_all = true;
    for (int s : subset) above_all &= p.leq(s, c);
    if (above_all) ub.push_back(c);
  }
  for (int m : ub) {
    bool least = true;
    for (int x : ub) least &= p.leq(m, x);
    if (least) return m;
  }
  return std::nullopt;
}

bool naive_consistent(const Poset& p, const std::vector<int>& subset) {
  for (int c = 0; c < p.size(); ++c) {
    bool above_all = true;
    for (int s : subset) above_all &= p.leq(s, c);
    if (above_all) return true;
  }
  return false;
}

bool naive_quasi_consistent(const Poset& p, int a, int b) {
  for (int x = 0; x < p.size(); ++x) {
    if (x != b && p.leq(x, b) && !naive_consistent(p, {a, x})) return false;
    if (x != a && p.leq(x, a) && !naive_consistent(p, {b, x})) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> cover_relation(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool strict_between = false;
      for (int k = 0; k < p.size(); ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) strict_between = true;
      if (!strict_between) out.emplace_back(i, j);
    }
  return out;
}

PureClassification pure_states(const Poset& p) {
  const int n = p.size();
  PureClassification out;
  out.pure = StateSet(n);
  out.type.assign(n, PureType::Type1);
  const auto subsets = all_subsets(n, true);
  for (int sigma = 0; sigma < n; ++sigma) {
    if (sigma == p.bottom() && n > 1) continue;
    bool irreducible = true;
    for (const auto& s : subsets) {
      const auto m = naive_meet(p, s);
      if (m && *m == sigma && std::find(s.begin(), s.end(), sigma) == s.end()) {
        irreducible = false;
        break;
      }
    }
    if (!irreducible) continue;
    out.pure.set(sigma);
    bool maximal = true;
    for (int x = 0; x < n; ++x) maximal &= !(x != sigma && p.leq(sigma, x));
    out.type[sigma] = maximal ? PureType::Type1 : PureType::Type2;
  }
  return out;
}

namespace {

bool naive_covers(const Poset& p, int lo, int hi) {
  if (lo == hi || !p.leq(lo, hi)) return false;
  for (int k = 0; k < p.size(); ++k)
    if (k != lo && k != hi && p.leq(lo, k) && p.leq(k, hi)) return false;
  return true;
}

}  // namespace

bool check_axiom(const Poset& p, AxiomId id) {
  const int n = p.size();
  switch (id) {
    case AxiomId::BoundedComplete: {
      for (const auto& s : all_subsets(n, true)) {
        if (!naive_meet(p, s)) return false;
        if (naive_consistent(p, s) && !naive_join(p, s)) return false;
      }
      return true;
    }
    case AxiomId::StrongAtomicity: {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (a == b || !p.leq(a, b)) continue;
          bool found = false;
          for (int c = 0; c < n && !found; ++c)
            found = naive_covers(p, a, c) && p.leq(c, b);
          if (!found) return false;
        }
      return true;
    }
    case AxiomId::RelativeComplement: {
      for (int s1 = 0; s1 < n; ++s1)
        for (int s2 = 0; s2 < n; ++s2)
          for (int s2p = 0; s2p < n; ++s2p) {
            if (!p.leq(s1, s2) || !p.leq(s2, s2p)) continue;
            bool found = false;
            for (int c = 0; c < n && !found; ++c) {
              const auto m = naive_meet(p, {c, s2});
              const auto j = naive_join(p, {c, s2});
              found = m && j && *m == s1 && *j == s2p;
            }
            if (!found) return false;
          }
      return true;
    }
    case AxiomId::LowerSemimodular: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          const auto j = naive_join(p, {x, y});
          if (!j || !naive_covers(p, y, *j)) continue;
          const auto m = naive_meet(p, {x, y});
          if (!m || !naive_covers(p, *m, x)) return false;
        }
      return true;
    }
    case AxiomId::CondUpperSemimodular: {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          if (!naive_consistent(p, {x, y})) continue;
          const auto m = naive_meet(p, {x, y});
          if (!m || !naive_covers(p, *m, x)) continue;
          const auto j = naive_join(p, {x, y});
          if (!j || !naive_covers(p, y, *j)) return false;
        }
      return true;
    }
    case AxiomId::CondModular: {
      for (int s1 = 0; s1 < n; ++s1)
        for (int s2 = 0; s2 < n; ++s2)
          for (int s3 = 0; s3 < n; ++s3) {
            if (!p.leq(s2, s1) || !naive_consistent(p, {s2, s3})) continue;
            const auto j23 = naive_join(p, {s2, s3});
            const auto m13 = naive_meet(p, {s1, s3});
            if (!j23 || !m13) return false;
            const auto lhs = naive_meet(p, {s1, *j23});
            const auto rhs = naive_join(p, {s2, *m13});
            if (!lhs || !rhs || *lhs != *rhs) return false;
          }
      return true;
    }
    case AxiomId::Atomistic: {
      for (int s = 0; s < n; ++s) {
        std::vector<int> atoms_below;
        for (int a = 0; a < n; ++a)
          if (naive_covers(p, p.bottom(), a) && p.leq(a, s)) atoms_below.push_back(a);
        // s must be the least upper bound of atoms_below (empty join = bottom)
        for (int t = 0; t < n; ++t) {
          bool bounds = true;
          for (int a : atoms_below) bounds &= p.leq(a, t);
          if (bounds && !p.leq(s, t)) return false;
        }
      }
      return true;
    }
    case AxiomId::NoType2: {
      const PureClassification cls = pure_states(p);
      for (int s = 0; s < n; ++s)
        if (cls.pure.test(s) && cls.type[s] == PureType::Type2) return false;
      return true;
    }
    default:
      throw UnknownAxiomError("oracle has no twin for " + axiom_name(id));
  }
}

bool scott_ideal(const Poset& p, const StateSet& sub, const StateSet& ambient) {
  std::vector<int> members;
  for (auto s = sub.find_first(); s != StateSet::npos; s = sub.find_next(s))
    members.push_back(static_cast<int>(s));
  const int k = static_cast<int>(members.size());
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> fam;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) fam.push_back(members[b]);
    bool bounded_in_ambient = false;
    for (auto u = ambient.find_first(); u != StateSet::npos && !bounded_in_ambient;
         u = ambient.find_next(u)) {
      bool above_all = true;
      for (int s : fam) above_all &= p.leq(s, static_cast<int>(u));
      bounded_in_ambient = above_all;
    }
    if (!bounded_in_ambient) continue;
    bool bounded_in_sub = false;
    for (auto u = sub.find_first(); u != StateSet::npos && !bounded_in_sub;
         u = sub.find_next(u)) {
      bool above_all = true;
      for (int s : fam) above_all &= p.leq(s, static_cast<int>(u));
      bounded_in_sub = above_all;
    }
    if (!bounded_in_sub) return false;
  }
  return true;
}

std::vector<StateSet> closed_sets(const StateSpace& S, const Scheme& U) {
  const Poset& p = S.poset;
  std::vector<int> pure;
  const StateSet pure_set = p.pure_states().pure;
  for (auto s = pure_set.find_first(); s != StateSet::npos; s = pure_set.find_next(s))
    pure.push_back(static_cast<int>(s));
  const int k = static_cast<int>(pure.size());
  if (k > 16) throw SizeLimitError("closed-set oracle limited to 16 pure states");

  auto perp = [&](const StateSet& x) {
    StateSet r(p.size());
    for (int c : pure) {
      bool all = true;
      for (auto y = x.find_first(); y != StateSet::npos && all; y = x.find_next(y))
        all = orthogonal(S, U, c, static_cast<int>(y));
      if (all) r.set(c);
    }
    return r;
  };
  std::vector<StateSet> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    StateSet x(p.size());
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) x.set(pure[b]);
    if (perp(perp(x)) == x) out.push_back(x);
  }
  return out;
}

bool minimal_map_exists(const StateSpace& S, const PropertyRecord& l) {
  const Poset& p = S.poset;
  std::vector<int> dom;
  for (auto s = l.Q.find_first(); s != StateSet::npos; s = l.Q.find_next(s))
    dom.push_back(static_cast<int>(s));
  std::vector<int> values(p.size(), -1);

  std::function<bool(std::size_t)> assign = [&](std::size_t at) -> bool {
    if (at == dom.size()) {
      // minimality: on the consistency domain the map is join with sigma
      for (auto s = l.K.find_first(); s != StateSet::npos; s = l.K.find_next(s)) {
        const auto j = naive_join(p, {l.sigma, static_cast<int>(s)});
        if (!j || values[s] != *j) return false;
      }
      return true;
    }
    const int s = dom[at];
    for (int v = 0; v < p.size(); ++v) {
      if (!l.A.test(v)) continue;            // first-kind (i)
      if (l.A.test(s) && v != s) continue;   // first-kind (ii)
      bool mono = true;
      for (std::size_t b = 0; b < at && mono; ++b) {
        const int t = dom[b];
        if (p.leq(s, t) && !p.leq(v, values[t])) mono = false;
        if (p.leq(t, s) && !p.leq(values[t], v)) mono = false;
      }
      if (!mono) continue;
      values[s] = v;
      if (assign(at + 1)) return true;
      values[s] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace qchu::oracle
