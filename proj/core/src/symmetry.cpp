#include "qchu/symmetry.hpp"

#include <algorithm>

namespace qchu {

namespace {

TruthValue eval_on(const Poset& p, const std::pair<int, int>& pair, int state) {
  if (p.leq(pair.first, state)) return TruthValue::Yes;
  if (p.leq(pair.second, state)) return TruthValue::No;
  return TruthValue::Indeterminate;
}

std::string pair_name(const Poset& p, const std::pair<int, int>& t) {
  return "[" + p.name(t.first) + "," + p.name(t.second) + "]";
}

}  // namespace

CheckResult check_chu_morphism(const Dictionary& D) {
  const Poset& ps = D.source->poset;
  const Poset& pt = D.target->poset;
  const Scheme& ut = D.target_scheme();
  for (int s = 0; s < ps.size(); ++s) {
    for (std::size_t k = 0; k < ut.pairs.size(); ++k) {
      const TruthValue lhs = eval_on(pt, ut.pairs[k], D.f_states[s]);
      const TruthValue rhs = eval_on(ps, D.f_tests[k], s);
      if (lhs != rhs)
        return CheckResult::fail(AxiomId::ChuMorphism,
                                 {ps.name(s), pair_name(pt, ut.pairs[k])},
                                 "statement of the mapped state differs from the pulled-back statement");
    }
  }
  return CheckResult::pass(AxiomId::ChuMorphism);
}

std::vector<CheckResult> check_symmetry(const Dictionary& D) {
  const StateSpace& src = *D.source;
  const StateSpace& tgt = *D.target;
  const Poset& ps = src.poset;
  const Poset& pt = tgt.poset;
  const Scheme& ut = D.target_scheme();
  const Scheme& us = D.source_scheme();
  std::vector<CheckResult> out;

  const std::vector<PropertyRecord> tgt_props = scheme_properties(tgt, ut);

  CheckResult injective = CheckResult::pass(AxiomId::Injective);
  for (int a = 0; a < ps.size() && injective.ok(); ++a)
    for (int b = a + 1; b < ps.size(); ++b)
      if (D.f_states[a] == D.f_states[b]) {
        injective = CheckResult::fail(AxiomId::Injective, {ps.name(a), ps.name(b)},
                                      "two states share an image");
        break;
      }

  CheckResult surjective = CheckResult::pass(AxiomId::Surjective);
  for (std::size_t j = 0; j < us.pairs.size(); ++j) {
    if (std::find(D.f_tests.begin(), D.f_tests.end(), us.pairs[j]) == D.f_tests.end()) {
      surjective = CheckResult::fail(AxiomId::Surjective, {pair_name(ps, us.pairs[j])},
                                     "source scheme pair is not reached");
      break;
    }
  }

  CheckResult preserved = CheckResult::pass(AxiomId::SchemePreserved);
  for (std::size_t k = 0; k < ut.pairs.size(); ++k) {
    if (us.find_pair(D.f_tests[k].first, D.f_tests[k].second) < 0) {
      preserved = CheckResult::fail(AxiomId::SchemePreserved,
                                    {pair_name(pt, ut.pairs[k])},
                                    "image of a scheme test is not a source scheme test");
      break;
    }
  }

  // a domain mismatch on a structurally sound dictionary is an error; on an
  // already-broken one it is recorded as a center-dot failure
  const bool structurally_sound = injective.ok() && surjective.ok() && preserved.ok();

  // center-dot: f(σ)·t = f(σ·f(t)); measurement domains must correspond
  // everywhere before any value is compared
  CheckResult centerdot = CheckResult::pass(AxiomId::CenterDot);
  std::vector<PropertyRecord> src_props;
  for (std::size_t k = 0; k < ut.pairs.size(); ++k)
    src_props.push_back(make_property(src, D.f_tests[k].first, D.f_tests[k].second));
  for (std::size_t k = 0; k < ut.pairs.size() && centerdot.ok(); ++k) {
    if (!tgt_props[k].flags.quasi_classical) continue;
    for (int s = 0; s < ps.size(); ++s) {
      if (src_props[k].Q.test(s) == tgt_props[k].Q.test(D.f_states[s])) continue;
      if (structurally_sound)
        throw PartialityMismatchError("state " + ps.name(s) +
                                      " and its image disagree on the domain of " +
                                      pair_name(pt, ut.pairs[k]));
      centerdot = CheckResult::fail(AxiomId::CenterDot,
                                    {ps.name(s), pair_name(pt, ut.pairs[k])},
                                    "measurement domains disagree under the state map");
      break;
    }
  }
  for (std::size_t k = 0; k < ut.pairs.size() && centerdot.ok(); ++k) {
    const PropertyRecord& lt = tgt_props[k];
    const PropertyRecord& lsrc = src_props[k];
    if (!lt.flags.quasi_classical) continue;
    for (int s = 0; s < ps.size(); ++s) {
      if (!lsrc.Q.test(s)) continue;
      if (!lsrc.flags.quasi_classical) {
        centerdot = CheckResult::fail(AxiomId::CenterDot,
                                      {pair_name(pt, ut.pairs[k])},
                                      "pulled-back test admits no measurement map");
        break;
      }
      const int lhs = measure_theta(tgt, lt, D.f_states[s]);
      const int rhs = D.f_states[measure_theta(src, lsrc, s)];
      if (lhs != rhs) {
        centerdot = CheckResult::fail(AxiomId::CenterDot,
                                      {ps.name(s), pair_name(pt, ut.pairs[k])},
                                      "measuring after mapping differs from mapping after measuring");
        break;
      }
    }
  }
  out.push_back(centerdot);

  // succession preservation on compatible minimal pairs
  CheckResult succ = CheckResult::pass(AxiomId::SuccessionPreserved);
  for (std::size_t k1 = 0; k1 < ut.pairs.size() && succ.ok(); ++k1) {
    for (std::size_t k2 = 0; k2 < ut.pairs.size(); ++k2) {
      const PropertyRecord& t1 = tgt_props[k1];
      const PropertyRecord& t2 = tgt_props[k2];
      if (!t1.flags.minimal || !t2.flags.minimal) continue;
      PropertyRecord s1 = make_property(src, D.f_tests[k1].first, D.f_tests[k1].second);
      PropertyRecord s2 = make_property(src, D.f_tests[k2].first, D.f_tests[k2].second);
      const bool tgt_comp = (t1.A & t2.A).any();
      const bool src_comp = (s1.A & s2.A).any();
      if (tgt_comp != src_comp) {
        succ = CheckResult::fail(AxiomId::SuccessionPreserved,
                                 {pair_name(pt, ut.pairs[k1]), pair_name(pt, ut.pairs[k2])},
                                 "compatibility differs between the two sides");
        break;
      }
      if (!tgt_comp) continue;
      if (!s1.flags.minimal || !s2.flags.minimal) {
        succ = CheckResult::fail(AxiomId::SuccessionPreserved,
                                 {pair_name(pt, ut.pairs[k1]), pair_name(pt, ut.pairs[k2])},
                                 "pulled-back pair is not minimally disturbing");
        break;
      }
      const auto st = succession(tgt, t1, t2);
      const auto ss = succession(src, s1, s2);
      // the source record must be the pointwise preimage of the target record
      StateSet expect_a(ps.size()), expect_q(ps.size());
      for (int s = 0; s < ps.size(); ++s) {
        if (st->record.A.test(D.f_states[s])) expect_a.set(s);
        if (st->record.Q.test(D.f_states[s])) expect_q.set(s);
      }
      if (ss->record.A != expect_a || ss->record.Q != expect_q ||
          D.f_states[ss->record.sigma] != st->record.sigma) {
        succ = CheckResult::fail(AxiomId::SuccessionPreserved,
                                 {pair_name(pt, ut.pairs[k1]), pair_name(pt, ut.pairs[k2])},
                                 "succession records disagree under the state map");
        break;
      }
    }
  }
  out.push_back(succ);
  out.push_back(injective);
  out.push_back(surjective);
  out.push_back(preserved);
  return out;
}

Dictionary compose(const Dictionary& D1, const Dictionary& D2) {
  if (!D1.target->poset.same_elements(D2.source->poset))
    throw SpaceMismatchError("middle spaces of the composition differ");
  Dictionary out;
  out.source = D1.source;
  out.target = D2.target;
  out.f_states.resize(D1.f_states.size());
  for (std::size_t s = 0; s < D1.f_states.size(); ++s)
    out.f_states[s] = D2.f_states[D1.f_states[s]];
  const Scheme& u2 = D1.target_scheme();
  for (const auto& mid : D2.f_tests) {
    const int k = u2.find_pair(mid.first, mid.second);
    if (k < 0) throw SpaceMismatchError("composition crosses a non-scheme pair");
    out.f_tests.push_back(D1.f_tests[k]);
  }
  return out;
}

int lower_adjoint(const Dictionary& D, int target_state) {
  const Poset& ps = D.source->poset;
  const Poset& pt = D.target->poset;
  const Scheme& ut = D.target_scheme();
  if (target_state == pt.bottom()) return ps.bottom();
  const int k = ut.pair_with_first(target_state);
  if (k < 0) throw EmptyFilterError("no scheme pair at " + pt.name(target_state));
  StateSet filter(ps.size());
  for (int s = 0; s < ps.size(); ++s)
    if (eval_on(ps, D.f_tests[k], s) == TruthValue::Yes) filter.set(s);
  if (filter.none())
    throw EmptyFilterError("pulled-back yes-filter of " + pt.name(target_state) + " is empty");
  const int lo = ps.meet_of(filter);
  // Galois law against the state map
  for (int s = 0; s < ps.size(); ++s) {
    const bool left = ps.leq(lo, s);
    const bool right = pt.leq(target_state, D.f_states[s]);
    if (left != right)
      throw EmptyFilterError("Galois law fails at " + ps.name(s) + " for " +
                             pt.name(target_state));
  }
  return lo;
}

std::vector<CheckResult> check_preservation(const Dictionary& D) {
  const StateSpace& src = *D.source;
  const StateSpace& tgt = *D.target;
  const Poset& ps = src.poset;
  const Poset& pt = tgt.poset;
  const Scheme& ut = D.target_scheme();
  const Scheme& us = D.source_scheme();
  std::vector<CheckResult> out;

  CheckResult minimality = CheckResult::pass(AxiomId::MinimalityPreserved);
  for (std::size_t k = 0; k < ut.pairs.size(); ++k) {
    const PropertyRecord lt = make_property(tgt, ut.pairs[k].first, ut.pairs[k].second);
    const PropertyRecord lsrc = make_property(src, D.f_tests[k].first, D.f_tests[k].second);
    if (lt.flags.minimal && !lsrc.flags.minimal) {
      minimality = CheckResult::fail(AxiomId::MinimalityPreserved,
                                     {pair_name(pt, ut.pairs[k])},
                                     "minimally disturbing test pulls back to a non-minimal one");
      break;
    }
  }
  out.push_back(minimality);

  CheckResult barstar = CheckResult::pass(AxiomId::BarStarPreserved);
  for (std::size_t k = 0; k < ut.pairs.size() && barstar.ok(); ++k) {
    const int kbar = ut.find_pair(ut.pairs[k].second, ut.pairs[k].first);
    if (kbar < 0) {
      barstar = CheckResult::fail(AxiomId::BarStarPreserved, {pair_name(pt, ut.pairs[k])},
                                  "target scheme lacks the conjugate pair");
      break;
    }
    if (D.f_tests[kbar] != bar_pair(D.f_tests[k]))
      barstar = CheckResult::fail(AxiomId::BarStarPreserved, {pair_name(pt, ut.pairs[k])},
                                  "test map does not commute with conjugation");
  }
  if (barstar.ok()) {
    for (int s = 0; s < ps.size() && barstar.ok(); ++s) {
      if (s == ps.bottom()) continue;
      int src_star, tgt_star;
      try {
        src_star = star_of(src, us, s);
        tgt_star = star_of(tgt, ut, D.f_states[s]);
      } catch (const Error& e) {
        barstar = CheckResult::fail(AxiomId::BarStarPreserved, {ps.name(s)}, e.what());
        break;
      }
      if (D.f_states[src_star] != tgt_star)
        barstar = CheckResult::fail(AxiomId::BarStarPreserved, {ps.name(s)},
                                    "state map does not commute with star");
    }
  }
  out.push_back(barstar);

  CheckResult ortho_pres = CheckResult::pass(AxiomId::OrthogonalityPreserved);
  for (int a = 0; a < ps.size() && ortho_pres.ok(); ++a) {
    if (a == ps.bottom()) continue;
    for (int b = 0; b < ps.size(); ++b) {
      if (b == ps.bottom()) continue;
      if (orthogonal(src, us, a, b) &&
          !orthogonal(tgt, ut, D.f_states[a], D.f_states[b])) {
        ortho_pres = CheckResult::fail(AxiomId::OrthogonalityPreserved,
                                       {ps.name(a), ps.name(b)},
                                       "orthogonal states map to non-orthogonal states");
        break;
      }
    }
  }
  if (ortho_pres.ok()) {
    // reverse direction through the inverse dictionary, when bijective
    std::vector<int> inv(pt.size(), -1);
    bool bijective = ps.size() == pt.size();
    for (int s = 0; s < ps.size() && bijective; ++s) {
      if (inv[D.f_states[s]] >= 0)
        bijective = false;
      else
        inv[D.f_states[s]] = s;
    }
    if (bijective) {
      for (int a = 0; a < pt.size() && ortho_pres.ok(); ++a) {
        if (a == pt.bottom()) continue;
        for (int b = 0; b < pt.size(); ++b) {
          if (b == pt.bottom()) continue;
          if (orthogonal(tgt, ut, a, b) && !orthogonal(src, us, inv[a], inv[b])) {
            ortho_pres = CheckResult::fail(AxiomId::OrthogonalityPreserved,
                                           {pt.name(a), pt.name(b)},
                                           "inverse map does not preserve orthogonality");
            break;
          }
        }
      }
    }
  }
  out.push_back(ortho_pres);
  return out;
}

InducedLatticeMap induced_lattice_map(const Dictionary& D, const ClosedSetLattice& LS,
                                      const ClosedSetLattice& LT) {
  const Poset& ps = D.source->poset;
  const Poset& pt = D.target->poset;
  InducedLatticeMap out;
  out.verdict = CheckResult::pass(AxiomId::InducedOrthoMorphism);

  auto fail = [&](std::vector<std::string> w, std::string detail) {
    out.verdict = CheckResult::fail(AxiomId::InducedOrthoMorphism, std::move(w),
                                    std::move(detail));
  };

  out.forward.assign(LS.closed.size(), -1);
  for (std::size_t i = 0; i < LS.closed.size(); ++i) {
    StateSet image(pt.size());
    for (auto s = LS.closed[i].find_first(); s != StateSet::npos;
         s = LS.closed[i].find_next(s))
      image.set(D.f_states[s]);
    const int j = LT.index_of(LT.closure(image));
    if (j < 0) {
      fail({}, "image closure escapes the target lattice");
      return out;
    }
    out.forward[i] = j;
  }

  // right adjoint: source closure of the lower adjoint of the target meet
  out.adjoint.assign(LT.closed.size(), -1);
  for (std::size_t j = 0; j < LT.closed.size(); ++j) {
    const StateSet& c = LT.closed[j];
    int sigma;
    if (c.none()) {
      // meet over an empty closed set is the whole-space top, which need not
      // exist; the adjoint of the bottom element is the bottom element
      sigma = -1;
    } else {
      sigma = lower_adjoint(D, pt.meet_of(c));
    }
    StateSet down(ps.size());
    if (sigma >= 0) down = ps.underline_of(ps.singleton(sigma));
    const int idx = LS.index_of(sigma >= 0 ? down : StateSet(ps.size()));
    if (idx < 0) {
      fail({}, "adjoint escapes the source lattice");
      return out;
    }
    out.adjoint[j] = idx;
  }

  // injectivity
  for (std::size_t i = 0; i < LS.closed.size() && out.verdict.ok(); ++i)
    for (std::size_t j = i + 1; j < LS.closed.size(); ++j)
      if (out.forward[i] == out.forward[j]) {
        fail({std::to_string(i), std::to_string(j)}, "two closed sets share an image");
        return out;
      }
  // suprema preservation
  for (std::size_t i = 0; i < LS.closed.size() && out.verdict.ok(); ++i)
    for (std::size_t j = 0; j < LS.closed.size(); ++j) {
      const int sup = LS.join(static_cast<int>(i), static_cast<int>(j));
      if (out.forward[sup] != LT.join(out.forward[i], out.forward[j])) {
        fail({std::to_string(i), std::to_string(j)}, "join is not preserved");
        return out;
      }
    }
  // atoms to atoms
  for (int a : LS.atom_sets)
    if (LT.closed[out.forward[a]].count() != 1) {
      fail({std::to_string(a)}, "atom maps to a non-atom");
      return out;
    }
  // orthocomplement preservation
  for (std::size_t i = 0; i < LS.closed.size(); ++i)
    if (out.forward[LS.ortho[i]] != LT.ortho[out.forward[i]]) {
      fail({std::to_string(i)}, "orthocomplement is not preserved");
      return out;
    }
  // adjunction on all pairs
  for (std::size_t i = 0; i < LS.closed.size(); ++i)
    for (std::size_t j = 0; j < LT.closed.size(); ++j) {
      const bool left = LT.closed[out.forward[i]].is_subset_of(LT.closed[j]);
      const bool right = LS.closed[i].is_subset_of(LS.closed[out.adjoint[j]]);
      if (left != right) {
        fail({std::to_string(i), std::to_string(j)}, "Galois adjunction fails");
        return out;
      }
    }
  return out;
}

}  // namespace qchu
