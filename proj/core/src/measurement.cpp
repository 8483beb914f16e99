#include "qchu/measurement.hpp"

#include <algorithm>
#include <cassert>

namespace qchu {

namespace {

StateSet down_closure(const Poset& p, const StateSet& s) {
  StateSet out(p.size());
  for (auto i = s.find_first(); i != StateSet::npos; i = s.find_next(i))
    out |= p.down_set(static_cast<int>(i));
  return out;
}

bool is_down_directed_within(const Poset& p, const StateSet& f) {
  for (auto a = f.find_first(); a != StateSet::npos; a = f.find_next(a))
    for (auto b = f.find_next(a); b != StateSet::npos; b = f.find_next(b))
      if (!(p.down_set(static_cast<int>(a)) & p.down_set(static_cast<int>(b)) & f).any())
        return false;
  return true;
}

}  // namespace

PropertyRecord make_property(const StateSpace& S, int sigma, std::optional<int> sigma_bar,
                             std::string id) {
  const Poset& p = S.poset;
  PropertyRecord l;
  l.id = id.empty() ? ("[" + p.name(sigma) +
                       (sigma_bar ? "," + p.name(*sigma_bar) : "") + "]")
                    : std::move(id);
  l.sigma = sigma;
  l.sigma_bar = sigma_bar;
  l.A = p.up_set(sigma);
  if (sigma_bar) {
    l.Q = ~p.up_set(*sigma_bar);
  } else {
    l.Q = p.full_set();
  }
  l.K = down_closure(p, l.A);
  l.flags.testable = l.A.any();
  // K escapes Q only for malformed (consistent) threshold pairs
  l.flags.quasi_classical =
      l.K.is_subset_of(l.Q) && is_scott_ideal(S, l.K, l.Q).ok();
  l.flags.minimal = l.flags.quasi_classical;
  return l;
}

std::vector<PropertyRecord> scheme_properties(const StateSpace& S, const Scheme& U) {
  std::vector<PropertyRecord> out;
  for (const auto& [sigma, sigma_prime] : U.pairs) {
    out.push_back(make_property(S, sigma, sigma_prime,
                                "[" + S.poset.name(sigma) + "," +
                                    S.poset.name(sigma_prime) + "]"));
  }
  return out;
}

StateSet consistency_domain(const StateSpace& S, const PropertyRecord& l) {
  const Poset& p = S.poset;
  StateSet k = down_closure(p, l.A);
  // same set through the consistency reading
  StateSet via_hat(p.size());
  for (int s = 0; s < p.size(); ++s)
    if (p.is_consistent2(l.sigma, s)) via_hat.set(s);
  assert(k == via_hat);
  return k;
}

CheckResult is_scott_ideal(const StateSpace& S, const StateSet& sub, const StateSet& ambient) {
  const Poset& p = S.poset;
  assert(sub.is_subset_of(ambient));
  for (auto s = ambient.find_first(); s != StateSet::npos; s = ambient.find_next(s)) {
    const StateSet below = p.down_set(static_cast<int>(s)) & sub;
    if (below.none()) continue;
    // least upper bound taken inside the ambient domain
    const StateSet ub = p.upper_bounds(below) & ambient;
    int join = -1;
    for (auto u = ub.find_first(); u != StateSet::npos; u = ub.find_next(u))
      if (ub.is_subset_of(p.up_set(static_cast<int>(u)))) {
        join = static_cast<int>(u);
        break;
      }
    if (join < 0 || !sub.test(join))
      return CheckResult::fail(AxiomId::ScottIdeal, {p.name(static_cast<int>(s))},
                               "bounded part of the subset has no join inside it");
  }
  return CheckResult::pass(AxiomId::ScottIdeal);
}

int retraction_pi(const StateSpace& S, const PropertyRecord& l, int state) {
  const Poset& p = S.poset;
  if (!l.flags.quasi_classical)
    throw NotQuasiClassicalError("property " + l.id + " is not quasi-classical");
  if (!l.Q.test(state))
    throw DomainMismatchError("state " + p.name(state) + " is not questionable for " + l.id);
  const StateSet below = l.K & p.down_set(state);
  const auto j = p.join_of(below);
  if (!j) throw JoinError("retraction join does not exist");
  return *j;
}

int measure_theta(const StateSpace& S, const PropertyRecord& l, int state) {
  const Poset& p = S.poset;
  const int pi = retraction_pi(S, l, state);
  const auto j = p.join2(l.sigma, pi);
  if (!j) throw JoinError("threshold join does not exist");
  return *j;
}

MeasurementMap theta_map(const StateSpace& S, const PropertyRecord& l) {
  MeasurementMap m;
  m.domain = l.Q;
  m.to.assign(S.poset.size(), -1);
  for (auto s = l.Q.find_first(); s != StateSet::npos; s = l.Q.find_next(s))
    m.to[s] = measure_theta(S, l, static_cast<int>(s));
  return m;
}

MapFlags validate_measurement_map(const StateSpace& S, const MeasurementMap& m,
                                  const PropertyRecord& l,
                                  const std::vector<PropertyRecord>& context) {
  const Poset& p = S.poset;
  if (m.domain != l.Q)
    throw DomainMismatchError("map domain differs from the questionable region of " + l.id);
  MapFlags f;
  f.monotone = true;
  for (auto a = m.domain.find_first(); a != StateSet::npos && f.monotone;
       a = m.domain.find_next(a))
    for (auto b = m.domain.find_first(); b != StateSet::npos && f.monotone;
         b = m.domain.find_next(b))
      if (p.leq(static_cast<int>(a), static_cast<int>(b)) &&
          !p.leq(m.to[a], m.to[b]))
        f.monotone = false;

  f.first_kind = true;
  for (auto s = m.domain.find_first(); s != StateSet::npos; s = m.domain.find_next(s)) {
    if (!l.A.test(m.to[s])) f.first_kind = false;
    if (l.A.test(s) && m.to[s] != static_cast<int>(s)) f.first_kind = false;
  }

  f.ideal = true;
  for (const PropertyRecord& other : context) {
    if (!other.flags.testable || (l.A & other.A).none()) continue;
    const StateSet dom = m.domain & other.A;
    for (auto s = dom.find_first(); s != StateSet::npos; s = dom.find_next(s))
      if (!other.A.test(m.to[s])) f.ideal = false;
  }

  f.minimal = f.first_kind;
  for (auto s = l.K.find_first(); s != StateSet::npos && f.minimal; s = l.K.find_next(s)) {
    const auto j = p.join2(l.sigma, static_cast<int>(s));
    if (!j || m.to[s] != *j) f.minimal = false;
  }
  return f;
}

std::optional<MeasurementMap> find_minimal_map(const StateSpace& S, const PropertyRecord& l) {
  const Poset& p = S.poset;
  MeasurementMap m;
  m.domain = l.Q;
  m.to.assign(p.size(), -1);
  // values on the consistency domain are forced by the minimality contract
  for (auto s = l.K.find_first(); s != StateSet::npos; s = l.K.find_next(s)) {
    const auto j = p.join2(l.sigma, static_cast<int>(s));
    if (!j) return std::nullopt;
    m.to[s] = *j;
  }
  std::vector<int> free;
  for (auto s = l.Q.find_first(); s != StateSet::npos; s = l.Q.find_next(s))
    if (!l.K.test(s)) free.push_back(static_cast<int>(s));
  std::vector<int> targets = p.elements_of(l.A);

  auto consistent_at = [&](int s) {
    for (auto t = l.Q.find_first(); t != StateSet::npos; t = l.Q.find_next(t)) {
      if (m.to[t] < 0) continue;
      if (p.leq(s, static_cast<int>(t)) && !p.leq(m.to[s], m.to[t])) return false;
      if (p.leq(static_cast<int>(t), s) && !p.leq(m.to[t], m.to[s])) return false;
    }
    return true;
  };
  // forced part must itself be monotone
  for (auto s = l.K.find_first(); s != StateSet::npos; s = l.K.find_next(s))
    if (!consistent_at(static_cast<int>(s))) return std::nullopt;

  std::function<bool(std::size_t)> assign = [&](std::size_t k) {
    if (k == free.size()) return true;
    const int s = free[k];
    for (int target : targets) {
      m.to[s] = target;
      if (consistent_at(s) && assign(k + 1)) return true;
    }
    m.to[s] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return m;
}

CheckResult theorem_min_eq_qcl(const StateSpace& S, const PropertyRecord& l,
                               const std::vector<PropertyRecord>& context,
                               int oracle_limit) {
  if (!l.flags.testable)
    return CheckResult::fail(AxiomId::MinimalEqQuasiClassical, {l.id}, "property not testable");
  if (l.flags.quasi_classical) {
    const MeasurementMap theta = theta_map(S, l);
    std::vector<PropertyRecord> ctx = context;
    ctx.push_back(l);
    const MapFlags f = validate_measurement_map(S, theta, l, ctx);
    if (f.monotone && f.first_kind && f.ideal && f.minimal)
      return CheckResult::pass(AxiomId::MinimalEqQuasiClassical,
                               "constructed map is ideal first-kind minimal");
    return CheckResult::fail(AxiomId::MinimalEqQuasiClassical, {l.id},
                             "constructed map fails a flag");
  }
  if (S.poset.size() > oracle_limit)
    return CheckResult::pass(AxiomId::MinimalEqQuasiClassical, "criterion-only");
  if (find_minimal_map(S, l))
    return CheckResult::fail(AxiomId::MinimalEqQuasiClassical, {l.id},
                             "minimal map exists for a non-quasi-classical property");
  return CheckResult::pass(AxiomId::MinimalEqQuasiClassical,
                           "map search confirms no minimal map");
}

std::optional<SuccessionResult> succession(const StateSpace& S, const PropertyRecord& l1,
                                           const PropertyRecord& l2) {
  const Poset& p = S.poset;
  if (!l1.flags.minimal || !l2.flags.minimal)
    throw NotQuasiClassicalError("succession requires minimally disturbing properties");
  const StateSet a12 = l1.A & l2.A;
  if (a12.none()) return std::nullopt;

  SuccessionResult out;
  const auto sigma12 = p.join2(l1.sigma, l2.sigma);
  if (!sigma12) throw JoinError("compatible thresholds without join");
  out.record.id = l1.id + "*" + l2.id;
  out.record.sigma = *sigma12;
  out.record.A = a12;
  out.record.K = down_closure(p, a12);

  const MeasurementMap t1 = theta_map(S, l1);
  const MeasurementMap t2 = theta_map(S, l2);
  StateSet q12(p.size());
  for (auto s = l1.Q.find_first(); s != StateSet::npos; s = l1.Q.find_next(s))
    if (l2.Q.test(t1.to[s])) q12.set(s);
  out.record.Q = q12;
  // principal complement, when it exists, names the conjugate threshold
  const StateSet rest = ~q12;
  if (rest.any()) {
    const int m = p.meet_of(rest);
    if (rest.test(m) && p.up_set(m) == rest) out.record.sigma_bar = m;
  }
  out.record.flags.testable = true;
  out.record.flags.quasi_classical = is_scott_ideal(S, out.record.K, out.record.Q).ok();
  out.record.flags.minimal = out.record.flags.quasi_classical;

  out.map.domain = q12;
  out.map.to.assign(p.size(), -1);
  for (auto s = q12.find_first(); s != StateSet::npos; s = q12.find_next(s))
    out.map.to[s] = t2.to[t1.to[s]];
  return out;
}

bool are_compatible(const StateSpace& S, const std::vector<const PropertyRecord*>& props) {
  StateSet common = S.poset.full_set();
  for (const PropertyRecord* l : props) {
    if (!l->flags.testable) return false;
    common &= l->A;
  }
  return common.any();
}

bool are_compatible(const StateSpace& S, const std::vector<PropertyRecord>& props) {
  std::vector<const PropertyRecord*> ptrs;
  for (const auto& l : props) ptrs.push_back(&l);
  return are_compatible(S, ptrs);
}

CheckResult check_specker(const StateSpace& S, const std::vector<PropertyRecord>& props) {
  bool pairwise = true;
  for (std::size_t i = 0; i < props.size() && pairwise; ++i)
    for (std::size_t j = i + 1; j < props.size() && pairwise; ++j)
      pairwise = are_compatible(
          S, std::vector<const PropertyRecord*>{&props[i], &props[j]});
  const bool joint = are_compatible(S, props);
  CheckResult out = CheckResult::pass(AxiomId::Specker);
  if (pairwise != joint) {
    std::vector<std::string> ids;
    for (const auto& l : props) ids.push_back(l.id);
    out = CheckResult::fail(AxiomId::Specker, ids,
                            std::string("pairwise=") + (pairwise ? "true" : "false") +
                                " joint=" + (joint ? "true" : "false"));
  }
  out.report_mode = true;
  return out;
}

DescriptionSummary coherence_descriptions(const StateSpace& S,
                                          const std::vector<PropertyRecord>& props) {
  if (props.size() > 20) throw SizeLimitError("more than 20 properties");
  const Poset& p = S.poset;
  DescriptionSummary out;

  // every jointly compatible family is contained in the family of some
  // witness state, so maximal families are the maximal witness families
  std::vector<std::vector<int>> witness_families;
  for (int s = 0; s < p.size(); ++s) {
    std::vector<int> fam;
    for (std::size_t k = 0; k < props.size(); ++k)
      if (props[k].A.test(s)) fam.push_back(static_cast<int>(k));
    if (!fam.empty()) witness_families.push_back(std::move(fam));
  }
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (const auto& fam : witness_families) {
    bool maximal = true;
    for (const auto& other : witness_families)
      if (other != fam && contains(other, fam)) maximal = false;
    if (maximal &&
        std::find(out.maximal.begin(), out.maximal.end(), fam) == out.maximal.end())
      out.maximal.push_back(fam);
  }
  if (out.maximal.empty()) out.maximal.push_back({});  // only the empty description
  std::sort(out.maximal.begin(), out.maximal.end());

  // downward closure, verified on subfamilies of bounded size
  CheckResult down = CheckResult::pass(AxiomId::CoherenceDownward);
  for (const auto& fam : out.maximal) {
    const std::size_t n = fam.size();
    for (std::uint32_t mask = 1; mask < (1u << std::min<std::size_t>(n, 16)); ++mask) {
      if (__builtin_popcount(mask) > 4) continue;
      std::vector<const PropertyRecord*> sub;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) sub.push_back(&props[fam[b]]);
      if (!are_compatible(S, sub)) {
        std::vector<std::string> w;
        for (const auto* l : sub) w.push_back(l->id);
        down = CheckResult::fail(AxiomId::CoherenceDownward, w,
                                 "subfamily of a description is not a description");
        break;
      }
    }
    if (!down.ok()) break;
  }
  out.checks.push_back(down);

  CheckResult single = CheckResult::pass(AxiomId::CoherenceSingleton);
  for (const auto& l : props)
    if (!l.flags.testable) {
      single = CheckResult::fail(AxiomId::CoherenceSingleton, {l.id},
                                 "singleton of an untestable property");
      break;
    }
  out.checks.push_back(single);

  // union of pairwise-joinable descriptions; rests on the Specker equivalence,
  // so reported rather than asserted
  CheckResult uni = CheckResult::pass(AxiomId::CoherenceUnion);
  uni.report_mode = true;
  std::vector<std::vector<int>> pool;
  for (std::size_t k = 0; k < props.size(); ++k) pool.push_back({static_cast<int>(k)});
  for (const auto& fam : out.maximal) pool.push_back(fam);
  const std::size_t pn = std::min<std::size_t>(pool.size(), 16);
  for (std::uint32_t mask = 1; mask < (1u << pn) && uni.ok(); ++mask) {
    if (__builtin_popcount(mask) < 2 || __builtin_popcount(mask) > 3) continue;
    std::vector<const std::vector<int>*> chosen;
    for (std::size_t b = 0; b < pn; ++b)
      if (mask & (1u << b)) chosen.push_back(&pool[b]);
    bool pairwise_joinable = true;
    for (std::size_t i = 0; i < chosen.size() && pairwise_joinable; ++i)
      for (std::size_t j = i + 1; j < chosen.size() && pairwise_joinable; ++j) {
        std::vector<int> u = *chosen[i];
        u.insert(u.end(), chosen[j]->begin(), chosen[j]->end());
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        std::vector<const PropertyRecord*> sub;
        for (int k : u) sub.push_back(&props[k]);
        pairwise_joinable = are_compatible(S, sub);
      }
    if (!pairwise_joinable) continue;
    std::vector<int> all;
    for (const auto* c : chosen) all.insert(all.end(), c->begin(), c->end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<const PropertyRecord*> sub;
    for (int k : all) sub.push_back(&props[k]);
    if (!are_compatible(S, sub)) {
      std::vector<std::string> w;
      for (const auto* l : sub) w.push_back(l->id);
      uni = CheckResult::fail(AxiomId::CoherenceUnion, w,
                              "pairwise-joinable descriptions with incompatible union");
      uni.report_mode = true;
    }
  }
  out.checks.push_back(uni);
  return out;
}

std::optional<GenTest> description_test(const StateSpace& S,
                                        const std::vector<PropertyRecord>& members) {
  const Poset& p = S.poset;
  if (members.empty()) return std::nullopt;
  if (!are_compatible(S, members)) throw Error("description is not jointly compatible");
  StateSet sigmas(p.size()), bars(p.size());
  for (const auto& l : members) {
    if (!l.sigma_bar) throw MissingConjugateError("property " + l.id + " has no conjugate");
    sigmas.set(l.sigma);
    bars.set(*l.sigma_bar);
  }
  const auto join = p.join_of(sigmas);
  if (!join) throw JoinError("compatible description without joined threshold");
  const int meet = p.meet_of(bars);
  if (p.is_consistent2(*join, meet)) return std::nullopt;
  return GenTest{*join, meet};
}

bool is_perfect(const StateSpace& S, const PropertyRecord& l) {
  if (!l.sigma_bar) throw MissingConjugateError("property " + l.id + " has no conjugate");
  if (!l.flags.minimal) return false;
  const PropertyRecord rev = make_property(S, *l.sigma_bar, l.sigma);
  return rev.flags.minimal;
}

CheckResult check_filter_meet_preservation(const StateSpace& S, const PropertyRecord& l) {
  CheckResult out = CheckResult::pass(AxiomId::FilterMeetPreservation);
  out.report_mode = true;
  if (!l.flags.quasi_classical) {
    out.detail = "not quasi-classical; no map to test";
    return out;
  }
  const Poset& p = S.poset;
  const MeasurementMap theta = theta_map(S, l);
  for_each_subset(l.Q, 1, 4, [&](const StateSet& f) {
    if (!is_down_directed_within(p, f)) return true;
    int inf = -1;
    try {
      inf = p.meet_of(f);
    } catch (const NoMeetError&) {
      return true;
    }
    if (!l.Q.test(inf)) return true;
    StateSet images(p.size());
    for (auto s = f.find_first(); s != StateSet::npos; s = f.find_next(s))
      images.set(theta.to[s]);
    int rhs = -1;
    try {
      rhs = p.meet_of(images);
    } catch (const NoMeetError&) {
    }
    if (theta.to[inf] != rhs) {
      std::vector<std::string> w;
      for (int s : p.elements_of(f)) w.push_back(p.name(s));
      out = CheckResult::fail(AxiomId::FilterMeetPreservation, w,
                              "map does not commute with the filtered infimum");
      out.report_mode = true;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace qchu
