#include "qchu/chu.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qchu {

int ChuSpace::prep_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(preparations.size()); ++i)
    if (preparations[i] == name) return i;
  return -1;
}

int ChuSpace::test_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(tests.size()); ++i)
    if (tests[i] == name) return i;
  return -1;
}

std::vector<TruthValue> ChuSpace::column(int t) const {
  std::vector<TruthValue> c(preparations.size());
  for (std::size_t p = 0; p < preparations.size(); ++p) c[p] = eval[p][t];
  return c;
}

int ChuSpace::conjugate_test(int t) {
  std::vector<TruthValue> bar(preparations.size());
  for (std::size_t p = 0; p < preparations.size(); ++p) bar[p] = truth_bar(eval[p][t]);
  for (int u = 0; u < static_cast<int>(tests.size()); ++u)
    if (column(u) == bar) return u;
  std::string name = tests[t] + "~";
  while (test_index(name) >= 0) name += "~";
  tests.push_back(name);
  for (std::size_t p = 0; p < preparations.size(); ++p) eval[p].push_back(bar[p]);
  return static_cast<int>(tests.size()) - 1;
}

std::vector<TruthValue> ChuSpace::mix(const boost::dynamic_bitset<>& preps) const {
  assert(preps.any());
  std::vector<TruthValue> row(tests.size());
  bool first = true;
  for (auto p = preps.find_first(); p != boost::dynamic_bitset<>::npos;
       p = preps.find_next(p)) {
    for (std::size_t t = 0; t < tests.size(); ++t)
      row[t] = first ? eval[p][t] : truth_meet(row[t], eval[p][t]);
    first = false;
  }
  return row;
}

namespace {

std::string fresh_name(const ChuSpace& space, std::string name) {
  while (space.prep_index(name) >= 0) name.insert(name.begin(), '~');
  return name;
}

}  // namespace

ChuSpace saturate(const ChuSpace& space, std::size_t max_rows) {
  ChuSpace out = space;
  auto has_row = [&](const std::vector<TruthValue>& row) {
    return std::find(out.eval.begin(), out.eval.end(), row) != out.eval.end();
  };
  // pairwise meets reach every finite mixture
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = out.eval.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<TruthValue> row(out.tests.size());
        for (std::size_t t = 0; t < out.tests.size(); ++t)
          row[t] = truth_meet(out.eval[i][t], out.eval[j][t]);
        if (has_row(row)) continue;
        if (out.eval.size() >= max_rows)
          throw SizeLimitError("saturation exceeds " + std::to_string(max_rows) + " rows");
        out.preparations.push_back(
            fresh_name(out, out.preparations[i] + "&" + out.preparations[j]));
        out.eval.push_back(std::move(row));
        grew = true;
      }
    }
  }
  std::vector<TruthValue> bot(out.tests.size(), TruthValue::Indeterminate);
  if (!has_row(bot)) {
    if (out.eval.size() >= max_rows)
      throw SizeLimitError("saturation exceeds " + std::to_string(max_rows) + " rows");
    out.preparations.push_back(fresh_name(out, "_bot"));
    out.eval.push_back(std::move(bot));
  }
  return out;
}

StateChu quotient(const ChuSpace& space) {
  StateChu out;
  out.tests = space.tests;
  std::vector<std::vector<TruthValue>> rows;
  for (int p = 0; p < static_cast<int>(space.preparations.size()); ++p) {
    const auto& row = space.eval[p];
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
      rows.push_back(row);
      out.rep.push_back(p);
    }
  }
  const int n = static_cast<int>(rows.size());
  bool has_bottom = false;
  for (const auto& row : rows)
    has_bottom |= std::all_of(row.begin(), row.end(),
                              [](TruthValue v) { return v == TruthValue::Indeterminate; });
  if (!has_bottom) throw NoBottomRowError("no all-indeterminate row; saturate first");

  std::vector<bool> leq(static_cast<std::size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t t = 0; t < out.tests.size() && le; ++t)
        le = truth_leq(rows[i][t], rows[j][t]);
      leq[i * n + j] = le;
    }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(space.preparations[out.rep[i]]);
  out.states = Poset::from_relation(std::move(names), std::move(leq));
  out.eval = std::move(rows);

  // monotonicity of the evaluation in the state argument holds by
  // construction of the order; keep the assertion as a guard
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (out.states.leq(i, j))
        for (std::size_t t = 0; t < out.tests.size(); ++t)
          assert(truth_leq(out.eval[i][t], out.eval[j][t]));
  return out;
}

std::vector<std::vector<int>> property_quotient(const ChuSpace& space) {
  std::vector<std::vector<int>> classes;
  std::vector<std::vector<TruthValue>> reps;
  for (int t = 0; t < static_cast<int>(space.tests.size()); ++t) {
    const auto col = space.column(t);
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      if (reps[k] == col) {
        classes[k].push_back(t);
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(col);
      classes.push_back({t});
    }
  }
  return classes;
}

std::pair<StateSet, StateSet> StateChu::actual_and_questionable(int t) const {
  const int n = states.size();
  StateSet a(n), q(n);
  for (int s = 0; s < n; ++s) {
    if (eval[s][t] == TruthValue::Yes) a.set(s);
    if (eval[s][t] != TruthValue::No) q.set(s);
  }
  return {a, q};
}

std::optional<int> StateChu::property_state(int t) const {
  const auto [a, q] = actual_and_questionable(t);
  if (a.none()) return std::nullopt;
  StateSet lb = states.lower_bounds(a);
  int sigma = -1;
  for (auto m = lb.find_first(); m != StateSet::npos; m = lb.find_next(m))
    if (lb.is_subset_of(states.down_set(static_cast<int>(m)))) {
      sigma = static_cast<int>(m);
      break;
    }
  if (sigma < 0 || !a.test(sigma))
    throw NotPrincipalError("certainly-yes set of test " + tests[t] +
                            " is not a principal filter");
  return sigma;
}

CheckResult StateChu::check_biextensional(const std::vector<int>& test_subset) const {
  const int n = states.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool same = true;
      for (int t : test_subset) same &= eval[i][t] == eval[j][t];
      if (same)
        return CheckResult::fail(AxiomId::BiExtensional,
                                 {states.name(i), states.name(j)},
                                 "states indistinguishable on the given tests");
    }
  for (std::size_t a = 0; a < test_subset.size(); ++a)
    for (std::size_t b = a + 1; b < test_subset.size(); ++b) {
      bool same = true;
      for (int s = 0; s < n; ++s) same &= eval[s][test_subset[a]] == eval[s][test_subset[b]];
      if (same)
        return CheckResult::fail(AxiomId::BiExtensional,
                                 {tests[test_subset[a]], tests[test_subset[b]]},
                                 "tests with identical columns");
    }
  return CheckResult::pass(AxiomId::BiExtensional);
}

TruthValue eval_pair(const Poset& states, int sigma, int sigma_prime, int state) {
  if (states.leq(sigma, state)) return TruthValue::Yes;
  if (states.leq(sigma_prime, state)) return TruthValue::No;
  return TruthValue::Indeterminate;
}

GenTest make_generalized_test(const Poset& states, int sigma, int sigma_prime) {
  if (sigma == states.bottom() || sigma_prime == states.bottom())
    throw ConsistentPairError("generalized test thresholds must be non-bottom");
  if (states.is_consistent2(sigma, sigma_prime))
    throw ConsistentPairError("thresholds " + states.name(sigma) + ", " +
                              states.name(sigma_prime) + " are consistent");
  return GenTest{sigma, sigma_prime};
}

}  // namespace qchu
