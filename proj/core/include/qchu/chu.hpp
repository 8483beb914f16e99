#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchu/check.hpp"
#include "qchu/poset.hpp"
#include "qchu/truth.hpp"

namespace qchu {

/// Finite three-valued Chu space: named preparations (rows) against named
/// yes/no tests (columns).
struct ChuSpace {
  std::vector<std::string> preparations;
  std::vector<std::string> tests;
  std::vector<std::vector<TruthValue>> eval;  // eval[prep][test]

  TruthValue at(int p, int t) const { return eval[p][t]; }
  int prep_index(const std::string& name) const;
  int test_index(const std::string& name) const;
  std::vector<TruthValue> column(int t) const;

  /// Index of the conjugate of test t: an existing test whose column is the
  /// pointwise bar of t's column, or a freshly appended column.
  int conjugate_test(int t);

  /// Pointwise meet of the selected rows (the nonempty mixture).
  std::vector<TruthValue> mix(const boost::dynamic_bitset<>& preps) const;

  bool operator==(const ChuSpace&) const = default;
};

/// Closes the space under mixtures of row subsets and adds the all-indeterminate
/// row; idempotent. Throws SizeLimitError past `max_rows`.
ChuSpace saturate(const ChuSpace& space, std::size_t max_rows = 4096);

/// The separated quotient: one state per distinct evaluation row, ordered
/// pointwise, bottom = the all-indeterminate row.
struct StateChu {
  Poset states;
  std::vector<std::string> tests;
  std::vector<std::vector<TruthValue>> eval;  // eval[state][test]
  std::vector<int> rep;                       // state -> first preparation index

  /// (certainly-yes states, not-certainly-no states) of one test column.
  std::pair<StateSet, StateSet> actual_and_questionable(int t) const;

  /// Minimum of the certainly-yes filter; nullopt when the column has no Yes.
  /// Throws NotPrincipalError when the yes-set is not a principal filter.
  std::optional<int> property_state(int t) const;

  CheckResult check_biextensional(const std::vector<int>& test_subset) const;
};

StateChu quotient(const ChuSpace& space);

/// Groups tests with identical columns; each class keeps column order.
std::vector<std::vector<int>> property_quotient(const ChuSpace& space);

/// A generalized test, stored as its two state thresholds.
struct GenTest {
  int sigma;
  int sigma_prime;
  bool operator==(const GenTest&) const = default;
};

/// Yes above sigma, No above sigma_prime, Indeterminate elsewhere.
TruthValue eval_pair(const Poset& states, int sigma, int sigma_prime, int state);
inline TruthValue eval_pair(const Poset& states, const GenTest& t, int state) {
  return eval_pair(states, t.sigma, t.sigma_prime, state);
}

/// Validates that the pair is admissible (both non-bottom, inconsistent) and
/// returns the descriptor. Throws ConsistentPairError otherwise.
GenTest make_generalized_test(const Poset& states, int sigma, int sigma_prime);

}  // namespace qchu
