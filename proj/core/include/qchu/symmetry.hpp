#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qchu/ortho.hpp"

namespace qchu {

/// A transaction between two state spaces with schemes: a forward map on
/// states and a backward map on scheme tests. f_tests is indexed by target
/// pair position; values are arbitrary source state pairs (validation decides
/// whether they land in the source scheme).
struct Dictionary {
  std::shared_ptr<const StateSpace> source;
  std::shared_ptr<const StateSpace> target;
  std::vector<int> f_states;                      // source state -> target state
  std::vector<std::pair<int, int>> f_tests;       // target pair k -> source pair

  const Scheme& source_scheme() const { return source->require_scheme(); }
  const Scheme& target_scheme() const { return target->require_scheme(); }
};

/// The adjointness condition: evaluating a target test on a mapped state
/// agrees with evaluating the pulled-back test on the original state.
CheckResult check_chu_morphism(const Dictionary& D);

/// Five checks: measurement compatibility (center-dot), succession
/// preservation, injectivity, surjectivity and scheme preservation.
/// Throws PartialityMismatchError when measurement domains disagree under f.
std::vector<CheckResult> check_symmetry(const Dictionary& D);

/// Composite dictionary; throws SpaceMismatchError unless D1.target and
/// D2.source agree.
Dictionary compose(const Dictionary& D1, const Dictionary& D2);

/// Meet of the source states evaluating Yes on the pulled-back test of the
/// target state's unique scheme pair; verifies the Galois law against
/// f_states. Throws EmptyFilterError when the filter is empty.
int lower_adjoint(const Dictionary& D, int target_state);

/// Three checks: minimality pulls back, f_tests commutes with conjugation and
/// f_states with star, orthogonality is preserved (both ways when bijective).
std::vector<CheckResult> check_preservation(const Dictionary& D);

struct InducedLatticeMap {
  std::vector<int> forward;   // source closed-set index -> target index
  std::vector<int> adjoint;   // target closed-set index -> source index
  CheckResult verdict;
};

/// The closed-set map c ↦ ⋁ f(c) together with its right adjoint built from
/// the lower adjoint of the dictionary; verifies injectivity, suprema
/// preservation, atom preservation, orthocomplement preservation and the
/// adjunction law.
InducedLatticeMap induced_lattice_map(const Dictionary& D, const ClosedSetLattice& LS,
                                      const ClosedSetLattice& LT);

/// Swap map on a pair.
inline std::pair<int, int> bar_pair(const std::pair<int, int>& t) {
  return {t.second, t.first};
}

}  // namespace qchu
