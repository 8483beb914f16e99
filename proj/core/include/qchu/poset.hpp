#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchu/check.hpp"
#include "qchu/errors.hpp"

namespace qchu {

/// Set of element indices of a fixed Poset.
using StateSet = boost::dynamic_bitset<>;

enum class PureType { Type1, Type2 };

struct PureClassification {
  StateSet pure;
  // type[i] meaningful only when pure[i] is set
  std::vector<PureType> type;
};

/// Finite pointed poset over named elements. The order relation is stored as
/// dense up/down bitsets; covers are computed once at construction. Immutable
/// after construction, so freely shareable.
class Poset {
 public:
  /// Empty placeholder; assign a built poset before use.
  Poset() = default;

  /// Reflexive-transitive closure of `pairs` (each pair lower ⊑ upper).
  /// Throws CycleError if the closure violates antisymmetry, NoBottomError if
  /// there is no unique minimum.
  static Poset from_pairs(std::vector<std::string> elements,
                          const std::vector<std::pair<std::string, std::string>>& pairs);

  /// Builds from a full relation; leq[i*n+j] means element i ⊑ element j.
  /// Validates reflexivity, antisymmetry, transitivity and unique bottom.
  static Poset from_relation(std::vector<std::string> elements, std::vector<bool> leq);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a named element, or -1.
  int index(const std::string& name) const;
  int bottom() const { return bottom_; }

  bool leq(int i, int j) const { return up_[i].test(j); }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  const StateSet& up_set(int i) const { return up_[i]; }
  const StateSet& down_set(int i) const { return down_[i]; }

  StateSet empty_set() const { return StateSet(size()); }
  StateSet full_set() const { StateSet s(size()); s.set(); return s; }
  StateSet singleton(int i) const { StateSet s(size()); s.set(i); return s; }

  StateSet upper_bounds(const StateSet& subset) const;
  StateSet lower_bounds(const StateSet& subset) const;

  /// Greatest lower bound of a nonempty subset. Throws NoMeetError when the
  /// lower-bound set has no greatest element.
  int meet_of(const StateSet& subset) const;
  int meet2(int i, int j) const;

  /// Least upper bound; nullopt when the subset has no upper bound at all
  /// (inconsistent). Upper bounds without a least one throw AmbiguousJoinError.
  /// The empty join is the bottom element.
  std::optional<int> join_of(const StateSet& subset) const;
  std::optional<int> join2(int i, int j) const;

  bool is_consistent(const StateSet& subset) const;
  bool is_consistent2(int i, int j) const;

  /// Every strict predecessor of each argument is consistent with the other.
  bool is_quasi_consistent(int i, int j) const;

  const std::vector<std::pair<int, int>>& cover_relation() const { return covers_; }
  bool covers(int lower, int upper) const { return cover_up_[lower].test(upper); }
  /// Atoms: covers of the bottom element.
  StateSet atoms() const { return cover_up_[bottom_]; }
  StateSet maximal() const;

  /// Completely meet-irreducible elements with their Type 1 (maximal) /
  /// Type 2 (strict up-set has a minimum) classification. The bottom element
  /// is not a candidate unless it is the only element.
  const PureClassification& pure_states() const { return pure_; }

  /// Pure states lying above every element of `subset`; all pure states when
  /// `subset` is empty.
  StateSet underline_of(const StateSet& subset) const;

  /// One axiom as an executable check. `exhaustive` replaces the
  /// trivial-finite short-circuit by a verification of the definitional form.
  CheckResult check_axiom(AxiomId id, bool exhaustive = false) const;

  /// The projective-domain bundle plus StrongAtomicity and NoType2.
  std::vector<CheckResult> check_projective_domain(bool exhaustive = false) const;

  std::vector<std::string> witness_names(std::initializer_list<int> idx) const;
  std::vector<int> elements_of(const StateSet& s) const;

  bool same_elements(const Poset& other) const;

 private:
  void finish_construction();  // covers, pure states, bottom validation

  // noexcept lattice-op variants used by the axiom scans:
  // kAbsent: no bound at all; kAmbiguous: bounds but no extremum.
  static constexpr int kAbsent = -1;
  static constexpr int kAmbiguous = -2;
  int meet_opt(const StateSet& subset) const;
  int join_opt(const StateSet& subset) const;
  int meet2_opt(int i, int j) const;
  int join2_opt(int i, int j) const;

  CheckResult check_bounded_complete() const;
  CheckResult check_strong_atomicity() const;
  CheckResult check_relative_complement() const;
  CheckResult check_lower_semimodular() const;
  CheckResult check_cond_upper_semimodular() const;
  CheckResult check_cond_modular() const;
  CheckResult check_atomistic() const;
  CheckResult check_no_type2() const;
  CheckResult check_join_continuity() const;  // REPORT
  CheckResult check_trivial_finite(AxiomId id, bool exhaustive) const;

  friend class PosetBuilder;

  std::vector<std::string> names_;
  std::vector<StateSet> up_;    // up_[i] = { j : i ⊑ j }, includes i
  std::vector<StateSet> down_;  // down_[i] = { j : j ⊑ i }
  std::vector<std::pair<int, int>> covers_;
  std::vector<StateSet> cover_up_;  // cover_up_[i] = { j : i ⋖ j }
  PureClassification pure_;
  int bottom_ = -1;
};

/// All subsets of `universe` with size in [min_size, max_size], visited in a
/// deterministic order (increasing bitmask over the universe's elements).
void for_each_subset(const StateSet& universe, int min_size, int max_size,
                     const std::function<bool(const StateSet&)>& visit);

}  // namespace qchu
