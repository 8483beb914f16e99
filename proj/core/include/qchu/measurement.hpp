#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qchu/chu.hpp"
#include "qchu/state_space.hpp"

namespace qchu {

struct PropertyFlags {
  bool testable = false;
  bool quasi_classical = false;
  bool minimal = false;
  bool first_kind = false;
  bool ideal = false;
  bool perfect = false;
};

/// One testable property in threshold form: the certainly-yes threshold, the
/// optional certainly-no threshold, and the derived actuality / questionability
/// / consistency regions.
struct PropertyRecord {
  std::string id;
  int sigma = -1;
  std::optional<int> sigma_bar;
  StateSet A;  // ↑sigma
  StateSet Q;  // states where the outcome is not certainly-no
  StateSet K;  // down-closure of A
  PropertyFlags flags;
};

/// Partial monotone map on states; `to[s]` is -1 outside `domain`.
struct MeasurementMap {
  StateSet domain;
  std::vector<int> to;

  int operator()(int s) const { return to[s]; }
};

struct MapFlags {
  bool monotone = false;
  bool first_kind = false;
  bool ideal = false;
  bool minimal = false;
};

/// Builds the record of the generalized property (sigma, sigma_bar); when
/// sigma_bar is absent the questionable region is the whole space. testable,
/// quasi_classical and minimal flags are filled here.
PropertyRecord make_property(const StateSpace& S, int sigma, std::optional<int> sigma_bar,
                             std::string id = "");

/// All records of a scheme, in pair order; ids are "[Σ,Σ']" strings.
std::vector<PropertyRecord> scheme_properties(const StateSpace& S, const Scheme& U);

/// Down-closure of the actuality filter; also the set of states consistent
/// with the yes-threshold.
StateSet consistency_domain(const StateSpace& S, const PropertyRecord& l);

/// `sub` is a Scott ideal of `ambient`: for every s in ambient, the bounded
/// part of sub below s has a join inside sub. Both must be down-sets of S
/// with sub ⊆ ambient.
CheckResult is_scott_ideal(const StateSpace& S, const StateSet& sub, const StateSet& ambient);

/// Join of the consistency domain below σ; requires the property to be
/// quasi-classical and σ questionable.
int retraction_pi(const StateSpace& S, const PropertyRecord& l, int state);

/// The minimally disturbing measurement: yes-threshold joined with the
/// retraction. Requires quasi-classicality.
int measure_theta(const StateSpace& S, const PropertyRecord& l, int state);

/// measure_theta as a map on the questionable region.
MeasurementMap theta_map(const StateSpace& S, const PropertyRecord& l);

/// Validates a candidate measurement map for the property: monotone,
/// first-kind, ideal (against every property in `context` compatible with l),
/// and minimal. Throws DomainMismatchError unless m.domain equals l.Q.
MapFlags validate_measurement_map(const StateSpace& S, const MeasurementMap& m,
                                  const PropertyRecord& l,
                                  const std::vector<PropertyRecord>& context);

/// Exhaustive search for a map satisfying the minimality contract; nullopt if
/// none exists. Only the values outside the consistency domain are free.
std::optional<MeasurementMap> find_minimal_map(const StateSpace& S, const PropertyRecord& l);

/// Characterization check: a minimal map exists iff the property is
/// quasi-classical, and the constructed map is ideal first-kind. The map
/// search runs only on spaces of at most `oracle_limit` states.
CheckResult theorem_min_eq_qcl(const StateSpace& S, const PropertyRecord& l,
                               const std::vector<PropertyRecord>& context = {},
                               int oracle_limit = 9);

struct SuccessionResult {
  PropertyRecord record;
  MeasurementMap map;  // second measurement after the first
};

/// Succession of two minimally disturbing properties; Absent when their
/// actuality filters are disjoint (incompatible).
std::optional<SuccessionResult> succession(const StateSpace& S, const PropertyRecord& l1,
                                           const PropertyRecord& l2);

/// The actuality filters have a common element.
bool are_compatible(const StateSpace& S, const std::vector<const PropertyRecord*>& props);
bool are_compatible(const StateSpace& S, const std::vector<PropertyRecord>& props);

/// REPORT-mode check that pairwise compatibility of a family coincides with
/// joint compatibility. Never gates a run.
CheckResult check_specker(const StateSpace& S, const std::vector<PropertyRecord>& props);

struct DescriptionSummary {
  std::vector<std::vector<int>> maximal;  // maximal jointly-compatible families
  std::vector<CheckResult> checks;        // downward, singleton, union (REPORT)
};

/// Enumerates maximal jointly-compatible families and verifies the coherence
/// closure properties. Throws SizeLimitError past 20 properties.
DescriptionSummary coherence_descriptions(const StateSpace& S,
                                          const std::vector<PropertyRecord>& props);

/// Conjoint test of a jointly compatible family: join of the yes-thresholds
/// against the meet of the no-thresholds; Absent when that pair is consistent.
std::optional<GenTest> description_test(const StateSpace& S,
                                        const std::vector<PropertyRecord>& members);

/// Both the property and its conjugate admit minimally disturbing measurements.
bool is_perfect(const StateSpace& S, const PropertyRecord& l);

/// REPORT-mode check that the measurement map commutes with filtered infima
/// (down-directed subsets of the questionable region, size ≤ 4).
CheckResult check_filter_meet_preservation(const StateSpace& S, const PropertyRecord& l);

}  // namespace qchu
