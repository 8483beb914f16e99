#pragma once

// Definitional brute-force twins of the optimized predicates. Everything here
// quantifies over subsets or tuples directly from the definitions, using only
// the raw order relation -- no cover cache, no bitset shortcuts, no derived
// state. The production code must agree with these on every small fixture.

#include <optional>
#include <vector>

#include "qchu/measurement.hpp"
#include "qchu/ortho.hpp"
#include "qchu/poset.hpp"
#include "qchu/state_space.hpp"

namespace qchu::oracle {

// subsets as index vectors, enumerated in increasing-mask order
std::vector<std::vector<int>> all_subsets(int n, bool nonempty);

std::optional<int> naive_meet(const Poset& p, const std::vector<int>& subset);
std::optional<int> naive_join(const Poset& p, const std::vector<int>& subset);
bool naive_consistent(const Poset& p, const std::vector<int>& subset);
bool naive_quasi_consistent(const Poset& p, int a, int b);

std::vector<std::pair<int, int>> cover_relation(const Poset& p);

// completely meet-irreducible elements straight from the definition
// (sigma = meet of S implies sigma in S, over every nonempty subset S);
// Type 1 iff maximal
PureClassification pure_states(const Poset& p);

// axiom checks quantified over all subsets / tuples; returns pass/fail only
bool check_axiom(const Poset& p, AxiomId id);

// a down-set sub of the down-set ambient is a Scott ideal: every finite
// subset of sub bounded inside ambient is bounded inside sub
bool scott_ideal(const Poset& p, const StateSet& sub, const StateSet& ambient);

// all subsets X of the pure states with X = X-perp-perp
std::vector<StateSet> closed_sets(const StateSpace& S, const Scheme& U);

// minimal-map existence by unrestricted search over all assignments of the
// questionable region (values constrained to the actuality filter only by
// the first-kind clause, not pre-forced)
bool minimal_map_exists(const StateSpace& S, const PropertyRecord& l);

}  // namespace qchu::oracle
