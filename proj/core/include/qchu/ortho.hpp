#pragma once

#include <string>
#include <vector>

#include "qchu/measurement.hpp"
#include "qchu/state_space.hpp"

namespace qchu {

/// Quasi-consistent but inconsistent pair of non-bottom states.
bool is_discriminating(const StateSpace& S, int sigma, int sigma_prime);

/// Complete / irredundant / closed checks, plus a per-pair discriminating
/// check when requested.
std::vector<CheckResult> validate_scheme(const StateSpace& S, const Scheme& U,
                                         bool require_discriminating);

/// Scheme {(σ, σ*)} from a star operation total on non-bottom states.
/// Validates that star is an involutive order-reversing map with every pair
/// discriminating; throws NotOrthocomplementError with a witness otherwise.
Scheme scheme_from_star(const StateSpace& S, const std::vector<int>& star);

/// Some scheme test separates the two states into its yes and no regions.
bool orthogonal(const StateSpace& S, const Scheme& U, int s1, int s2);

/// Meet of the orthogonal filter of a non-bottom state. Throws EmptyPerpError
/// when the filter is empty (incomplete scheme), NotOrthocomplementError when
/// the filter is not principal over the result.
int star_of(const StateSpace& S, const Scheme& U, int state);

/// Involution, order reversal, De Morgan, double-perp closure and the
/// unique-pair consequence of irredundancy, exhaustively over subsets of
/// size ≤ 4 plus every principal up-set.
std::vector<CheckResult> check_star_laws(const StateSpace& S, const Scheme& U);

/// Pure states orthogonal to every member of X (X ⊆ pure states); the whole
/// pure universe for empty X.
StateSet perp_of(const StateSpace& S, const Scheme& U, const StateSet& X);

/// Double perp within the pure states.
StateSet perp_closure(const StateSpace& S, const Scheme& U, const StateSet& X);

/// The ortho-lattice of ortho-closed subsets of pure states. Sets are stored
/// as bitsets over the full element universe, restricted to pure states, in a
/// canonical order (size, then lexicographic on members).
struct ClosedSetLattice {
  StateSet universe;                   // the pure states
  std::vector<StateSet> closed;        // all ortho-closed subsets
  std::vector<int> ortho;              // index of the orthocomplement
  std::vector<int> atom_sets;          // indices of the singleton sets
  std::vector<std::string> names;      // element names, for rendering
  std::vector<StateSet> orth_adjacent; // per element: orthogonal pure states

  int index_of(const StateSet& x) const;
  int meet(int a, int b) const;  // intersection
  int join(int a, int b) const;  // closure of the union
  int bottom_index() const { return index_of(StateSet(universe.size())); }
  int top_index() const { return index_of(universe); }
  StateSet closure(const StateSet& x) const;  // double perp via adjacency
};

ClosedSetLattice build_closed_set_lattice(const StateSpace& S, const Scheme& U,
                                          std::size_t max_closed = std::size_t(1) << 16);

/// Complete ortho-lattice laws, atomicity, atomisticity, orthomodularity,
/// covering, exchange and irreducibility.
std::vector<CheckResult> check_hilbert_lattice(const ClosedSetLattice& L);

/// Separation, representation and superposition over the pure states.
std::vector<CheckResult> check_kripke_frame(const StateSpace& S, const Scheme& U);

}  // namespace qchu
