#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qchu/poset.hpp"

namespace qchu {

/// A collection of generalized two-sided tests, each stored as a pair of
/// state indices (certainly-yes threshold, certainly-no threshold), together
/// with the star operation when the collection was derived from one.
/// star[i] is the partner index for non-bottom i, -1 where undefined.
struct Scheme {
  std::vector<std::pair<int, int>> pairs;
  std::optional<std::vector<int>> star;

  int find_pair(int sigma, int sigma_prime) const {
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k)
      if (pairs[k].first == sigma && pairs[k].second == sigma_prime) return k;
    return -1;
  }
  /// First pair whose yes-threshold is `sigma`, -1 if none.
  int pair_with_first(int sigma) const {
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k)
      if (pairs[k].first == sigma) return k;
    return -1;
  }
};

/// A finite pointed poset of states, optionally equipped with a scheme of
/// generalized tests. All lattice structure lives on the poset.
struct StateSpace {
  Poset poset;
  std::optional<Scheme> scheme;

  const Scheme& require_scheme() const {
    if (!scheme) throw Error("state space has no scheme");
    return *scheme;
  }
};

}  // namespace qchu
