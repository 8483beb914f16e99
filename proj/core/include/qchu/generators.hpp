#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchu/chu.hpp"
#include "qchu/state_space.hpp"

namespace qchu {

/// Proper subsets of {1..n} ordered by inclusion, star = set complement.
/// 2 ≤ n ≤ 6.
StateSpace gen_boolean(int n);

/// Bottom plus 2n atoms in star-paired couples. 1 ≤ n ≤ 8.
StateSpace gen_mo(int n);

/// Chain of k elements (no scheme). 3 ≤ k ≤ 27.
StateSpace gen_chain(int k);

/// Pentagon with bottom and top (no scheme).
StateSpace gen_n5();

/// Single-element space with an empty scheme.
StateSpace gen_trivial();

/// Product construction: complete both operands (add a top where missing),
/// take the product order, remove the product top; star componentwise.
StateSpace gen_product(const StateSpace& a, const StateSpace& b,
                       std::size_t max_size = 512);

/// State space from a bounded lattice with top: validates completeness,
/// modularity, atomisticity, that completely meet-irreducibles are coatoms
/// and join-irreducibles are atoms, and that star is an orthocomplementation;
/// returns the lattice minus its top.
StateSpace from_lattice(const Poset& lattice, const std::vector<int>& star);

/// Deterministic pseudo-random three-valued matrix; same seed, same space.
/// Sizes at most 64.
ChuSpace random_chu(std::uint64_t seed, int n_prep, int n_test);

/// The 64-bit splitmix generator behind random_chu (constants in the README).
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

}  // namespace qchu
