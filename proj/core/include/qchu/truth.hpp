#pragma once

#include <cstdint>
#include <string>

namespace qchu {

/// The flat three-valued information domain: Indeterminate below the two
/// determinate answers, Yes and No incomparable.
enum class TruthValue : std::uint8_t { Indeterminate = 0, Yes = 1, No = 2 };

constexpr bool truth_leq(TruthValue u, TruthValue v) {
  return u == TruthValue::Indeterminate || u == v;
}

constexpr TruthValue truth_meet(TruthValue u, TruthValue v) {
  return u == v ? u : TruthValue::Indeterminate;
}

/// Swaps Yes and No; fixes Indeterminate. An involution.
constexpr TruthValue truth_bar(TruthValue u) {
  switch (u) {
    case TruthValue::Yes:
      return TruthValue::No;
    case TruthValue::No:
      return TruthValue::Yes;
    default:
      return TruthValue::Indeterminate;
  }
}

inline char truth_char(TruthValue u) {
  switch (u) {
    case TruthValue::Yes:
      return 'Y';
    case TruthValue::No:
      return 'N';
    default:
      return '_';
  }
}

inline std::string truth_name(TruthValue u) { return std::string(1, truth_char(u)); }

}  // namespace qchu
