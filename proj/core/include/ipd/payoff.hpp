#ifndef IPD_PAYOFF_HPP
#define IPD_PAYOFF_HPP

#include <cstdint>
#include <string>

#include "ipd/move.hpp"

namespace ipd {

using Points = std::int64_t;

// The four outcome values of the one-shot game. A valid matrix satisfies
// S < P < R < T and 2R > T + S.
struct PayoffMatrix {
  Points S = 0;
  Points P = 1;
  Points R = 3;
  Points T = 5;

  bool operator==(const PayoffMatrix&) const = default;

  // Empty string when valid, otherwise the violated inequality.
  std::string violation() const;
  bool valid() const { return violation().empty(); }

  // Throws std::invalid_argument naming the violated inequality.
  void validate() const;

  static constexpr PayoffMatrix standard() { return {}; }
};

constexpr Points payoff(const PayoffMatrix& m, Move mine, Move theirs) {
  if (mine == Move::Cooperate) return theirs == Move::Cooperate ? m.R : m.S;
  return theirs == Move::Cooperate ? m.T : m.P;
}

}  // namespace ipd

#endif  // IPD_PAYOFF_HPP
