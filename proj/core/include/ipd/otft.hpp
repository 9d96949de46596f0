#ifndef IPD_OTFT_HPP
#define IPD_OTFT_HPP

#include <optional>

#include "ipd/move.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

// OmegaTitForTat: TitForTat with a deadlock tracker that forgives
// out-of-phase retaliation, and a randomness tracker that switches to
// permanent defection against erratic or exploiting opponents.
struct OtftState {
  static constexpr int kDeadlockThreshold = 3;
  static constexpr int kRandomnessThreshold = 8;

  int deadlock_counter = 0;
  // Unbounded in both directions.
  int randomness_measure = 0;
  Move opponents_previous_move = Move::Cooperate;
  Move my_previous_move = Move::Cooperate;

  bool operator==(const OtftState&) const = default;
};

// One OTFT decision. An empty `opponent_last` (turn 1) answers C and leaves
// the trackers untouched. Otherwise, in order:
//   1. a pending deadlock break answers C twice, then clears the tracker;
//   2. else the randomness tracker is updated (-1 when the opponent
//      cooperated on both of its last two moves, +1 when its move changed,
//      +1 when it differed from our previous move); at the threshold the
//      answer is D, otherwise TFT while counting alternations;
//   3. both last moves are memorized.
Move otft_next_move(OtftState& state, std::optional<Move> opponent_last);

class OmegaTitForTat final : public Strategy {
 public:
  std::string_view name() const override { return "OTFT"; }
  void reset(std::uint64_t) override { state_ = {}; }
  Move next_move(std::optional<Move> opponent_last) override {
    return otft_next_move(state_, opponent_last);
  }

  const OtftState& state() const { return state_; }

 private:
  OtftState state_;
};

}  // namespace ipd

#endif  // IPD_OTFT_HPP
