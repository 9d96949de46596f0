#include "ipd/otft.hpp"

namespace ipd {

Move otft_next_move(OtftState& s, std::optional<Move> opponent_last) {
  if (!opponent_last) return Move::Cooperate;
  const Move opp = *opponent_last;

  Move reply;
  if (s.deadlock_counter >= OtftState::kDeadlockThreshold) {
    // Assumed deadlock: cooperate twice, then clear.
    reply = Move::Cooperate;
    s.deadlock_counter =
        s.deadlock_counter == OtftState::kDeadlockThreshold ? OtftState::kDeadlockThreshold + 1 : 0;
  } else {
    if (opp == Move::Cooperate && s.opponents_previous_move == Move::Cooperate) --s.randomness_measure;
    if (opp != s.opponents_previous_move) ++s.randomness_measure;
    if (opp != s.my_previous_move) ++s.randomness_measure;

    if (s.randomness_measure >= OtftState::kRandomnessThreshold) {
      reply = Move::Defect;
    } else {
      reply = opp;
      if (opp != s.opponents_previous_move)
        ++s.deadlock_counter;
      else
        s.deadlock_counter = 0;
    }
  }

  s.opponents_previous_move = opp;
  s.my_previous_move = reply;
  return reply;
}

}  // namespace ipd
