#include "ipd/standard.hpp"

#include <stdexcept>
#include <string>

namespace ipd {

bool is_standard_kind(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::AllC:
    case StrategyKind::AllD:
    case StrategyKind::Tft:
    case StrategyKind::Tftt:
    case StrategyKind::Stft:
    case StrategyKind::Grim:
    case StrategyKind::Rand:
    case StrategyKind::Neg:
    case StrategyKind::Pav:
    case StrategyKind::Expl:
      return true;
    default:
      return false;
  }
}

namespace {

Move random_move(Rng& rng, double cooperate_probability) {
  return rng.bernoulli(cooperate_probability) ? Move::Cooperate : Move::Defect;
}

Move decide(StrategyKind kind, StandardState& s, std::optional<Move> opp, Rng& rng,
            double cooperate_probability) {
  switch (kind) {
    case StrategyKind::AllC:
      return Move::Cooperate;
    case StrategyKind::AllD:
      return Move::Defect;
    case StrategyKind::Tft:
      return opp.value_or(Move::Cooperate);
    case StrategyKind::Stft:
      return opp.value_or(Move::Defect);
    case StrategyKind::Tftt:
      return opp == Move::Defect && s.opponent_before_last == Move::Defect ? Move::Defect : Move::Cooperate;
    case StrategyKind::Grim:
      if (opp == Move::Defect) s.triggered = true;
      return s.triggered ? Move::Defect : Move::Cooperate;
    case StrategyKind::Rand:
      return random_move(rng, cooperate_probability);
    case StrategyKind::Neg:
      return opp ? flip(*opp) : random_move(rng, 0.5);
    case StrategyKind::Pav:
      // Win-stay, lose-shift: an opponent C means we got R or T.
      if (!opp || !s.my_last) return Move::Cooperate;
      return *opp == Move::Cooperate ? *s.my_last : flip(*s.my_last);
    case StrategyKind::Expl:
      // D D C, repeating from turn 1.
      return s.turn % 3 == 2 ? Move::Cooperate : Move::Defect;
    default:
      throw std::invalid_argument("not a standard strategy: " + std::string(kind_name(kind)));
  }
}

}  // namespace

Move standard_next_move(StrategyKind kind, StandardState& state, std::optional<Move> opponent_last, Rng& rng,
                        double cooperate_probability) {
  const Move reply = decide(kind, state, opponent_last, rng, cooperate_probability);
  state.opponent_before_last = opponent_last;
  state.my_last = reply;
  ++state.turn;
  return reply;
}

StandardStrategy::StandardStrategy(StrategyKind kind, double cooperate_probability)
    : kind_(kind), cooperate_probability_(cooperate_probability) {
  if (!is_standard_kind(kind)) throw std::invalid_argument("not a standard strategy: " + std::string(kind_name(kind)));
}

}  // namespace ipd
