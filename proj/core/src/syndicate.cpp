#include "ipd/syndicate.hpp"

#include <algorithm>
#include <string>

namespace ipd {

Move godfather_next_move(GodfatherState& s, std::optional<Move> opponent_last, Rng& rng) {
  using namespace protocol;
  if (!s.opponent_played_like_hitman) return otft_next_move(s.fallback, opponent_last);

  // Before the first move the opponent counts as having cooperated.
  const Move opp = opponent_last.value_or(Move::Cooperate);
  const bool broken = (s.countdown_index == kHitmanSignatureSeen && opp == Move::Cooperate) ||
                      (s.countdown_index != kHitmanSignatureSeen && opp == Move::Defect);
  if (broken) {
    s.opponent_played_like_hitman = false;
    return Move::Defect;
  }

  Move reply;
  if (s.countdown_index > kGodfatherSignature) {
    reply = Move::Defect;
  } else if (s.countdown_index == kGodfatherSignature) {
    reply = Move::Cooperate;
    s.next_countdown_restart_value = kRestartBase;
  } else if (s.countdown_index == kGodfatherFirstBit) {
    reply = rng.coin() ? Move::Defect : Move::Cooperate;
    if (reply == Move::Defect) s.next_countdown_restart_value += kFirstBitWeight;
  } else {
    reply = rng.coin() ? Move::Defect : Move::Cooperate;
    if (reply == Move::Defect) s.next_countdown_restart_value += kSecondBitWeight;
    s.next_countdown_restart_value += s.interval_growth * s.intervals_completed;
    ++s.intervals_completed;
    s.countdown_index = s.next_countdown_restart_value;
  }
  --s.countdown_index;
  return reply;
}

Move hitman_next_move(HitmanState& s, std::optional<Move> opponent_last) {
  using namespace protocol;
  if (!s.opponent_played_like_godfather) return Move::Defect;

  const Move opp = opponent_last.value_or(Move::Defect);
  const bool broken = (s.countdown_index == kGodfatherSignatureSeen && opp == Move::Defect) ||
                      (s.countdown_index > kGodfatherSignatureSeen && opp == Move::Cooperate);
  if (broken) {
    s.opponent_played_like_godfather = false;
    return Move::Defect;
  }

  Move reply;
  if (s.countdown_index != kHitmanSignature) {
    reply = Move::Cooperate;
    if (s.countdown_index == kHitmanFirstBit) {
      if (opp == Move::Defect) s.next_countdown_restart_value += kFirstBitWeight;
    } else if (s.countdown_index == kHitmanSecondBit) {
      if (opp == Move::Defect) s.next_countdown_restart_value += kSecondBitWeight;
      s.next_countdown_restart_value += s.interval_growth * s.intervals_completed;
      ++s.intervals_completed;
      s.countdown_index = s.next_countdown_restart_value - 1;
    }
  } else {
    reply = Move::Defect;
    s.next_countdown_restart_value = kRestartBase;
  }
  --s.countdown_index;
  return reply;
}

std::vector<RosterEntry> build_group_roster(GroupKind, std::size_t hitmen, std::string_view boss,
                                            int interval_growth) {
  std::vector<RosterEntry> roster;
  roster.reserve(hitmen + 1);
  roster.push_back({std::string(boss), {StrategyKind::Godfather, 0.5, interval_growth}});

  const std::size_t width = std::max<std::size_t>(3, std::to_string(hitmen).size());
  for (std::size_t i = 1; i <= hitmen; ++i) {
    std::string number = std::to_string(i);
    number.insert(0, width - number.size(), '0');
    roster.push_back({std::string(boss) + "-HM-" + number, {StrategyKind::Hitman, 0.5, interval_growth}});
  }
  return roster;
}

}  // namespace ipd
