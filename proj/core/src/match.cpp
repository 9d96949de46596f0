#include "ipd/match.hpp"

#include <stdexcept>
#include <utility>

#include "ipd/rng.hpp"

namespace ipd {

std::vector<Move> MatchTranscript::moves_a() const {
  std::vector<Move> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.intended_a);
  return out;
}

std::vector<Move> MatchTranscript::moves_b() const {
  std::vector<Move> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.intended_b);
  return out;
}

MatchSeeds MatchSeeds::from(std::uint64_t match_seed) {
  return {combine_seed(match_seed, 1), combine_seed(match_seed, 2), combine_seed(match_seed, 3),
          combine_seed(match_seed, 4)};
}

MatchTranscript play_match(Strategy& a, Strategy& b, int turns, double noise, std::uint64_t seed,
                           const PayoffMatrix& matrix, std::string player_a, std::string player_b) {
  if (turns < 1) throw std::invalid_argument("a match needs at least one turn");
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise probability must lie in [0, 1]");

  const MatchSeeds seeds = MatchSeeds::from(seed);
  a.reset(seeds.strategy_a);
  b.reset(seeds.strategy_b);
  Rng noise_a(seeds.noise_a);
  Rng noise_b(seeds.noise_b);

  MatchTranscript t;
  t.player_a = player_a.empty() ? std::string(a.name()) : std::move(player_a);
  t.player_b = player_b.empty() ? std::string(b.name()) : std::move(player_b);
  t.turns = turns;
  t.rows.reserve(static_cast<std::size_t>(turns));

  std::optional<Move> seen_by_a;
  std::optional<Move> seen_by_b;
  for (int turn = 1; turn <= turns; ++turn) {
    const Move move_a = a.next_move(seen_by_a);
    const Move move_b = b.next_move(seen_by_b);

    TurnRecord row;
    row.turn = turn;
    row.intended_a = move_a;
    row.intended_b = move_b;
    row.perceived_by_a = noise > 0.0 && noise_a.bernoulli(noise) ? flip(move_b) : move_b;
    row.perceived_by_b = noise > 0.0 && noise_b.bernoulli(noise) ? flip(move_a) : move_a;
    row.payoff_a = payoff(matrix, move_a, move_b);
    row.payoff_b = payoff(matrix, move_b, move_a);

    t.total_a += row.payoff_a;
    t.total_b += row.payoff_b;
    seen_by_a = row.perceived_by_a;
    seen_by_b = row.perceived_by_b;
    t.rows.push_back(row);
  }
  return t;
}

MatchTranscript scripted_transcript(std::string player_a, const std::vector<Move>& a, std::string player_b,
                                    const std::vector<Move>& b, const PayoffMatrix& matrix) {
  if (a.size() != b.size()) throw std::invalid_argument("scripts differ in length");
  MatchTranscript t;
  t.player_a = std::move(player_a);
  t.player_b = std::move(player_b);
  t.turns = static_cast<int>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    TurnRecord row{static_cast<int>(i) + 1, a[i], b[i], b[i], a[i], payoff(matrix, a[i], b[i]),
                   payoff(matrix, b[i], a[i])};
    t.total_a += row.payoff_a;
    t.total_b += row.payoff_b;
    t.rows.push_back(row);
  }
  return t;
}

std::vector<Move> respond_to_script(Strategy& strategy, const std::vector<Move>& opponent, std::uint64_t seed) {
  strategy.reset(seed);
  std::vector<Move> out;
  out.reserve(opponent.size());
  std::optional<Move> last;
  for (Move m : opponent) {
    out.push_back(strategy.next_move(last));
    last = m;
  }
  return out;
}

}  // namespace ipd
