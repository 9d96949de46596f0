#ifndef IPD_MATCH_HPP
#define IPD_MATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ipd/move.hpp"
#include "ipd/payoff.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

struct TurnRecord {
  int turn = 0;  // 1-based
  Move intended_a = Move::Cooperate;
  Move intended_b = Move::Cooperate;
  Move perceived_by_a = Move::Cooperate;  // what A saw of B's move
  Move perceived_by_b = Move::Cooperate;  // what B saw of A's move
  Points payoff_a = 0;
  Points payoff_b = 0;

  bool operator==(const TurnRecord&) const = default;
};

struct MatchTranscript {
  std::string player_a;
  std::string player_b;
  int turns = 0;
  std::vector<TurnRecord> rows;
  Points total_a = 0;
  Points total_b = 0;

  bool operator==(const MatchTranscript&) const = default;

  std::vector<Move> moves_a() const;
  std::vector<Move> moves_b() const;
};

// Independent random streams of one match. Strategy streams never see the
// noise draws, so a match with zero noise is identical to a noise-free one.
struct MatchSeeds {
  std::uint64_t strategy_a = 0;
  std::uint64_t strategy_b = 0;
  std::uint64_t noise_a = 0;
  std::uint64_t noise_b = 0;

  static MatchSeeds from(std::uint64_t match_seed);
};

// Plays `turns` simultaneous moves. Each player's view of the opponent's
// move is flipped independently with probability `noise`; payoffs are
// always scored on intended moves. Both strategies are reset first.
// Throws std::invalid_argument if turns < 1 or noise is outside [0, 1].
MatchTranscript play_match(Strategy& a, Strategy& b, int turns, double noise, std::uint64_t seed,
                           const PayoffMatrix& matrix = PayoffMatrix::standard(),
                           std::string player_a = {}, std::string player_b = {});

// Builds a transcript from two fixed move scripts (equal length), with
// perfect perception. Used for analysing published move tables.
MatchTranscript scripted_transcript(std::string player_a, const std::vector<Move>& a, std::string player_b,
                                    const std::vector<Move>& b,
                                    const PayoffMatrix& matrix = PayoffMatrix::standard());

// Replays a fixed opponent script against `strategy` with perfect
// perception and returns the strategy's moves.
std::vector<Move> respond_to_script(Strategy& strategy, const std::vector<Move>& opponent,
                                    std::uint64_t seed = 0);

}  // namespace ipd

#endif  // IPD_MATCH_HPP
