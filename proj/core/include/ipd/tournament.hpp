#ifndef IPD_TOURNAMENT_HPP
#define IPD_TOURNAMENT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/match.hpp"
#include "ipd/payoff.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

struct TournamentConfig {
  std::vector<RosterEntry> roster;
  int turns = 200;
  double noise = 0.0;
  bool self_play = false;
  int repetitions = 1;
  std::uint64_t master_seed = 0;
  PayoffMatrix payoffs = PayoffMatrix::standard();
  // 0 picks std::thread::hardware_concurrency(). Results never depend on it.
  unsigned threads = 1;

  // Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

struct ScoreEntry {
  int rank = 0;
  std::string player;
  std::string strategy;
  Points score = 0;
  std::int64_t games = 0;
  std::int64_t turns = 0;

  bool operator==(const ScoreEntry&) const = default;
};

struct Scoreboard {
  std::vector<ScoreEntry> entries;

  bool operator==(const Scoreboard&) const = default;

  // Sorts by score descending, then player name; ties share the smaller
  // 1-based rank.
  void rerank();

  const ScoreEntry* find(std::string_view player) const;
  std::vector<std::string> ranking() const;
};

// Seed of the match between two roster names in one repetition. Symmetric
// in the two names, so it does not depend on scheduling or roster order.
std::uint64_t derive_match_seed(std::uint64_t master_seed, int repetition, std::string_view name_a,
                                std::string_view name_b);

struct TournamentResult {
  Scoreboard scoreboard;
  // Repetition-major, then roster order of (a, b) with a before b; self
  // play matches follow the pair matches of their repetition.
  std::vector<MatchTranscript> transcripts;
  std::vector<int> transcript_repetition;
};

// Round robin over all unordered pairs of distinct entries, once per
// repetition, plus one self-play match per entry when enabled (scored for
// one side only).
TournamentResult run_tournament(const TournamentConfig& config, bool keep_transcripts = true);

}  // namespace ipd

#endif  // IPD_TOURNAMENT_HPP
