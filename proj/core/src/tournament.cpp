#include "ipd/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "ipd/rng.hpp"

namespace ipd {

void TournamentConfig::validate() const {
  if (roster.empty()) throw std::invalid_argument("roster is empty");
  std::unordered_set<std::string> names;
  for (const auto& e : roster) {
    if (e.name.empty()) throw std::invalid_argument("roster entry with empty name");
    if (!names.insert(e.name).second) throw std::invalid_argument("duplicate roster name '" + e.name + "'");
  }
  if (turns < 1) throw std::invalid_argument("turns must be >= 1");
  if (!(noise >= 0.0 && noise <= 1.0)) throw std::invalid_argument("noise must lie in [0, 1]");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  payoffs.validate();
}

void Scoreboard::rerank() {
  std::stable_sort(entries.begin(), entries.end(), [](const ScoreEntry& x, const ScoreEntry& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.player < y.player;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = (i > 0 && entries[i].score == entries[i - 1].score) ? entries[i - 1].rank
                                                                           : static_cast<int>(i) + 1;
  }
}

const ScoreEntry* Scoreboard::find(std::string_view player) const {
  for (const auto& e : entries)
    if (e.player == player) return &e;
  return nullptr;
}

std::vector<std::string> Scoreboard::ranking() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.player);
  return out;
}

std::uint64_t derive_match_seed(std::uint64_t master_seed, int repetition, std::string_view name_a,
                                std::string_view name_b) {
  const auto [lo, hi] = std::minmax(name_a, name_b);
  std::uint64_t h = combine_seed(master_seed, static_cast<std::uint64_t>(repetition));
  h = combine_seed(h, hash_name(lo));
  return combine_seed(h, hash_name(hi));
}

namespace {

struct Fixture {
  std::size_t a;
  std::size_t b;
  int repetition;
  bool self_play;
};

struct Tally {
  std::vector<Points> score;
  std::vector<std::int64_t> games;
  std::vector<std::int64_t> turns;

  explicit Tally(std::size_t n) : score(n, 0), games(n, 0), turns(n, 0) {}
};

}  // namespace

TournamentResult run_tournament(const TournamentConfig& config, bool keep_transcripts) {
  config.validate();
  const auto& roster = config.roster;
  const std::size_t n = roster.size();

  std::vector<Fixture> fixtures;
  for (int rep = 0; rep < config.repetitions; ++rep) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) fixtures.push_back({i, j, rep, false});
    if (config.self_play)
      for (std::size_t i = 0; i < n; ++i) fixtures.push_back({i, i, rep, true});
  }

  TournamentResult result;
  if (keep_transcripts) {
    result.transcripts.resize(fixtures.size());
    result.transcript_repetition.resize(fixtures.size());
  }

  unsigned workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(fixtures.size(), 1)));

  std::vector<Tally> tallies(workers, Tally(n));
  std::atomic<std::size_t> next{0};

  auto work = [&](unsigned w) {
    Tally& tally = tallies[w];
    for (std::size_t k = next.fetch_add(1); k < fixtures.size(); k = next.fetch_add(1)) {
      const Fixture& f = fixtures[k];
      const RosterEntry& ea = roster[f.a];
      const RosterEntry& eb = roster[f.b];
      auto sa = make_strategy(ea.spec);
      auto sb = make_strategy(eb.spec);
      const auto seed = derive_match_seed(config.master_seed, f.repetition, ea.name, eb.name);
      MatchTranscript t = play_match(*sa, *sb, config.turns, config.noise, seed, config.payoffs, ea.name, eb.name);

      tally.score[f.a] += t.total_a;
      tally.games[f.a] += 1;
      tally.turns[f.a] += t.turns;
      if (!f.self_play) {
        tally.score[f.b] += t.total_b;
        tally.games[f.b] += 1;
        tally.turns[f.b] += t.turns;
      }
      if (keep_transcripts) {
        result.transcripts[k] = std::move(t);
        result.transcript_repetition[k] = f.repetition;
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Tally total(n);
  for (const auto& t : tallies) {
    for (std::size_t i = 0; i < n; ++i) {
      total.score[i] += t.score[i];
      total.games[i] += t.games[i];
      total.turns[i] += t.turns[i];
    }
  }

  result.scoreboard.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.scoreboard.entries.push_back(
        {0, roster[i].name, roster[i].spec.to_string(), total.score[i], total.games[i], total.turns[i]});
  }
  result.scoreboard.rerank();
  return result;
}

}  // namespace ipd
