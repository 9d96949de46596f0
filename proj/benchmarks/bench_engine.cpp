#include <benchmark/benchmark.h>

#include "ipd/analytics.hpp"
#include "ipd/forensics.hpp"
#include "ipd/match.hpp"
#include "ipd/otft.hpp"
#include "ipd/standard.hpp"
#include "ipd/syndicate.hpp"
#include "ipd/tournament.hpp"

namespace {

void BM_OtftVsRand(benchmark::State& state) {
  ipd::OmegaTitForTat otft;
  ipd::StandardStrategy rand(ipd::StrategyKind::Rand, 0.5);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto t = ipd::play_match(otft, rand, static_cast<int>(state.range(0)), 0.0, seed++, {});
    benchmark::DoNotOptimize(t.total_a);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OtftVsRand)->Arg(200)->Arg(1000);

void BM_GodfatherVsHitman(benchmark::State& state) {
  ipd::Godfather gf;
  ipd::Hitman hm;
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto t = ipd::play_match(gf, hm, 1000, 0.0, seed++, {});
    benchmark::DoNotOptimize(t.total_a);
  }
}
BENCHMARK(BM_GodfatherVsHitman);

ipd::TournamentConfig standard_roster(unsigned threads) {
  ipd::TournamentConfig c;
  for (const char* s : {"OTFT", "GRIM", "TFT", "TFTT", "ALLC", "RAND", "STFT", "ALLD", "NEG"})
    c.roster.push_back({s, ipd::parse_strategy_spec(s)});
  c.threads = threads;
  c.repetitions = 10;
  return c;
}

void BM_Tournament(benchmark::State& state) {
  auto config = standard_roster(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    config.master_seed++;
    auto r = ipd::run_tournament(config, false);
    benchmark::DoNotOptimize(r.scoreboard.entries.data());
  }
}
BENCHMARK(BM_Tournament)->Arg(1)->Arg(4)->UseRealTime();

void BM_Crosscheck(benchmark::State& state) {
  ipd::analytics::GroupScenario sc;
  sc.context = ipd::analytics::Context::UnequalEmperors;
  sc.n = 200;
  sc.m_1 = 40;
  sc.m_2 = 30;
  sc.B1 = ipd::parse_rational("2.5");
  sc.B2 = ipd::parse_rational("2.6");
  sc.iterations = 10'000;
  for (auto _ : state) benchmark::DoNotOptimize(ipd::analytics::crosscheck_formulas(sc).rows.size());
}
BENCHMARK(BM_Crosscheck)->Unit(benchmark::kMillisecond);

void BM_DetectExploitation(benchmark::State& state) {
  ipd::Godfather gf;
  ipd::Hitman hm;
  const auto t = ipd::play_match(gf, hm, 10'000, 0.0, 7, {});
  for (auto _ : state) benchmark::DoNotOptimize(ipd::forensics::detect_exploitation(t).size());
}
BENCHMARK(BM_DetectExploitation);

}  // namespace

BENCHMARK_MAIN();
