#include <gtest/gtest.h>

#include "ipd/match.hpp"
#include "ipd/standard.hpp"
#include "ipd/strategy.hpp"

using namespace ipd;

namespace {

std::string respond(const std::string& spec, const std::string& opponent, std::uint64_t seed = 1) {
  auto s = make_strategy(parse_strategy_spec(spec));
  return to_string(respond_to_script(*s, parse_moves(opponent), seed));
}

MatchTranscript play(const std::string& a, const std::string& b, int turns, std::uint64_t seed = 1) {
  auto sa = make_strategy(parse_strategy_spec(a));
  auto sb = make_strategy(parse_strategy_spec(b));
  return play_match(*sa, *sb, turns, 0.0, seed);
}

}  // namespace

TEST(Strategies, Unconditional) {
  EXPECT_EQ(respond("ALLC", "DDDDD"), "CCCCC");
  EXPECT_EQ(respond("ALLD", "CCCCC"), "DDDDD");
}

TEST(Strategies, TitForTatFamily) {
  EXPECT_EQ(respond("TFT", "CDDCCD"), "CCDDCC");
  EXPECT_EQ(respond("STFT", "CDDCCD"), "DCDDCC");
  // TFTT only answers two defections in a row
  EXPECT_EQ(respond("TFTT", "DCDDDCD"), "CCCCDDC");
}

TEST(Strategies, ExploiterAgainstTftt) {
  const auto t = play("EXPL", "TFTT", 12);
  EXPECT_EQ(to_string(t.moves_a()), "DDCDDCDDCDDC");
  EXPECT_EQ(to_string(t.moves_b()), "CCDCCDCCDCCD");
}

TEST(Strategies, GrimNeverForgives) {
  EXPECT_EQ(respond("GRIM", "CCCDCCCC"), "CCCCDDDD");
  EXPECT_EQ(respond("GRIM", "CCCCCCCC"), "CCCCCCCC");
}

TEST(Strategies, PavlovWinStayLoseShift) {
  EXPECT_EQ(to_string(play("PAV", "ALLD", 6).moves_a()), "CDCDCD");
  EXPECT_EQ(to_string(play("PAV", "ALLC", 4).moves_a()), "CCCC");
  // after mutual defection PAV returns to cooperation
  EXPECT_EQ(respond("PAV", "CDDCC"), "CCDCC");
}

TEST(Strategies, NegPlaysOpposite) {
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const auto r = respond("NEG", "CDDCD", seed);
    EXPECT_EQ(r.substr(1), "DCCD");
  }
  // the first move is a coin flip
  int first_c = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) first_c += respond("NEG", "C", seed)[0] == 'C';
  EXPECT_GT(first_c, 150);
  EXPECT_LT(first_c, 250);
}

TEST(Strategies, RandomCooperationProbability) {
  EXPECT_EQ(respond("RAND:p=0", std::string(50, 'C')), std::string(50, 'D'));
  EXPECT_EQ(respond("RAND:p=1", std::string(50, 'C')), std::string(50, 'C'));
  const auto moves = respond("RAND:p=0.3", std::string(20'000, 'C'), 5);
  const double share = static_cast<double>(std::count(moves.begin(), moves.end(), 'C')) / moves.size();
  EXPECT_NEAR(share, 0.3, 0.015);
}

TEST(Strategies, ResetRestartsTheStream) {
  auto s = make_strategy(parse_strategy_spec("RAND"));
  const auto a = respond_to_script(*s, parse_moves("CCCCCCCCCCCCCCCCCCCC"), 8);
  const auto b = respond_to_script(*s, parse_moves("CCCCCCCCCCCCCCCCCCCC"), 8);
  EXPECT_EQ(a, b);
}

TEST(StrategySpec, ParsingIsCaseInsensitive) {
  EXPECT_EQ(parse_strategy_spec("tft").kind, StrategyKind::Tft);
  EXPECT_EQ(parse_strategy_spec(" Otft ").kind, StrategyKind::Otft);
  const auto r = parse_strategy_spec("rand:P=0.25");
  EXPECT_EQ(r.kind, StrategyKind::Rand);
  EXPECT_DOUBLE_EQ(r.cooperate_probability, 0.25);
  EXPECT_EQ(parse_strategy_spec("godfather:grow=2").interval_growth, 2);
}

TEST(StrategySpec, RoundTrip) {
  for (const char* s : {"ALLC", "ALLD", "TFT", "TFTT", "STFT", "GRIM", "RAND", "NEG", "PAV", "EXPL", "OTFT",
                        "GODFATHER", "HITMAN", "RAND:p=0.1", "HITMAN:grow=3"}) {
    const auto spec = parse_strategy_spec(s);
    EXPECT_EQ(spec.to_string(), s);
    EXPECT_EQ(parse_strategy_spec(spec.to_string()), spec);
  }
}

TEST(StrategySpec, Errors) {
  EXPECT_THROW(parse_strategy_spec("SNEAKY"), std::invalid_argument);
  EXPECT_THROW(parse_strategy_spec("RAND:p=1.5"), std::invalid_argument);
  EXPECT_THROW(parse_strategy_spec("RAND:q=0.5"), std::invalid_argument);
  EXPECT_THROW(parse_strategy_spec("TFT:p=0.5"), std::invalid_argument);
  EXPECT_THROW(parse_strategy_spec("GODFATHER:grow=-1"), std::invalid_argument);
  EXPECT_THROW(StandardStrategy(StrategyKind::Otft, 0.5), std::invalid_argument);
}

TEST(Strategies, NamesMatchKinds) {
  for (const char* s : {"ALLC", "TFT", "OTFT", "GODFATHER", "HITMAN"})
    EXPECT_EQ(make_strategy(parse_strategy_spec(s))->name(), s);
}
