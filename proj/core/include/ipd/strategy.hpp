#ifndef IPD_STRATEGY_HPP
#define IPD_STRATEGY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ipd/move.hpp"

namespace ipd {

// Behavior contract for one player in one match. An instance is owned by a
// single match at a time; reset() must be called before the first move.
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string_view name() const = 0;

  // Returns to the documented initial state. `seed` feeds the instance's
  // private random stream; deterministic strategies ignore it.
  virtual void reset(std::uint64_t seed) = 0;

  // Called once per turn. `opponent_last` is the perceived opponent move of
  // the previous turn and is empty on turn 1.
  virtual Move next_move(std::optional<Move> opponent_last) = 0;
};

enum class StrategyKind {
  AllC,
  AllD,
  Tft,
  Tftt,
  Stft,
  Grim,
  Rand,
  Neg,
  Pav,
  Expl,
  Otft,
  Godfather,
  Hitman,
};

std::string_view kind_name(StrategyKind kind);

// Parsed form of a roster strategy string such as "TFT", "rand:p=0.3" or
// "GODFATHER:grow=2". Names are case-insensitive.
struct StrategySpec {
  StrategyKind kind = StrategyKind::Tft;
  // Cooperation probability of RAND.
  double cooperate_probability = 0.5;
  // Extra turns added to each new Godfather/Hitman interval per completed
  // interval. Zero reproduces the submitted protocol.
  int interval_growth = 0;

  bool operator==(const StrategySpec&) const = default;

  // Canonical string; parse_strategy_spec(to_string()) round-trips.
  std::string to_string() const;
};

// Throws std::invalid_argument for unknown names or malformed options.
StrategySpec parse_strategy_spec(std::string_view text);

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec);

struct RosterEntry {
  std::string name;
  StrategySpec spec;

  bool operator==(const RosterEntry&) const = default;
};

}  // namespace ipd

#endif  // IPD_STRATEGY_HPP
