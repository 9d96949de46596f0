#ifndef IPD_CONFIG_HPP
#define IPD_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ipd/analytics.hpp"
#include "ipd/payoff.hpp"
#include "ipd/strategy.hpp"
#include "ipd/syndicate.hpp"
#include "ipd/tournament.hpp"

namespace ipd::cli {

// Raised for unreadable, malformed or invalid configuration. The message
// names the offending key, line or invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultTurns = 200;
inline constexpr double kDefaultNoisyLeagueNoise = 0.01;

struct GroupSpec {
  GroupKind kind = GroupKind::CosaNostra;
  std::size_t hitmen = 0;
  int interval_growth = 0;

  bool operator==(const GroupSpec&) const = default;
};

// A roster line: either a single strategy or a group builder whose boss
// takes `name`.
struct RosterItem {
  std::string name;
  std::optional<StrategySpec> strategy;
  std::optional<GroupSpec> group;

  bool operator==(const RosterItem&) const = default;
};

struct WhatIf {
  std::int64_t clones = 0;
  std::vector<std::string> bosses;
  // Scoreboard CSV to adjust instead of the tournament's own result.
  std::optional<std::string> scoreboard;

  bool operator==(const WhatIf&) const = default;
};

struct Reports {
  bool scoreboard = true;
  bool transcripts = false;
  bool collusion = false;
  std::optional<WhatIf> what_if;
  // Path of a group scenario JSON to evaluate.
  std::optional<std::string> analytics;

  bool operator==(const Reports&) const = default;
};

struct RunConfig {
  std::optional<std::string> preset;
  std::vector<RosterItem> roster;
  int turns = kDefaultTurns;
  // Empty means 0, or the noisy-league default for the `noisy` preset.
  std::optional<double> noise;
  std::uint64_t seed = 0;
  int repetitions = 1;
  bool self_play = false;
  PayoffMatrix payoffs = PayoffMatrix::standard();
  std::string output_dir = "ipd-out";
  Reports reports;
  unsigned threads = 1;
  int collusion_window = 8;
  int collusion_tolerance = 1;

  bool operator==(const RunConfig&) const = default;

  double effective_noise() const;

  // False when only an imported scoreboard or a group scenario is to be
  // evaluated.
  bool runs_tournament() const;

  // Expands the preset and group builders into a flat, validated roster.
  // Throws ConfigError.
  TournamentConfig tournament() const;

  // Throws ConfigError naming the violated invariant.
  void validate() const;
};

std::vector<std::string> preset_names();
// Throws ConfigError for unknown presets.
std::vector<RosterEntry> preset_roster(std::string_view name);

RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

analytics::GroupScenario parse_scenario(std::string_view json_text);
analytics::GroupScenario load_scenario(const std::filesystem::path& path);

}  // namespace ipd::cli

#endif  // IPD_CONFIG_HPP
