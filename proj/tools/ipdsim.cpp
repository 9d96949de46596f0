// ipdsim: command line front end for the tournament engine.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ipd/config.hpp"
#include "ipd/runner.hpp"

using namespace ipd;
using namespace ipd::cli;

int main(int argc, char** argv) {
  CLI::App app{"Iterated prisoner's dilemma tournaments, group analytics and collusion forensics"};
  app.set_version_flag("--version", "ipdsim 1.0.0");

  std::string config_path;
  std::optional<int> turns;
  std::optional<double> noise;
  std::optional<std::uint64_t> seed;
  std::optional<int> reps;
  std::optional<std::string> preset;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  std::vector<std::string> players;
  std::optional<std::size_t> cosa_nostra;
  std::optional<std::size_t> emperor;
  int growth = 0;
  std::optional<std::int64_t> clones;
  std::vector<std::string> bosses;
  std::optional<std::string> import_scoreboard;
  std::optional<std::string> scenario;
  std::optional<int> window;
  std::optional<int> tolerance;
  bool self_play = false;
  bool collusion = false;
  bool transcripts = false;
  bool print_config = false;
  bool list_presets = false;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--preset", preset, "standard9, harsh, random-env or noisy");
  app.add_option("--player", players, "extra roster entry NAME=SPEC or SPEC (repeatable)");
  app.add_option("--turns", turns, "turns per match");
  app.add_option("--noise", noise, "perception noise probability");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--reps", reps, "repetitions of the round robin");
  app.add_flag("--self-play", self_play, "every player also meets itself");
  app.add_option("--threads", threads, "worker threads, 0 = all cores");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--cosa-nostra", cosa_nostra, "add a Godfather GF with K hitmen");
  app.add_option("--emperor", emperor, "add an emperor EMP with K hitman clones");
  app.add_option("--growth", growth, "interval growth for --cosa-nostra/--emperor")->check(CLI::NonNegativeNumber);
  app.add_flag("--transcripts", transcripts, "write one CSV per match");
  app.add_flag("--collusion-report", collusion, "run the collusion detectors");
  app.add_option("--window", window, "collusion window length w");
  app.add_option("--tolerance", tolerance, "exploiter cooperations allowed per window d");
  app.add_option("--what-if-clones", clones, "add K servile clones to the scoreboard");
  app.add_option("--boss", bosses, "boss receiving T from every clone (repeatable)");
  app.add_option("--import-scoreboard", import_scoreboard, "scoreboard CSV for --what-if-clones")
      ->check(CLI::ExistingFile);
  app.add_option("--analytics", scenario, "group scenario JSON")->check(CLI::ExistingFile);
  app.add_flag("--print-config", print_config, "print the effective configuration as JSON and exit");
  app.add_flag("--list-presets", list_presets, "list preset rosters and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (list_presets) {
    for (const auto& name : preset_names()) {
      std::cout << name << ":";
      for (const auto& e : preset_roster(name)) std::cout << ' ' << e.name;
      std::cout << '\n';
    }
    return kExitOk;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
    // flags override file values
    if (preset) config.preset = *preset;
    if (turns) config.turns = *turns;
    if (noise) config.noise = *noise;
    if (seed) config.seed = *seed;
    if (reps) config.repetitions = *reps;
    if (self_play) config.self_play = true;
    if (threads) config.threads = *threads;
    if (out_dir) config.output_dir = *out_dir;
    if (transcripts) config.reports.transcripts = true;
    if (collusion) config.reports.collusion = true;
    if (window) config.collusion_window = *window;
    if (tolerance) config.collusion_tolerance = *tolerance;
    if (scenario) config.reports.analytics = *scenario;
    for (const auto& p : players) {
      const auto eq = p.find('=');
      RosterItem item;
      item.name = eq == std::string::npos ? p : p.substr(0, eq);
      try {
        item.strategy = parse_strategy_spec(eq == std::string::npos ? p : p.substr(eq + 1));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--player: ") + e.what());
      }
      config.roster.push_back(std::move(item));
    }
    if (cosa_nostra) config.roster.push_back({"GF", std::nullopt, GroupSpec{GroupKind::CosaNostra, *cosa_nostra, growth}});
    if (emperor) config.roster.push_back({"EMP", std::nullopt, GroupSpec{GroupKind::Emperor, *emperor, growth}});
    if (clones || !bosses.empty() || import_scoreboard) {
      WhatIf w = config.reports.what_if.value_or(WhatIf{});
      if (clones) w.clones = *clones;
      if (!bosses.empty()) w.bosses = bosses;
      if (import_scoreboard) w.scoreboard = *import_scoreboard;
      config.reports.what_if = w;
    }
    config.validate();
  } catch (const ConfigError& e) {
    std::cerr << "ipdsim: config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  if (print_config) {
    std::cout << to_json(config).dump(2) << '\n';
    return kExitOk;
  }

  try {
    const auto outcome = run(config, std::cout);
    for (const auto& f : outcome.files) std::cerr << "wrote " << f.string() << '\n';
  } catch (const ConfigError& e) {
    std::cerr << "ipdsim: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "ipdsim: error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}
