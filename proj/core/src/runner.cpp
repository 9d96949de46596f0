#include "ipd/runner.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ipd/analytics.hpp"
#include "ipd/csv.hpp"
#include "ipd/forensics.hpp"

namespace ipd::cli {

namespace {

namespace fs = std::filesystem;

std::string file_safe(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                    c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out;
}

template <typename Writer>
fs::path write_file(const fs::path& path, RunOutcome& outcome, Writer&& writer) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  writer(out);
  out.close();
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
  outcome.files.push_back(path);
  return path;
}

std::string format_value(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

void run_analytics(const RunConfig& config, const fs::path& dir, RunOutcome& outcome, std::ostream& out) {
  const auto scenario = load_scenario(*config.reports.analytics);
  const auto values = analytics::role_payoffs(scenario);
  out << "\nGroup scenario " << analytics::context_name(scenario.context) << " (n=" << scenario.n << ")\n";
  for (const auto& [role, value] : values.defined())
    out << "  " << std::left << std::setw(5) << role << " = " << to_string(value) << " per iteration ("
        << format_value(to_double(value)) << ")\n";

  if (scenario.n <= analytics::kMaxCrosscheckPopulation && scenario.iterations <= analytics::kMaxCrosscheckIterations) {
    const auto report = analytics::crosscheck_formulas(scenario);
    write_file(dir / "crosscheck.csv", outcome, [&](std::ostream& f) { analytics::write_crosscheck(f, report); });
    out << "  simulation max relative error " << format_value(report.max_relative_error()) << '\n';
    for (const auto& row : report.rows)
      if (!row.note.empty()) out << "  note (" << row.role << "): " << row.note << '\n';
  } else {
    out << "  scenario too large to simulate; formulas only\n";
  }
}

}  // namespace

void print_scoreboard(std::ostream& out, const Scoreboard& board, std::size_t limit) {
  std::size_t name_width = 6;
  std::size_t strategy_width = 8;
  for (const auto& e : board.entries) {
    name_width = std::max(name_width, e.player.size());
    strategy_width = std::max(strategy_width, e.strategy.size());
  }
  out << std::right << std::setw(4) << "rank" << "  " << std::left << std::setw(static_cast<int>(name_width))
      << "player" << "  " << std::setw(static_cast<int>(strategy_width)) << "strategy" << "  " << std::right
      << std::setw(12) << "score" << '\n';
  std::size_t shown = 0;
  for (const auto& e : board.entries) {
    if (limit != 0 && shown++ == limit) {
      out << "  ... " << board.entries.size() - limit << " more\n";
      break;
    }
    out << std::right << std::setw(4) << e.rank << "  " << std::left << std::setw(static_cast<int>(name_width))
        << e.player << "  " << std::setw(static_cast<int>(strategy_width)) << e.strategy << "  " << std::right
        << std::setw(12) << e.score << '\n';
  }
}

RunOutcome run(const RunConfig& config, std::ostream& out) {
  config.validate();
  const fs::path dir(config.output_dir);
  RunOutcome outcome;

  std::optional<TournamentResult> result;
  if (config.runs_tournament()) {
    const TournamentConfig tc = config.tournament();
    const bool keep = config.reports.transcripts || config.reports.collusion;
    result = run_tournament(tc, keep);
    outcome.scoreboard = result->scoreboard;

    out << "Tournament: " << tc.roster.size() << " players, " << tc.turns << " turns, noise " << tc.noise
        << ", seed " << tc.master_seed << ", " << tc.repetitions << " repetition(s)\n";
    print_scoreboard(out, result->scoreboard, 40);

    if (config.reports.scoreboard)
      write_file(dir / "scoreboard.csv", outcome, [&](std::ostream& f) { csv::write_scoreboard(f, result->scoreboard); });

    if (config.reports.transcripts) {
      for (std::size_t k = 0; k < result->transcripts.size(); ++k) {
        const auto& t = result->transcripts[k];
        const std::string name = "r" + std::to_string(result->transcript_repetition[k]) + "_" +
                                 file_safe(t.player_a) + "_vs_" + file_safe(t.player_b) + ".csv";
        write_file(dir / "transcripts" / name, outcome, [&](std::ostream& f) { csv::write_transcript(f, t); });
      }
    }

    if (config.reports.collusion) {
      const auto report =
          forensics::analyse(result->transcripts, config.collusion_window, config.collusion_tolerance);
      write_file(dir / "collusion_flags.csv", outcome, [&](std::ostream& f) { forensics::write_flags(f, report.flagged); });
      write_file(dir / "collusion_summary.txt", outcome, [&](std::ostream& f) { forensics::write_summary(f, report); });
      out << '\n';
      forensics::write_summary(out, report);
    }
  }

  if (config.reports.what_if) {
    const WhatIf& w = *config.reports.what_if;
    Scoreboard base;
    if (w.scoreboard) {
      std::ifstream in(*w.scoreboard);
      if (!in) throw ConfigError("cannot read scoreboard '" + *w.scoreboard + "'");
      try {
        base = csv::read_scoreboard(in);
      } catch (const std::runtime_error& e) {
        throw ConfigError(*w.scoreboard + ": " + e.what());
      }
    } else {
      base = outcome.scoreboard;
    }
    Scoreboard adjusted;
    try {
      adjusted = analytics::clone_scaling_estimate(base, w.clones, config.turns, config.payoffs, w.bosses);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const std::string name = "whatif_k" + std::to_string(w.clones) + ".csv";
    write_file(dir / name, outcome, [&](std::ostream& f) { csv::write_scoreboard(f, adjusted); });
    out << "\nWhat-if with " << w.clones << " extra clone(s):\n";
    print_scoreboard(out, adjusted, 40);
    if (!result) outcome.scoreboard = adjusted;
  }

  if (config.reports.analytics) run_analytics(config, dir, outcome, out);

  return outcome;
}

}  // namespace ipd::cli
