#ifndef IPD_RUNNER_HPP
#define IPD_RUNNER_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ipd/config.hpp"
#include "ipd/tournament.hpp"

namespace ipd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitRuntimeError = 2;

struct RunOutcome {
  Scoreboard scoreboard;
  std::vector<std::filesystem::path> files;
};

// Runs the configured tournament and reports, writes the selected CSV files
// under config.output_dir and prints the scoreboard to `out`.
// Throws ConfigError or std::runtime_error.
RunOutcome run(const RunConfig& config, std::ostream& out);

// Pretty table used for terminal output.
void print_scoreboard(std::ostream& out, const Scoreboard& board, std::size_t limit = 0);

}  // namespace ipd::cli

#endif  // IPD_RUNNER_HPP
