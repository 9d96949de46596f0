#ifndef IPD_FORENSICS_HPP
#define IPD_FORENSICS_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/match.hpp"
#include "ipd/payoff.hpp"

// Transcript heuristics for collusion-like behavior. Whether two programs
// collude is undecidable in general (it reduces from the halting problem),
// so these detectors only report observable servant windows and
// discrimination between comparable opponents, never intent.
namespace ipd::forensics {

inline constexpr int kDefaultWindow = 8;
inline constexpr int kDefaultTolerance = 1;
// Opponents count as applying comparable defection pressure when their
// defect rates differ by at most this many percentage points.
inline constexpr double kPressureMatchPoints = 10.0;

// A maximal run of >= w turns in which the servant cooperated on every turn
// and the exploiter cooperated on at most d of them.
struct FlaggedWindow {
  std::string exploiter;
  std::string servant;
  int onset = 0;   // 1-based first turn
  int length = 0;
  int exploiter_defections = 0;
  int servant_cooperations = 0;
  Points transfer = 0;  // exploiter payoff - servant payoff over the window
};

// Throws std::invalid_argument unless window >= 4 and 0 <= tolerance < window.
std::vector<FlaggedWindow> detect_exploitation(const MatchTranscript& transcript, int window = kDefaultWindow,
                                               int tolerance = kDefaultTolerance);

struct DifferentialFinding {
  std::string player;
  std::vector<std::string> servant_to;     // cooperated under sustained defection
  std::vector<std::string> retaliated_against;  // same pressure, fought back
};

// Looks at every transcript involving `player` (as either side) and splits
// its opponents into those it served and those it retaliated against under
// comparable pressure. Pressure is compared two ways against each served
// opponent: the defect rate over the turns before servitude began (same
// trigger history), and the served opponent's defect rate inside the
// flagged windows against the other opponent's overall defect rate (same
// sustained pressure). Returns nothing unless both sets are non-empty.
// Throws std::invalid_argument with fewer than two transcripts of `player`.
std::optional<DifferentialFinding> detect_differential_servitude(const std::string& player,
                                                                 std::span<const MatchTranscript> transcripts,
                                                                 int window = kDefaultWindow,
                                                                 int tolerance = kDefaultTolerance);

struct SuspicionReport {
  std::vector<FlaggedWindow> flagged;
  std::vector<DifferentialFinding> differential;
};

// Runs both detectors over a tournament's transcripts.
SuspicionReport analyse(std::span<const MatchTranscript> transcripts, int window = kDefaultWindow,
                        int tolerance = kDefaultTolerance);

inline constexpr std::string_view kFlagHeader = "exploiter,servant,onset,window,defects,cooperations,transfer";
void write_flags(std::ostream& out, const std::vector<FlaggedWindow>& flags);
void write_summary(std::ostream& out, const SuspicionReport& report);

}  // namespace ipd::forensics

#endif  // IPD_FORENSICS_HPP
