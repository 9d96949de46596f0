#ifndef IPD_CSV_HPP
#define IPD_CSV_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/match.hpp"
#include "ipd/tournament.hpp"

namespace ipd::csv {

inline constexpr std::string_view kTranscriptHeader =
    "turn,intended_a,intended_b,perceived_by_a,perceived_by_b,payoff_a,payoff_b";
inline constexpr std::string_view kScoreboardHeader = "rank,player,strategy,score,games,turns";

// Quotes a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

// Splits one CSV record; handles quoted fields with doubled quotes.
std::vector<std::string> split_record(std::string_view line);

void write_transcript(std::ostream& out, const MatchTranscript& transcript);
void write_scoreboard(std::ostream& out, const Scoreboard& board);

// Reads the scoreboard format above. `games` and `turns` may be empty.
// Entries are re-ranked after loading. Throws std::runtime_error with the
// offending line number on malformed input.
Scoreboard read_scoreboard(std::istream& in);

}  // namespace ipd::csv

#endif  // IPD_CSV_HPP
