#include "ipd/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace ipd::csv {

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

void write_transcript(std::ostream& out, const MatchTranscript& t) {
  out << kTranscriptHeader << '\n';
  for (const auto& r : t.rows) {
    out << r.turn << ',' << to_char(r.intended_a) << ',' << to_char(r.intended_b) << ','
        << to_char(r.perceived_by_a) << ',' << to_char(r.perceived_by_b) << ',' << r.payoff_a << ','
        << r.payoff_b << '\n';
  }
}

void write_scoreboard(std::ostream& out, const Scoreboard& board) {
  out << kScoreboardHeader << '\n';
  for (const auto& e : board.entries) {
    out << e.rank << ',' << escape(e.player) << ',' << escape(e.strategy) << ',' << e.score << ',' << e.games
        << ',' << e.turns << '\n';
  }
}

namespace {

template <typename T>
T parse_int(const std::string& field, std::size_t line, std::string_view column, bool allow_empty) {
  T value{};
  if (field.empty()) {
    if (allow_empty) return value;
    throw std::runtime_error("line " + std::to_string(line) + ": empty " + std::string(column));
  }
  // Thousands separators are tolerated in imported tables.
  std::string digits;
  for (char c : field)
    if (c != '_' && c != ' ' && c != ',') digits += c;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad " + std::string(column) + " '" + field + "'");
  }
  return value;
}

}  // namespace

Scoreboard read_scoreboard(std::istream& in) {
  Scoreboard board;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kScoreboardHeader)
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected header '" +
                                 std::string(kScoreboardHeader) + "'");
      header_seen = true;
      continue;
    }
    auto fields = split_record(line);
    if (fields.size() != 6)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                               std::to_string(fields.size()));
    ScoreEntry e;
    e.rank = parse_int<int>(fields[0], line_no, "rank", true);
    e.player = fields[1];
    e.strategy = fields[2];
    e.score = parse_int<Points>(fields[3], line_no, "score", false);
    e.games = parse_int<std::int64_t>(fields[4], line_no, "games", true);
    e.turns = parse_int<std::int64_t>(fields[5], line_no, "turns", true);
    board.entries.push_back(std::move(e));
  }
  if (!header_seen) throw std::runtime_error("scoreboard CSV is empty");
  board.rerank();
  return board;
}

}  // namespace ipd::csv
