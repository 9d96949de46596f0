#include "ipd/move.hpp"

#include <cctype>
#include <stdexcept>

#include "ipd/payoff.hpp"

namespace ipd {

std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Move> moves;
  moves.reserve(text.size());
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    auto m = move_from_char(c);
    if (!m) throw std::invalid_argument(std::string("not a move: '") + c + "'");
    moves.push_back(*m);
  }
  return moves;
}

std::string to_string(const std::vector<Move>& moves) {
  std::string s;
  s.reserve(moves.size());
  for (Move m : moves) s.push_back(to_char(m));
  return s;
}

std::string PayoffMatrix::violation() const {
  if (!(S < P)) return "S < P";
  if (!(P < R)) return "P < R";
  if (!(R < T)) return "R < T";
  if (!(2 * R > T + S)) return "2R > T + S";
  return {};
}

void PayoffMatrix::validate() const {
  if (auto v = violation(); !v.empty()) {
    throw std::invalid_argument("payoff matrix violates " + v + " (S=" + std::to_string(S) +
                                ", P=" + std::to_string(P) + ", R=" + std::to_string(R) +
                                ", T=" + std::to_string(T) + ")");
  }
}

}  // namespace ipd
