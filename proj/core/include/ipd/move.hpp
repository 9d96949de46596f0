#ifndef IPD_MOVE_HPP
#define IPD_MOVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipd {

enum class Move : std::uint8_t { Cooperate, Defect };

inline constexpr Move C = Move::Cooperate;
inline constexpr Move D = Move::Defect;

constexpr char to_char(Move m) { return m == Move::Cooperate ? 'C' : 'D'; }

constexpr Move flip(Move m) { return m == Move::Cooperate ? Move::Defect : Move::Cooperate; }

// Accepts 'C'/'c' and 'D'/'d'; anything else yields nullopt.
constexpr std::optional<Move> move_from_char(char c) {
  switch (c) {
    case 'C':
    case 'c':
      return Move::Cooperate;
    case 'D':
    case 'd':
      return Move::Defect;
    default:
      return std::nullopt;
  }
}

// "CDDC" -> {C, D, D, C}. Whitespace is skipped; throws std::invalid_argument
// on any other character.
std::vector<Move> parse_moves(std::string_view text);

std::string to_string(const std::vector<Move>& moves);

}  // namespace ipd

#endif  // IPD_MOVE_HPP
