#ifndef IPD_SYNDICATE_HPP
#define IPD_SYNDICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/move.hpp"
#include "ipd/otft.hpp"
#include "ipd/rng.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

// CosaNostra collusion pair. Each interval between handshakes is
// announced by a 1-move signature (Godfather C, Hitman D) followed by two
// message moves from the Godfather that select the next interval length.
// In between, the Godfather defects and the Hitman cooperates. Either side
// drops out permanently on the first move that does not fit the pattern:
// the Godfather to OTFT, the Hitman to ALLD.
namespace protocol {
inline constexpr int kGodfatherSignature = 3;      // Godfather plays C
inline constexpr int kHitmanSignatureSeen = 2;     // Godfather expects D
inline constexpr int kGodfatherFirstBit = 2;
inline constexpr int kHitmanSignature = 3;         // Hitman plays D
inline constexpr int kGodfatherSignatureSeen = 2;  // Hitman expects C
inline constexpr int kHitmanFirstBit = 1;
inline constexpr int kHitmanSecondBit = 0;
inline constexpr int kRestartBase = 9;
inline constexpr int kFirstBitWeight = 7;
inline constexpr int kSecondBitWeight = 11;
}  // namespace protocol

// Length of the interval announced by a pair of message bits,
// signature to signature: DD -> 26, DC -> 15, CD -> 19, CC -> 8.
struct IntervalCode {
  Move bit1;
  Move bit2;
  int length;
};

constexpr IntervalCode interval_code(Move bit1, Move bit2) {
  const int restart = protocol::kRestartBase + (bit1 == Move::Defect ? protocol::kFirstBitWeight : 0) +
                      (bit2 == Move::Defect ? protocol::kSecondBitWeight : 0);
  return {bit1, bit2, restart - 1};
}

struct GodfatherState {
  int countdown_index = protocol::kGodfatherSignature;
  int next_countdown_restart_value = 0;
  bool opponent_played_like_hitman = true;
  OtftState fallback;
  int intervals_completed = 0;
  int interval_growth = 0;

  bool operator==(const GodfatherState&) const = default;
};

struct HitmanState {
  int countdown_index = protocol::kHitmanSignature;
  int next_countdown_restart_value = 0;
  bool opponent_played_like_godfather = true;
  int intervals_completed = 0;
  int interval_growth = 0;

  bool operator==(const HitmanState&) const = default;
};

// Message bits are drawn from `rng`. Once the belief flag is cleared every
// later call is plain OTFT on `state.fallback`.
Move godfather_next_move(GodfatherState& state, std::optional<Move> opponent_last, Rng& rng);

// Turn 1 treats the missing opponent move as D, which is what a Godfather
// would have shown.
Move hitman_next_move(HitmanState& state, std::optional<Move> opponent_last);

class Godfather final : public Strategy {
 public:
  explicit Godfather(int interval_growth = 0) : interval_growth_(interval_growth) {}

  std::string_view name() const override { return "GODFATHER"; }
  void reset(std::uint64_t seed) override {
    state_ = {};
    state_.interval_growth = interval_growth_;
    rng_ = Rng(seed);
  }
  Move next_move(std::optional<Move> opponent_last) override {
    return godfather_next_move(state_, opponent_last, rng_);
  }

  const GodfatherState& state() const { return state_; }

 private:
  int interval_growth_;
  GodfatherState state_;
  Rng rng_;
};

class Hitman final : public Strategy {
 public:
  explicit Hitman(int interval_growth = 0) : interval_growth_(interval_growth) {}

  std::string_view name() const override { return "HITMAN"; }
  void reset(std::uint64_t) override {
    state_ = {};
    state_.interval_growth = interval_growth_;
  }
  Move next_move(std::optional<Move> opponent_last) override {
    return hitman_next_move(state_, opponent_last);
  }

  const HitmanState& state() const { return state_; }

 private:
  int interval_growth_;
  HitmanState state_;
};

enum class GroupKind { CosaNostra, Emperor };

// One Godfather named `boss` plus `hitmen` Hitmen named
// `<boss>-HM-001`, `<boss>-HM-002`, ...
std::vector<RosterEntry> build_group_roster(GroupKind kind, std::size_t hitmen, std::string_view boss,
                                            int interval_growth = 0);

}  // namespace ipd

#endif  // IPD_SYNDICATE_HPP
