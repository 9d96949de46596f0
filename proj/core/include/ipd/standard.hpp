#ifndef IPD_STANDARD_HPP
#define IPD_STANDARD_HPP

#include <optional>

#include "ipd/move.hpp"
#include "ipd/rng.hpp"
#include "ipd/strategy.hpp"

namespace ipd {

// Per-match memory shared by the classic strategies. Each kind reads only
// the fields it needs.
struct StandardState {
  int turn = 0;
  std::optional<Move> my_last;
  std::optional<Move> opponent_before_last;
  bool triggered = false;  // GRIM
};

// ALLC, ALLD, TFT, TFTT, STFT, GRIM, RAND, NEG, PAV and EXPL.
// `cooperate_probability` only affects RAND. Throws std::invalid_argument
// for kinds outside that set.
Move standard_next_move(StrategyKind kind, StandardState& state,
                        std::optional<Move> opponent_last, Rng& rng,
                        double cooperate_probability = 0.5);

bool is_standard_kind(StrategyKind kind);

class StandardStrategy final : public Strategy {
 public:
  explicit StandardStrategy(StrategyKind kind, double cooperate_probability = 0.5);

  std::string_view name() const override { return kind_name(kind_); }
  void reset(std::uint64_t seed) override {
    state_ = {};
    rng_ = Rng(seed);
  }
  Move next_move(std::optional<Move> opponent_last) override {
    return standard_next_move(kind_, state_, opponent_last, rng_, cooperate_probability_);
  }

 private:
  StrategyKind kind_;
  double cooperate_probability_;
  StandardState state_;
  Rng rng_;
};

}  // namespace ipd

#endif  // IPD_STANDARD_HPP
