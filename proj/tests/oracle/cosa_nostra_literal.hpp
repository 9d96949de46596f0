#ifndef IPD_TESTS_COSA_NOSTRA_LITERAL_HPP
#define IPD_TESTS_COSA_NOSTRA_LITERAL_HPP

// Test-only Godfather and Hitman, transcribed from the published Java
// source. getMove() runs on every turn; on the first turn opponentMove
// still holds the value reset() gave it.

#include <functional>

#include "otft_literal.hpp"

namespace oracle {

class GodfatherLiteral {
 public:
  static constexpr int COOPERATE = OtftLiteral::COOPERATE;
  static constexpr int DEFECT = OtftLiteral::DEFECT;

  static constexpr int SYNC_GF_COOPERATES = 3;
  static constexpr int SYNC_HM_REPLIES_WITH_DEFECT = 2;
  static constexpr int GF_SENDS_FIRST_MESSAGE_BIT = 2;

  // Stands in for Math.random() > 0.5.
  std::function<bool()> random_bit;

  OtftLiteral otft;  // OTFT's fields and getMove()
  int opponentMove = COOPERATE;
  int countdownIndex = 0;
  int nextCountdownRestartValue = 0;
  bool opponentPlayedSoFarLikeHitman = true;

  void reset() {
    otft.reset();
    opponentMove = otft.opponentMove;
    countdownIndex = SYNC_GF_COOPERATES;
    opponentPlayedSoFarLikeHitman = true;
  }

  int getMove() {
    int myReply;
    if (opponentPlayedSoFarLikeHitman) {
      if ((countdownIndex == SYNC_HM_REPLIES_WITH_DEFECT && opponentMove == COOPERATE) ||
          (countdownIndex != SYNC_HM_REPLIES_WITH_DEFECT && opponentMove == DEFECT)) {
        myReply = DEFECT;
        opponentPlayedSoFarLikeHitman = false;
      } else {
        if (countdownIndex > SYNC_GF_COOPERATES) {
          myReply = DEFECT;
        } else if (countdownIndex == SYNC_GF_COOPERATES) {
          myReply = COOPERATE;
          nextCountdownRestartValue = 9;
        } else if (countdownIndex == GF_SENDS_FIRST_MESSAGE_BIT) {
          myReply = random_bit() ? DEFECT : COOPERATE;
          nextCountdownRestartValue += (myReply == DEFECT) ? 7 : 0;
        } else {
          myReply = random_bit() ? DEFECT : COOPERATE;
          nextCountdownRestartValue += (myReply == DEFECT) ? 11 : 0;
          countdownIndex = nextCountdownRestartValue;
        }
        countdownIndex--;
      }
    } else {
      otft.opponentMove = opponentMove;
      myReply = otft.getMove();
    }
    return myReply;
  }
};

class HitmanLiteral {
 public:
  static constexpr int COOPERATE = OtftLiteral::COOPERATE;
  static constexpr int DEFECT = OtftLiteral::DEFECT;

  static constexpr int SYNC_HM_DEFECTS = 3;
  static constexpr int SYNC_GF_REPLIES_WITH_COOPERATE = 2;
  static constexpr int FIRST_MESSAGE_BIT_FROM_GF = 1;
  static constexpr int SECOND_MESSAGE_BIT_FROM_GF = 0;

  int opponentMove = DEFECT;
  int countdownIndex = 0;
  int nextCountdownRestartValue = 0;
  bool opponentPlayedSoFarLikeGodfather = true;

  void reset() {
    opponentPlayedSoFarLikeGodfather = true;
    opponentMove = DEFECT;
    countdownIndex = SYNC_HM_DEFECTS;
  }

  int getMove() {
    int myReply;
    if (opponentPlayedSoFarLikeGodfather) {
      if ((countdownIndex == SYNC_GF_REPLIES_WITH_COOPERATE && opponentMove == DEFECT) ||
          (countdownIndex > SYNC_GF_REPLIES_WITH_COOPERATE && opponentMove == COOPERATE)) {
        myReply = DEFECT;
        opponentPlayedSoFarLikeGodfather = false;
      } else {
        if (countdownIndex != SYNC_HM_DEFECTS) {
          myReply = COOPERATE;
          if (countdownIndex == FIRST_MESSAGE_BIT_FROM_GF) {
            nextCountdownRestartValue += (opponentMove == DEFECT) ? 7 : 0;
          } else if (countdownIndex == SECOND_MESSAGE_BIT_FROM_GF) {
            nextCountdownRestartValue += (opponentMove == DEFECT) ? 11 : 0;
            countdownIndex = nextCountdownRestartValue - 1;
          }
        } else {
          myReply = DEFECT;
          nextCountdownRestartValue = 9;
        }
        countdownIndex--;
      }
    } else {
      myReply = DEFECT;
    }
    return myReply;
  }
};

}  // namespace oracle

#endif
