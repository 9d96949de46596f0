#ifndef IPD_TESTS_HAND_STRATEGIES_HPP
#define IPD_TESTS_HAND_STRATEGIES_HPP

// Minimal hand-written deterministic strategies and a brute-force round
// robin, used to check the engine's accounting independently.

#include <map>
#include <string>
#include <vector>

namespace oracle {

// 'C' / 'D' moves; history holds the opponent's previous moves.
using HandRule = char (*)(const std::string& mine, const std::string& theirs);

inline char hand_allc(const std::string&, const std::string&) { return 'C'; }
inline char hand_alld(const std::string&, const std::string&) { return 'D'; }
inline char hand_tft(const std::string&, const std::string& theirs) { return theirs.empty() ? 'C' : theirs.back(); }
inline char hand_stft(const std::string&, const std::string& theirs) { return theirs.empty() ? 'D' : theirs.back(); }
inline char hand_grim(const std::string&, const std::string& theirs) {
  return theirs.find('D') == std::string::npos ? 'C' : 'D';
}

inline int hand_payoff(char mine, char theirs) {
  if (mine == 'C') return theirs == 'C' ? 3 : 0;
  return theirs == 'C' ? 5 : 1;
}

struct HandPlayer {
  std::string name;
  HandRule rule;
};

// Every unordered pair plays once; returns total points per player.
inline std::map<std::string, long> hand_round_robin(const std::vector<HandPlayer>& players, int turns) {
  std::map<std::string, long> total;
  for (const auto& p : players) total[p.name] = 0;
  for (std::size_t i = 0; i < players.size(); ++i) {
    for (std::size_t j = i + 1; j < players.size(); ++j) {
      std::string a;
      std::string b;
      for (int t = 0; t < turns; ++t) {
        const char ma = players[i].rule(a, b);
        const char mb = players[j].rule(b, a);
        a += ma;
        b += mb;
        total[players[i].name] += hand_payoff(ma, mb);
        total[players[j].name] += hand_payoff(mb, ma);
      }
    }
  }
  return total;
}

}  // namespace oracle

#endif
