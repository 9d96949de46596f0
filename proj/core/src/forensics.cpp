#include "ipd/forensics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "ipd/csv.hpp"

namespace ipd::forensics {

namespace {

void check_parameters(int window, int tolerance) {
  if (window < 4) throw std::invalid_argument("window must be >= 4");
  if (tolerance < 0 || tolerance >= window) throw std::invalid_argument("tolerance must satisfy 0 <= d < window");
}

// One side's view of a match.
struct View {
  std::string opponent;
  std::vector<Move> mine;
  std::vector<Move> theirs;
  std::vector<Points> my_payoff;
  std::vector<Points> their_payoff;
};

View view_of(const MatchTranscript& t, bool as_a) {
  View v;
  v.opponent = as_a ? t.player_b : t.player_a;
  for (const auto& r : t.rows) {
    v.mine.push_back(as_a ? r.intended_a : r.intended_b);
    v.theirs.push_back(as_a ? r.intended_b : r.intended_a);
    v.my_payoff.push_back(as_a ? r.payoff_a : r.payoff_b);
    v.their_payoff.push_back(as_a ? r.payoff_b : r.payoff_a);
  }
  return v;
}

// Windows where `servant` (= v.mine) serves v.opponent.
std::vector<FlaggedWindow> servant_windows(const View& v, const std::string& servant, int window, int tolerance) {
  std::vector<FlaggedWindow> out;
  const auto n = static_cast<int>(v.mine.size());
  int s = 0;
  while (s < n) {
    if (v.mine[s] != C) {
      ++s;
      continue;
    }
    int e = s;
    while (e < n && v.mine[e] == C) ++e;  // servant run [s, e)

    int l = s;
    int r = s;
    int coop = 0;  // exploiter cooperations in [l, r)
    while (l < e) {
      if (r < l) {
        r = l;
        coop = 0;
      }
      while (r < e && coop + (v.theirs[r] == C ? 1 : 0) <= tolerance) {
        coop += v.theirs[r] == C ? 1 : 0;
        ++r;
      }
      if (r - l >= window) {
        FlaggedWindow f;
        f.exploiter = v.opponent;
        f.servant = servant;
        f.onset = l + 1;
        f.length = r - l;
        for (int k = l; k < r; ++k) {
          f.exploiter_defections += v.theirs[k] == D ? 1 : 0;
          f.transfer += v.their_payoff[k] - v.my_payoff[k];
        }
        f.servant_cooperations = f.length;
        out.push_back(std::move(f));
        l = r;
        coop = 0;
        continue;
      }
      if (r > l) coop -= v.theirs[l] == C ? 1 : 0;
      ++l;
    }
    s = e;
  }
  return out;
}

double defect_rate(const std::vector<Move>& moves, std::size_t begin, std::size_t end) {
  end = std::min(end, moves.size());
  if (begin >= end) return 0.0;
  std::size_t d = 0;
  for (std::size_t i = begin; i < end; ++i) d += moves[i] == D ? 1 : 0;
  return 100.0 * static_cast<double>(d) / static_cast<double>(end - begin);
}

bool close(double a, double b) { return std::abs(a - b) <= kPressureMatchPoints + 1e-9; }

}  // namespace

std::vector<FlaggedWindow> detect_exploitation(const MatchTranscript& transcript, int window, int tolerance) {
  check_parameters(window, tolerance);
  auto out = servant_windows(view_of(transcript, false), transcript.player_b, window, tolerance);
  auto other = servant_windows(view_of(transcript, true), transcript.player_a, window, tolerance);
  out.insert(out.end(), other.begin(), other.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FlaggedWindow& x, const FlaggedWindow& y) { return x.onset < y.onset; });
  return out;
}

std::optional<DifferentialFinding> detect_differential_servitude(const std::string& player,
                                                                 std::span<const MatchTranscript> transcripts,
                                                                 int window, int tolerance) {
  check_parameters(window, tolerance);
  std::vector<View> views;
  for (const auto& t : transcripts) {
    if (t.player_a == t.player_b) continue;
    if (t.player_a == player) views.push_back(view_of(t, true));
    else if (t.player_b == player) views.push_back(view_of(t, false));
  }
  if (views.size() < 2) throw std::invalid_argument("need at least two matches of '" + player + "'");

  struct Served {
    const View* view;
    int onset;
    double window_rate;  // opponent's defect rate inside flagged windows
  };
  std::vector<Served> served;
  std::set<std::string> served_names;
  for (const auto& v : views) {
    const auto windows = servant_windows(v, player, window, tolerance);
    if (windows.empty()) continue;
    int defections = 0;
    int turns = 0;
    for (const auto& w : windows) {
      defections += w.exploiter_defections;
      turns += w.length;
    }
    served.push_back({&v, windows.front().onset, 100.0 * defections / turns});
    served_names.insert(v.opponent);
  }
  if (served.empty()) return std::nullopt;

  DifferentialFinding finding;
  finding.player = player;
  finding.servant_to.assign(served_names.begin(), served_names.end());

  std::set<std::string> retaliated;
  for (const auto& v : views) {
    if (served_names.contains(v.opponent)) continue;
    const auto first = std::find(v.theirs.begin(), v.theirs.end(), D);
    if (first == v.theirs.end()) continue;
    const auto after = static_cast<std::size_t>(first - v.theirs.begin()) + 1;
    if (std::find(v.mine.begin() + static_cast<std::ptrdiff_t>(std::min(after, v.mine.size())), v.mine.end(), D) ==
        v.mine.end())
      continue;

    const double overall = defect_rate(v.theirs, 0, v.theirs.size());
    const bool comparable = std::any_of(served.begin(), served.end(), [&](const Served& s) {
      if (s.onset > 1) {
        const auto prefix = static_cast<std::size_t>(s.onset - 1);
        if (v.theirs.size() >= prefix &&
            close(defect_rate(v.theirs, 0, prefix), defect_rate(s.view->theirs, 0, prefix)))
          return true;
      }
      return close(overall, s.window_rate);
    });
    if (comparable) retaliated.insert(v.opponent);
  }
  if (retaliated.empty()) return std::nullopt;
  finding.retaliated_against.assign(retaliated.begin(), retaliated.end());
  return finding;
}

SuspicionReport analyse(std::span<const MatchTranscript> transcripts, int window, int tolerance) {
  check_parameters(window, tolerance);
  SuspicionReport report;
  std::map<std::string, int> matches;
  for (const auto& t : transcripts) {
    auto flags = detect_exploitation(t, window, tolerance);
    report.flagged.insert(report.flagged.end(), flags.begin(), flags.end());
    if (t.player_a == t.player_b) continue;
    ++matches[t.player_a];
    ++matches[t.player_b];
  }
  for (const auto& [player, count] : matches) {
    if (count < 2) continue;
    if (auto f = detect_differential_servitude(player, transcripts, window, tolerance))
      report.differential.push_back(std::move(*f));
  }
  return report;
}

void write_flags(std::ostream& out, const std::vector<FlaggedWindow>& flags) {
  out << kFlagHeader << '\n';
  for (const auto& f : flags) {
    out << csv::escape(f.exploiter) << ',' << csv::escape(f.servant) << ',' << f.onset << ',' << f.length << ','
        << f.exploiter_defections << ',' << f.servant_cooperations << ',' << f.transfer << '\n';
  }
}

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

void write_summary(std::ostream& out, const SuspicionReport& report) {
  out << "Suspicion report (heuristic: observable behavior only, not proof of collusion)\n";
  out << "  flagged servant windows: " << report.flagged.size() << '\n';
  std::map<std::pair<std::string, std::string>, std::pair<int, Points>> pairs;
  for (const auto& f : report.flagged) {
    auto& [count, transfer] = pairs[{f.exploiter, f.servant}];
    ++count;
    transfer += f.transfer;
  }
  for (const auto& [key, value] : pairs) {
    out << "    " << key.second << " served " << key.first << " in " << value.first << " window(s), transfer "
        << value.second << '\n';
  }
  out << "  differential servitude: " << report.differential.size() << '\n';
  for (const auto& d : report.differential) {
    out << "    " << d.player << " served [" << join(d.servant_to) << "] but retaliated against ["
        << join(d.retaliated_against) << "] under comparable pressure\n";
  }
}

}  // namespace ipd::forensics
