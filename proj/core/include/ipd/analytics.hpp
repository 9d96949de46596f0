#ifndef IPD_ANALYTICS_HPP
#define IPD_ANALYTICS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipd/payoff.hpp"
#include "ipd/rational.hpp"
#include "ipd/tournament.hpp"

// Closed-form payoff model for group strategies: democracies and empires,
// at peace or at war, against a field of individual strategies. All values
// are per iteration; multiply by the iteration count for totals.
//
//   DP  democracy at peace: members cooperate inside, play well outside
//   DW  democracy at war:   members cooperate inside, defect outside
//   EP  empire at peace:    subjects serve the emperor, play well outside
//   EW  empire at war:      subjects serve the emperor, defect outside
//   X   best individual (non-group) strategy
namespace ipd::analytics {

struct Payoffs {
  Rational S{0};
  Rational P{1};
  Rational R{3};
  Rational T{5};

  static Payoffs from(const PayoffMatrix& m);
  // S < P < R < T and 2R > T + S; throws std::invalid_argument.
  void validate() const;
};

// Which pairing of groups a formula describes. The same role can have a
// different payoff depending on who else is present.
enum class Context {
  DemocracyPeaceVsWar,    // DP and DW groups (M_DP, M_DW)
  EmpirePeaceVsDemocracy, // EP and DP groups of equal size (M_DP, E_EP, X)
  EmpirePeaceVsWar,       // EP and EW groups of equal size (E_EP, E_EW)
  UnequalEmpireVsDemocracy,  // EP and DP of any sizes (M_DP, E_EP)
  UnequalWarDemocracyVsEmpire,  // DW and EW of any sizes (M_DW, E_EW)
  WeakEmpirePeace,        // EP emperor scoring B outside (E_EP, X)
  WeakEmpireWar,          // EW emperor scoring B outside (E_EW, X)
  UnequalEmperors,        // two EW empires with B1 < B2 (E_1, E_2)
};

std::string_view context_name(Context c);
// Accepts the names above as printed by context_name ("dp-vs-dw", ...).
Context parse_context(std::string_view name);

struct GroupScenario {
  Context context = Context::DemocracyPeaceVsWar;
  std::int64_t n = 0;  // population size
  // Members (democracies) or subjects (empires, emperor not counted).
  std::int64_t m_dp = 0;
  std::int64_t m_dw = 0;
  std::int64_t m_ep = 0;
  std::int64_t m_ew = 0;
  std::int64_t m_1 = 0;
  std::int64_t m_2 = 0;
  std::int64_t iterations = 1;
  Payoffs payoffs;
  // Average payoff of the best individual strategy against other
  // individuals; defaults to R.
  std::optional<Rational> A;
  std::optional<Rational> B;
  std::optional<Rational> B1;
  std::optional<Rational> B2;

  Rational average() const { return A.value_or(payoffs.R); }

  // Checks the invariants the formulas of `context` rely on; throws
  // std::invalid_argument.
  void validate() const;
};

struct GroupPayoffs {
  std::optional<Rational> m_dp;
  std::optional<Rational> m_dw;
  std::optional<Rational> e_ep;
  std::optional<Rational> e_ew;
  std::optional<Rational> x;
  std::optional<Rational> e_1;
  std::optional<Rational> e_2;

  // (role, value) for every role defined in this context.
  std::vector<std::pair<std::string, Rational>> defined() const;
};

GroupPayoffs role_payoffs(const GroupScenario& scenario);

struct Threshold {
  Rational bound;
  std::int64_t least_integer = 0;  // least integer strictly above bound
};

struct DemocracyThreshold {
  Rational ratio;  // (T - P) / (R - P)
  Threshold threshold;
};

// Minimum DW size that beats an EW emperor with `m_ew` subjects.
DemocracyThreshold threshold_dw_beats_ew(const Payoffs& payoffs, std::int64_t m_ew);

// Population share a DW group needs when it and one EW group are alone:
// ratio / (1 + ratio).
Rational dw_share_when_alone(const Payoffs& payoffs);

enum class EmpireKind { Peace, War };

// Minimum subject count for an emperor who scores B outside to beat the
// best individual strategy scoring A. Requires T > A > B.
Threshold threshold_emperor_beats_iopt(const Payoffs& payoffs, const Rational& A, const Rational& B,
                                       std::int64_t n, EmpireKind kind);

struct UnequalEmperorsThreshold {
  Rational alpha;                   // (B2 - B1) / (T - P)
  Rational size_coefficient;        // (1 - alpha) / (1 + alpha)
  Rational population_coefficient;  // alpha / (1 + alpha)
  Threshold threshold;
};

// Minimum subjects of the less efficient emperor (scoring b1 outside) to
// beat an emperor scoring b2 > b1 with `m2` subjects.
UnequalEmperorsThreshold threshold_unequal_emperors(const Payoffs& payoffs, const Rational& b1,
                                                    const Rational& b2, std::int64_t m2, std::int64_t n);

// What-if estimate for `clones` extra servile group members: every boss
// gains clones*T*turns, every other entry gains clones*P*turns. Clones are
// not listed. Throws std::invalid_argument when a boss matches no entry
// (by player or strategy name).
Scoreboard clone_scaling_estimate(const Scoreboard& base, std::int64_t clones, int turns,
                                  const PayoffMatrix& payoffs, const std::vector<std::string>& bosses);

struct CrosscheckRow {
  std::string context;
  std::string role;
  double formula_value = 0.0;
  double simulated_value = 0.0;
  double relative_error = 0.0;
  // Set when the printed formula does not follow from the group
  // definitions; the row is reported but excluded from agreement.
  std::string note;
};

struct CrosscheckReport {
  std::vector<CrosscheckRow> rows;

  // Largest relative error over rows without a note.
  double max_relative_error() const;
  bool agrees(double tolerance) const { return max_relative_error() <= tolerance; }
};

inline constexpr std::int64_t kMaxCrosscheckPopulation = 200;
inline constexpr std::int64_t kMaxCrosscheckIterations = 10'000;

// Simulates an idealized population whose agents follow the group
// definitions exactly (no recognition losses) for `iterations` rounds of
// every pairing, self-meetings included, and compares per-iteration role
// payoffs with role_payoffs(). Throws std::invalid_argument when the
// scenario is too large or its groups do not fit in n.
CrosscheckReport crosscheck_formulas(const GroupScenario& scenario);

inline constexpr std::string_view kCrosscheckHeader = "context,role,formula_value,simulated_value,relative_error";
void write_crosscheck(std::ostream& out, const CrosscheckReport& report);

}  // namespace ipd::analytics

#endif  // IPD_ANALYTICS_HPP
