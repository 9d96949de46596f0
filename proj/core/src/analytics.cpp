#include "ipd/analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ipd::analytics {

Payoffs Payoffs::from(const PayoffMatrix& m) { return {Rational(m.S), Rational(m.P), Rational(m.R), Rational(m.T)}; }

void Payoffs::validate() const {
  if (!(S < P && P < R && R < T)) throw std::invalid_argument("payoffs must satisfy S < P < R < T");
  if (!(R * 2 > T + S)) throw std::invalid_argument("payoffs must satisfy 2R > T + S");
}

namespace {

constexpr std::array<std::pair<Context, std::string_view>, 8> kContextNames{{
    {Context::DemocracyPeaceVsWar, "dp-vs-dw"},
    {Context::EmpirePeaceVsDemocracy, "ep-vs-dp"},
    {Context::EmpirePeaceVsWar, "ep-vs-ew"},
    {Context::UnequalEmpireVsDemocracy, "unequal-ep-vs-dp"},
    {Context::UnequalWarDemocracyVsEmpire, "unequal-dw-vs-ew"},
    {Context::WeakEmpirePeace, "weak-ep"},
    {Context::WeakEmpireWar, "weak-ew"},
    {Context::UnequalEmperors, "unequal-emperors"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_group(std::int64_t m, std::int64_t n, const char* name) {
  require(m >= 0, std::string(name) + " must be >= 0");
  require(m < n, std::string(name) + " must be smaller than n");
}

}  // namespace

std::string_view context_name(Context c) {
  for (const auto& [k, name] : kContextNames)
    if (k == c) return name;
  return "?";
}

Context parse_context(std::string_view name) {
  for (const auto& [k, n] : kContextNames)
    if (n == name) return k;
  throw std::invalid_argument("unknown context '" + std::string(name) + "'");
}

void GroupScenario::validate() const {
  payoffs.validate();
  require(n >= 1, "n must be >= 1");
  require(iterations >= 1, "iterations must be >= 1");
  const Rational a = average();
  require(payoffs.P < a && a < payoffs.T, "A must satisfy P < A < T");

  switch (context) {
    case Context::DemocracyPeaceVsWar:
      require_group(m_dp, n, "m_dp");
      require_group(m_dw, n, "m_dw");
      break;
    case Context::EmpirePeaceVsDemocracy:
    case Context::UnequalEmpireVsDemocracy:
      require_group(m_dp, n, "m_dp");
      require_group(m_ep, n, "m_ep");
      break;
    case Context::EmpirePeaceVsWar:
      require_group(m_ep, n, "m_ep");
      require_group(m_ew, n, "m_ew");
      require(m_ep == m_ew, "this context compares groups of equal size (m_ep == m_ew)");
      break;
    case Context::UnequalWarDemocracyVsEmpire:
      require_group(m_dw, n, "m_dw");
      require_group(m_ew, n, "m_ew");
      break;
    case Context::WeakEmpirePeace:
    case Context::WeakEmpireWar:
      require_group(context == Context::WeakEmpirePeace ? m_ep : m_ew, n,
                    context == Context::WeakEmpirePeace ? "m_ep" : "m_ew");
      require(B.has_value(), "this context needs B");
      require(*B < a, "B must be smaller than A");
      break;
    case Context::UnequalEmperors: {
      require_group(m_1, n, "m_1");
      require_group(m_2, n, "m_2");
      require(B1.has_value() && B2.has_value(), "this context needs B1 and B2");
      require(payoffs.P < *B1 && *B1 < payoffs.T && payoffs.P < *B2 && *B2 < payoffs.T,
              "B1 and B2 must lie strictly between P and T");
      require(*B1 <= *B2, "B1 must not exceed B2");
      break;
    }
  }
  const bool uses_a = context == Context::WeakEmpirePeace || context == Context::WeakEmpireWar;
  if (!uses_a) require(!A || *A == payoffs.R, "this context assumes A = R");
}

std::vector<std::pair<std::string, Rational>> GroupPayoffs::defined() const {
  std::vector<std::pair<std::string, Rational>> out;
  if (m_dp) out.emplace_back("M_DP", *m_dp);
  if (m_dw) out.emplace_back("M_DW", *m_dw);
  if (e_ep) out.emplace_back("E_EP", *e_ep);
  if (e_ew) out.emplace_back("E_EW", *e_ew);
  if (x) out.emplace_back("X", *x);
  if (e_1) out.emplace_back("E_1", *e_1);
  if (e_2) out.emplace_back("E_2", *e_2);
  return out;
}

GroupPayoffs role_payoffs(const GroupScenario& sc) {
  sc.validate();
  const auto& [S, P, R, T] = sc.payoffs;
  const Rational n(sc.n);
  GroupPayoffs g;
  switch (sc.context) {
    case Context::DemocracyPeaceVsWar: {
      const Rational m(sc.m_dw);
      g.m_dp = R * (n - m) + P * m;
      g.m_dw = R * m + P * (n - m);
      break;
    }
    case Context::EmpirePeaceVsDemocracy: {
      const Rational m(sc.m_ep);
      g.m_dp = R * n;
      g.e_ep = R * (n - m) + T * m;
      g.x = g.m_dp;  // members at peace score like the best individual
      break;
    }
    case Context::EmpirePeaceVsWar: {
      const Rational m(sc.m_ep);
      g.e_ep = R * (n - m * 2) + T * m + P * m;
      g.e_ew = R * (n - m) + T * m;
      break;
    }
    case Context::UnequalEmpireVsDemocracy: {
      const Rational m(sc.m_ep);
      g.e_ep = R * (n - m) + T * m;
      g.m_dp = R * n;
      break;
    }
    case Context::UnequalWarDemocracyVsEmpire: {
      const Rational mew(sc.m_ew);
      const Rational mdw(sc.m_dw);
      g.m_dw = R * (n - mew) + P * mew;
      g.e_ew = R * (n - mew - mdw) + T * mew + P * mdw;
      break;
    }
    case Context::WeakEmpirePeace: {
      const Rational m(sc.m_ep);
      g.e_ep = *sc.B * (n - m) + T * m;
      g.x = sc.average() * n;
      break;
    }
    case Context::WeakEmpireWar: {
      const Rational m(sc.m_ew);
      g.e_ew = *sc.B * (n - m) + T * m;
      g.x = sc.average() * (n - m) + P * m;
      break;
    }
    case Context::UnequalEmperors: {
      const Rational m1(sc.m_1);
      const Rational m2(sc.m_2);
      g.e_1 = *sc.B1 * (n - m1 - m2) + T * m1 + P * m2;
      g.e_2 = *sc.B2 * (n - m1 - m2) + T * m2 + P * m1;
      break;
    }
  }
  (void)S;
  return g;
}

DemocracyThreshold threshold_dw_beats_ew(const Payoffs& p, std::int64_t m_ew) {
  p.validate();
  require(m_ew >= 0, "m_ew must be >= 0");
  const Rational ratio = (p.T - p.P) / (p.R - p.P);
  const Rational bound = ratio * m_ew;
  return {ratio, {bound, least_integer_above(bound)}};
}

Rational dw_share_when_alone(const Payoffs& p) {
  p.validate();
  const Rational ratio = (p.T - p.P) / (p.R - p.P);
  return ratio / (Rational(1) + ratio);
}

Threshold threshold_emperor_beats_iopt(const Payoffs& p, const Rational& A, const Rational& B, std::int64_t n,
                                       EmpireKind kind) {
  p.validate();
  require(B < A, "B must be smaller than A");
  require(A < p.T, "A must be smaller than T");
  require(n >= 1, "n must be >= 1");
  const Rational denom = kind == EmpireKind::Peace ? p.T - B : p.T - B - p.P + A;
  const Rational bound = (A - B) / denom * n;
  return {bound, least_integer_above(bound)};
}

UnequalEmperorsThreshold threshold_unequal_emperors(const Payoffs& p, const Rational& b1, const Rational& b2,
                                                    std::int64_t m2, std::int64_t n) {
  p.validate();
  require(m2 >= 0 && n >= 1, "m2 must be >= 0 and n >= 1");
  const Rational alpha = (b2 - b1) / (p.T - p.P);
  require(alpha >= 0 && alpha < 1, "alpha = (B2 - B1)/(T - P) must lie in [0, 1)");
  UnequalEmperorsThreshold out;
  out.alpha = alpha;
  out.size_coefficient = (Rational(1) - alpha) / (Rational(1) + alpha);
  out.population_coefficient = alpha / (Rational(1) + alpha);
  const Rational bound = out.size_coefficient * m2 + out.population_coefficient * n;
  out.threshold = {bound, least_integer_above(bound)};
  return out;
}

Scoreboard clone_scaling_estimate(const Scoreboard& base, std::int64_t clones, int turns,
                                  const PayoffMatrix& payoffs, const std::vector<std::string>& bosses) {
  require(clones >= 0, "clone count must be >= 0");
  require(turns >= 1, "turns must be >= 1");
  auto is_boss = [&](const ScoreEntry& e) {
    return std::any_of(bosses.begin(), bosses.end(),
                       [&](const std::string& b) { return e.player == b || e.strategy == b; });
  };
  for (const auto& b : bosses) {
    const bool present = std::any_of(base.entries.begin(), base.entries.end(),
                                     [&](const ScoreEntry& e) { return e.player == b || e.strategy == b; });
    require(present, "boss '" + b + "' is not on the scoreboard");
  }

  Scoreboard out = base;
  for (auto& e : out.entries) {
    const Points per_turn = is_boss(e) ? payoffs.T : payoffs.P;
    e.score += clones * per_turn * turns;
    e.games += clones;
    e.turns += clones * turns;
  }
  out.rerank();
  return out;
}

// ---------------------------------------------------------------------------
// Idealized population simulation.

namespace {

enum class Role { Member, Emperor, Subject, Outsider };

struct Agent {
  int group = -1;  // -1 for outsiders
  Role role = Role::Outsider;
  bool at_war = false;
  std::optional<Rational> efficiency;  // emperor's average against non-members
  std::string label;                   // formula role this agent represents
};

struct Population {
  std::vector<Agent> agents;
  int groups = 0;

  void democracy(std::int64_t size, bool war) {
    const int g = groups++;
    for (std::int64_t i = 0; i < size; ++i) agents.push_back({g, Role::Member, war, std::nullopt, war ? "M_DW" : "M_DP"});
  }
  void empire(std::int64_t subjects, bool war, std::optional<Rational> efficiency, std::string emperor_label) {
    const int g = groups++;
    agents.push_back({g, Role::Emperor, false, efficiency, std::move(emperor_label)});
    for (std::int64_t i = 0; i < subjects; ++i) agents.push_back({g, Role::Subject, war, std::nullopt, {}});
  }
  void fill_outsiders(std::int64_t n) {
    if (static_cast<std::int64_t>(agents.size()) > n)
      throw std::invalid_argument("groups need " + std::to_string(agents.size()) + " players but n = " +
                                  std::to_string(n));
    while (static_cast<std::int64_t>(agents.size()) < n) agents.push_back({-1, Role::Outsider, false, std::nullopt, "X"});
  }
};

Population build_population(const GroupScenario& sc) {
  Population pop;
  switch (sc.context) {
    case Context::DemocracyPeaceVsWar:
      pop.democracy(sc.m_dp, false);
      pop.democracy(sc.m_dw, true);
      break;
    case Context::EmpirePeaceVsDemocracy:
    case Context::UnequalEmpireVsDemocracy:
      pop.democracy(sc.m_dp, false);
      pop.empire(sc.m_ep, false, std::nullopt, "E_EP");
      break;
    case Context::EmpirePeaceVsWar:
      pop.empire(sc.m_ep, false, std::nullopt, "E_EP");
      pop.empire(sc.m_ew, true, std::nullopt, "E_EW");
      break;
    case Context::UnequalWarDemocracyVsEmpire:
      pop.democracy(sc.m_dw, true);
      pop.empire(sc.m_ew, true, std::nullopt, "E_EW");
      break;
    case Context::WeakEmpirePeace:
      pop.empire(sc.m_ep, false, sc.B, "E_EP");
      break;
    case Context::WeakEmpireWar:
      pop.empire(sc.m_ew, true, sc.B, "E_EW");
      break;
    case Context::UnequalEmperors:
      pop.empire(sc.m_1, true, sc.B1, "E_1");
      pop.empire(sc.m_2, true, sc.B2, "E_2");
      break;
  }
  pop.fill_outsiders(sc.n);
  return pop;
}

// Per-meeting payoff to `f` against `o` as the group definitions prescribe.
Rational meeting_value(const Agent& f, const Agent& o, bool self, const GroupScenario& sc) {
  const auto& p = sc.payoffs;
  const Rational outside = f.efficiency.value_or(sc.average());
  if (self) return f.role == Role::Emperor || f.group < 0 ? outside : p.R;
  if (f.group >= 0 && f.group == o.group) {
    if (f.role == Role::Emperor) return p.T;  // subject cooperates, emperor defects
    if (o.role == Role::Emperor) return p.S;
    return p.R;
  }
  if (f.at_war || o.at_war) return p.P;
  return outside;
}

// A meeting whose average payoff lies between two outcome values is
// realized as a deterministic mix of the two, hitting `hi` on a fraction
// num/den of iterations, spread evenly.
struct Meeting {
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t num = 0;
  std::int64_t den = 1;

  auto key() const { return std::tie(lo, hi, num, den); }
  bool operator<(const Meeting& other) const { return key() < other.key(); }
};

Meeting realize(const Rational& v, const Payoffs& p) {
  const std::array<Rational, 4> outcomes{p.S, p.P, p.R, p.T};
  for (const auto& o : outcomes)
    if (v == o) return {to_double(o), to_double(o), 0, 1};
  for (std::size_t i = 0; i + 1 < outcomes.size(); ++i) {
    if (outcomes[i] < v && v < outcomes[i + 1]) {
      const Rational w = (v - outcomes[i]) / (outcomes[i + 1] - outcomes[i]);
      return {to_double(outcomes[i]), to_double(outcomes[i + 1]), w.numerator(), w.denominator()};
    }
  }
  throw std::invalid_argument("stylized payoff " + to_string(v) + " lies outside [S, T]");
}

}  // namespace

double CrosscheckReport::max_relative_error() const {
  double worst = 0.0;
  for (const auto& r : rows)
    if (r.note.empty()) worst = std::max(worst, r.relative_error);
  return worst;
}

CrosscheckReport crosscheck_formulas(const GroupScenario& sc) {
  sc.validate();
  if (sc.n > kMaxCrosscheckPopulation || sc.iterations > kMaxCrosscheckIterations) {
    throw std::invalid_argument("scenario too large to simulate (n <= " + std::to_string(kMaxCrosscheckPopulation) +
                                ", iterations <= " + std::to_string(kMaxCrosscheckIterations) + ")");
  }
  const GroupPayoffs formulas = role_payoffs(sc);
  const Population pop = build_population(sc);
  const std::size_t n = pop.agents.size();

  // Totals per agent. Identical meetings of one agent are simulated once and
  // weighted by their multiplicity.
  std::vector<double> total(n, 0.0);
  for (std::size_t f = 0; f < n; ++f) {
    std::map<Meeting, std::int64_t> meetings;
    for (std::size_t o = 0; o < n; ++o)
      ++meetings[realize(meeting_value(pop.agents[f], pop.agents[o], f == o, sc), sc.payoffs)];
    for (const auto& [m, count] : meetings) {
      double sum = 0.0;
      for (std::int64_t t = 0; t < sc.iterations; ++t) {
        const bool high = (t + 1) * m.num / m.den > t * m.num / m.den;
        sum += high ? m.hi : m.lo;
      }
      total[f] += sum * static_cast<double>(count);
    }
  }

  std::map<std::string, std::pair<double, std::int64_t>> by_role;
  for (std::size_t f = 0; f < n; ++f) {
    if (pop.agents[f].label.empty()) continue;
    auto& [sum, count] = by_role[pop.agents[f].label];
    sum += total[f] / static_cast<double>(sc.iterations);
    ++count;
  }

  CrosscheckReport report;
  for (const auto& [role, value] : formulas.defined()) {
    auto it = by_role.find(role);
    if (it == by_role.end()) continue;  // nobody plays this role here
    CrosscheckRow row;
    row.context = std::string(context_name(sc.context));
    row.role = role;
    row.formula_value = to_double(value);
    row.simulated_value = it->second.first / static_cast<double>(it->second.second);
    const double scale = std::abs(row.formula_value);
    row.relative_error = std::abs(row.simulated_value - row.formula_value) / (scale > 0.0 ? scale : 1.0);
    if (sc.context == Context::UnequalWarDemocracyVsEmpire && role == "M_DW") {
      row.note =
          "printed M_DW credits R against every non-EW-subject; DW members defect against the EW emperor and "
          "outsiders, so the simulation scores P there";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_crosscheck(std::ostream& out, const CrosscheckReport& report) {
  out << kCrosscheckHeader << '\n';
  std::ostringstream line;
  line.precision(10);
  for (const auto& r : report.rows) {
    line.str({});
    line << r.context << ',' << r.role << ',' << r.formula_value << ',' << r.simulated_value << ','
         << r.relative_error << '\n';
    out << line.str();
  }
}

}  // namespace ipd::analytics
