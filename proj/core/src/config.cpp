#include "ipd/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ipd::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kStandardNine = {"OTFT", "GRIM", "TFT", "TFTT", "ALLC", "RAND", "STFT", "ALLD", "NEG"};

std::string where(std::string_view path, std::string_view key) {
  std::string out(path);
  if (!out.empty()) out += '.';
  out += key;
  return out;
}

// Every object is closed: a key outside `allowed` is an error.
void check_keys(const json& obj, std::string_view path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError("'" + std::string(path.empty() ? "<root>" : path) + "' must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown key '" + where(path, key) + "'");
  }
}

template <typename T>
T get(const json& obj, std::string_view path, const char* key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad value for '" + where(path, key) + "'");
  }
}

std::int64_t get_int(const json& obj, std::string_view path, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError("'" + where(path, key) + "' must be an integer");
  return v.get<std::int64_t>();
}

bool get_bool(const json& obj, std::string_view path, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_boolean()) throw ConfigError("'" + where(path, key) + "' must be true or false");
  return v.get<bool>();
}

std::string get_string(const json& obj, std::string_view path, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError("'" + where(path, key) + "' must be a string");
  return v.get<std::string>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line number for the diagnostic.
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw ConfigError("line " + std::to_string(line) + ": " + what);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view group_kind_name(GroupKind k) { return k == GroupKind::CosaNostra ? "cosa-nostra" : "emperor"; }

GroupKind parse_group_kind(const std::string& s, std::string_view path) {
  if (s == "cosa-nostra") return GroupKind::CosaNostra;
  if (s == "emperor") return GroupKind::Emperor;
  throw ConfigError("'" + std::string(path) + "' must be \"cosa-nostra\" or \"emperor\"");
}

PayoffMatrix parse_payoffs(const json& obj, std::string_view path) {
  check_keys(obj, path, {"S", "P", "R", "T"});
  PayoffMatrix m;
  if (obj.contains("S")) m.S = get_int(obj, path, "S");
  if (obj.contains("P")) m.P = get_int(obj, path, "P");
  if (obj.contains("R")) m.R = get_int(obj, path, "R");
  if (obj.contains("T")) m.T = get_int(obj, path, "T");
  return m;
}

RosterItem parse_roster_item(const json& item, std::size_t index) {
  const std::string path = "roster[" + std::to_string(index) + "]";
  RosterItem out;
  try {
    if (item.is_string()) {
      out.name = item.get<std::string>();
      out.strategy = parse_strategy_spec(out.name);
      return out;
    }
    check_keys(item, path, {"name", "strategy", "group"});
    if (!item.contains("name")) throw ConfigError("'" + path + "' needs a name");
    out.name = get_string(item, path, "name");
    if (item.contains("strategy")) out.strategy = parse_strategy_spec(get_string(item, path, "strategy"));
    if (item.contains("group")) {
      const json& g = item.at("group");
      const std::string gpath = path + ".group";
      check_keys(g, gpath, {"kind", "hitmen", "growth"});
      GroupSpec spec;
      if (g.contains("kind")) spec.kind = parse_group_kind(get_string(g, gpath, "kind"), gpath + ".kind");
      if (!g.contains("hitmen")) throw ConfigError("'" + gpath + "' needs hitmen");
      const auto hitmen = get_int(g, gpath, "hitmen");
      if (hitmen < 0) throw ConfigError("'" + gpath + ".hitmen' must be >= 0");
      spec.hitmen = static_cast<std::size_t>(hitmen);
      if (g.contains("growth")) spec.interval_growth = static_cast<int>(get_int(g, gpath, "growth"));
      out.group = spec;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
  if (out.strategy.has_value() == out.group.has_value())
    throw ConfigError("'" + path + "' needs exactly one of strategy or group");
  return out;
}

Reports parse_reports(const json& obj) {
  const std::string path = "reports";
  check_keys(obj, path, {"scoreboard", "transcripts", "collusion", "what_if", "analytics"});
  Reports r;
  if (obj.contains("scoreboard")) r.scoreboard = get_bool(obj, path, "scoreboard");
  if (obj.contains("transcripts")) r.transcripts = get_bool(obj, path, "transcripts");
  if (obj.contains("collusion")) r.collusion = get_bool(obj, path, "collusion");
  if (obj.contains("analytics")) r.analytics = get_string(obj, path, "analytics");
  if (obj.contains("what_if")) {
    const json& w = obj.at("what_if");
    const std::string wpath = "reports.what_if";
    check_keys(w, wpath, {"clones", "bosses", "scoreboard"});
    WhatIf what_if;
    if (w.contains("clones")) what_if.clones = get_int(w, wpath, "clones");
    if (w.contains("bosses")) what_if.bosses = get<std::vector<std::string>>(w, wpath, "bosses");
    if (w.contains("scoreboard")) what_if.scoreboard = get_string(w, wpath, "scoreboard");
    r.what_if = what_if;
  }
  return r;
}

}  // namespace

std::vector<std::string> preset_names() { return {"standard9", "harsh", "random-env", "noisy"}; }

std::vector<RosterEntry> preset_roster(std::string_view name) {
  std::vector<RosterEntry> roster;
  for (const auto& s : kStandardNine) roster.push_back({s, parse_strategy_spec(s)});
  if (name == "standard9" || name == "noisy") return roster;
  if (name == "harsh" || name == "random-env") {
    const std::string base = name == "harsh" ? "ALLD" : "RAND";
    for (int i = 2; i <= 8; ++i) roster.push_back({base + "-" + std::to_string(i), parse_strategy_spec(base)});
    return roster;
  }
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

bool RunConfig::runs_tournament() const {
  // An imported scoreboard or a scenario alone needs no roster.
  const bool standalone = (reports.what_if && reports.what_if->scoreboard) || reports.analytics;
  return preset || !roster.empty() || !standalone;
}

double RunConfig::effective_noise() const {
  if (noise) return *noise;
  return preset == "noisy" ? kDefaultNoisyLeagueNoise : 0.0;
}

TournamentConfig RunConfig::tournament() const {
  TournamentConfig t;
  if (preset) t.roster = preset_roster(*preset);
  for (const auto& item : roster) {
    if (item.strategy) {
      t.roster.push_back({item.name, *item.strategy});
    } else if (item.group) {
      auto group = build_group_roster(item.group->kind, item.group->hitmen, item.name, item.group->interval_growth);
      t.roster.insert(t.roster.end(), group.begin(), group.end());
    }
  }
  t.turns = turns;
  t.noise = effective_noise();
  t.self_play = self_play;
  t.repetitions = repetitions;
  t.master_seed = seed;
  t.payoffs = payoffs;
  t.threads = threads;
  try {
    t.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return t;
}

void RunConfig::validate() const {
  if (const auto v = payoffs.violation(); !v.empty()) throw ConfigError("payoffs violate " + v);
  if (turns < 1) throw ConfigError("turns must be >= 1");
  const double e = effective_noise();
  if (!(e >= 0.0 && e <= 1.0)) throw ConfigError("noise must lie in [0, 1]");
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (collusion_window < 4) throw ConfigError("collusion window must be >= 4");
  if (collusion_tolerance < 0 || collusion_tolerance >= collusion_window)
    throw ConfigError("collusion tolerance must satisfy 0 <= d < window");
  if (reports.what_if) {
    if (reports.what_if->clones < 0) throw ConfigError("what-if clone count must be >= 0");
    if (reports.what_if->bosses.empty()) throw ConfigError("what-if needs at least one boss");
  }
  if (preset) preset_roster(*preset);
  if (runs_tournament()) tournament();
}

RunConfig parse_config(std::string_view json_text) {
  const json root = parse_json(json_text);
  check_keys(root, "", {"preset", "roster", "turns", "noise", "seed", "repetitions", "self_play", "payoffs",
                        "output_dir", "reports", "threads", "collusion_window", "collusion_tolerance"});
  RunConfig c;
  if (root.contains("preset")) c.preset = get_string(root, "", "preset");
  if (root.contains("roster")) {
    const json& r = root.at("roster");
    if (!r.is_array()) throw ConfigError("'roster' must be an array");
    for (std::size_t i = 0; i < r.size(); ++i) c.roster.push_back(parse_roster_item(r[i], i));
  }
  if (root.contains("turns")) c.turns = static_cast<int>(get_int(root, "", "turns"));
  if (root.contains("noise")) {
    if (!root.at("noise").is_number()) throw ConfigError("'noise' must be a number");
    c.noise = root.at("noise").get<double>();
  }
  if (root.contains("seed")) {
    const json& s = root.at("seed");
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() && s.get<std::int64_t>() < 0))
      throw ConfigError("'seed' must be a non-negative integer");
    c.seed = s.get<std::uint64_t>();
  }
  if (root.contains("repetitions")) c.repetitions = static_cast<int>(get_int(root, "", "repetitions"));
  if (root.contains("self_play")) c.self_play = get_bool(root, "", "self_play");
  if (root.contains("payoffs")) c.payoffs = parse_payoffs(root.at("payoffs"), "payoffs");
  if (root.contains("output_dir")) c.output_dir = get_string(root, "", "output_dir");
  if (root.contains("reports")) c.reports = parse_reports(root.at("reports"));
  if (root.contains("threads")) {
    const auto t = get_int(root, "", "threads");
    if (t < 0) throw ConfigError("'threads' must be >= 0");
    c.threads = static_cast<unsigned>(t);
  }
  if (root.contains("collusion_window")) c.collusion_window = static_cast<int>(get_int(root, "", "collusion_window"));
  if (root.contains("collusion_tolerance"))
    c.collusion_tolerance = static_cast<int>(get_int(root, "", "collusion_tolerance"));
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

json to_json(const RunConfig& c) {
  json root = json::object();
  if (c.preset) root["preset"] = *c.preset;
  json roster = json::array();
  for (const auto& item : c.roster) {
    json j = {{"name", item.name}};
    if (item.strategy) j["strategy"] = item.strategy->to_string();
    if (item.group) {
      j["group"] = {{"kind", group_kind_name(item.group->kind)},
                    {"hitmen", item.group->hitmen},
                    {"growth", item.group->interval_growth}};
    }
    roster.push_back(std::move(j));
  }
  root["roster"] = std::move(roster);
  root["turns"] = c.turns;
  if (c.noise) root["noise"] = *c.noise;
  root["seed"] = c.seed;
  root["repetitions"] = c.repetitions;
  root["self_play"] = c.self_play;
  root["payoffs"] = {{"S", c.payoffs.S}, {"P", c.payoffs.P}, {"R", c.payoffs.R}, {"T", c.payoffs.T}};
  root["output_dir"] = c.output_dir;
  json reports = {{"scoreboard", c.reports.scoreboard},
                  {"transcripts", c.reports.transcripts},
                  {"collusion", c.reports.collusion}};
  if (c.reports.what_if) {
    json w = {{"clones", c.reports.what_if->clones}, {"bosses", c.reports.what_if->bosses}};
    if (c.reports.what_if->scoreboard) w["scoreboard"] = *c.reports.what_if->scoreboard;
    reports["what_if"] = std::move(w);
  }
  if (c.reports.analytics) reports["analytics"] = *c.reports.analytics;
  root["reports"] = std::move(reports);
  root["threads"] = c.threads;
  root["collusion_window"] = c.collusion_window;
  root["collusion_tolerance"] = c.collusion_tolerance;
  return root;
}

// ---------------------------------------------------------------------------

namespace {

Rational get_rational(const json& obj, const char* key) {
  const json& v = obj.at(key);
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("'" + std::string(key) + "': " + e.what());
  }
  throw ConfigError("'" + std::string(key) + "' must be a number or a string like \"5/2\"");
}

}  // namespace

analytics::GroupScenario parse_scenario(std::string_view json_text) {
  const json root = parse_json(json_text);
  check_keys(root, "", {"context", "n", "m_dp", "m_dw", "m_ep", "m_ew", "m_1", "m_2", "iterations", "payoffs", "A",
                        "B", "B1", "B2"});
  analytics::GroupScenario sc;
  if (!root.contains("context")) throw ConfigError("scenario needs a context");
  try {
    sc.context = analytics::parse_context(get_string(root, "", "context"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!root.contains("n")) throw ConfigError("scenario needs n");
  sc.n = get_int(root, "", "n");
  for (auto [key, field] : {std::pair{"m_dp", &sc.m_dp}, std::pair{"m_dw", &sc.m_dw}, std::pair{"m_ep", &sc.m_ep},
                            std::pair{"m_ew", &sc.m_ew}, std::pair{"m_1", &sc.m_1}, std::pair{"m_2", &sc.m_2},
                            std::pair{"iterations", &sc.iterations}}) {
    if (root.contains(key)) *field = get_int(root, "", key);
  }
  if (root.contains("payoffs")) sc.payoffs = analytics::Payoffs::from(parse_payoffs(root.at("payoffs"), "payoffs"));
  if (root.contains("A")) sc.A = get_rational(root, "A");
  if (root.contains("B")) sc.B = get_rational(root, "B");
  if (root.contains("B1")) sc.B1 = get_rational(root, "B1");
  if (root.contains("B2")) sc.B2 = get_rational(root, "B2");
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  return sc;
}

analytics::GroupScenario load_scenario(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_scenario(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace ipd::cli
