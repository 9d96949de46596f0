#include "ipd/strategy.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ipd/otft.hpp"
#include "ipd/standard.hpp"
#include "ipd/syndicate.hpp"

namespace ipd {

namespace {

constexpr std::array<std::pair<StrategyKind, std::string_view>, 13> kKindNames{{
    {StrategyKind::AllC, "ALLC"},
    {StrategyKind::AllD, "ALLD"},
    {StrategyKind::Tft, "TFT"},
    {StrategyKind::Tftt, "TFTT"},
    {StrategyKind::Stft, "STFT"},
    {StrategyKind::Grim, "GRIM"},
    {StrategyKind::Rand, "RAND"},
    {StrategyKind::Neg, "NEG"},
    {StrategyKind::Pav, "PAV"},
    {StrategyKind::Expl, "EXPL"},
    {StrategyKind::Otft, "OTFT"},
    {StrategyKind::Godfather, "GODFATHER"},
    {StrategyKind::Hitman, "HITMAN"},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_probability(std::string_view text, std::string_view spec) {
  double p = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("bad probability in strategy spec '" + std::string(spec) + "'");
  }
  return p;
}

int parse_growth(std::string_view text, std::string_view spec) {
  int g = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), g);
  if (ec != std::errc() || ptr != text.data() + text.size() || g < 0) {
    throw std::invalid_argument("bad interval growth in strategy spec '" + std::string(spec) + "'");
  }
  return g;
}

}  // namespace

std::string_view kind_name(StrategyKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::string StrategySpec::to_string() const {
  std::ostringstream out;
  out << kind_name(kind);
  if (kind == StrategyKind::Rand && cooperate_probability != 0.5) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), cooperate_probability);
    out << ":p=" << std::string_view(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
  }
  if ((kind == StrategyKind::Godfather || kind == StrategyKind::Hitman) && interval_growth != 0)
    out << ":grow=" << interval_growth;
  return out.str();
}

StrategySpec parse_strategy_spec(std::string_view text) {
  const std::string_view spec = trim(text);
  const auto colon = spec.find(':');
  const std::string head = upper(trim(spec.substr(0, colon)));

  StrategySpec out;
  bool found = false;
  for (const auto& [k, name] : kKindNames) {
    if (name == head) {
      out.kind = k;
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("unknown strategy '" + std::string(spec) + "'");
  if (colon == std::string_view::npos) return out;

  const std::string_view option = trim(spec.substr(colon + 1));
  const auto eq = option.find('=');
  const std::string key = upper(trim(option.substr(0, eq)));
  const std::string_view value = eq == std::string_view::npos ? std::string_view{} : trim(option.substr(eq + 1));

  if (out.kind == StrategyKind::Rand && key == "P" && !value.empty()) {
    out.cooperate_probability = parse_probability(value, spec);
  } else if ((out.kind == StrategyKind::Godfather || out.kind == StrategyKind::Hitman) && key == "GROW" &&
             !value.empty()) {
    out.interval_growth = parse_growth(value, spec);
  } else {
    throw std::invalid_argument("unsupported option in strategy spec '" + std::string(spec) + "'");
  }
  return out;
}

std::unique_ptr<Strategy> make_strategy(const StrategySpec& spec) {
  switch (spec.kind) {
    case StrategyKind::Otft:
      return std::make_unique<OmegaTitForTat>();
    case StrategyKind::Godfather:
      return std::make_unique<Godfather>(spec.interval_growth);
    case StrategyKind::Hitman:
      return std::make_unique<Hitman>(spec.interval_growth);
    default:
      return std::make_unique<StandardStrategy>(spec.kind, spec.cooperate_probability);
  }
}

}  // namespace ipd
