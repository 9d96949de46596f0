#include "ipd/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ipd {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return Rational(parse_int(text.substr(0, slash), whole), den);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  const std::string_view int_part = text.substr(0, dot);
  const std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("not a rational number: ''");
  if (frac_part.size() > 15) throw std::invalid_argument("too many decimals in '" + std::string(whole) + "'");

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
  const std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
  if (ip < 0 || fp < 0) throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  Rational r(ip * scale + fp, scale);
  return negative ? -r : r;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite number");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  // Drop trailing zeros so the scale stays small.
  std::string s(buf);
  if (auto dot = s.find('.'); dot != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return parse_rational(s);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t least_integer_above(const Rational& r) {
  // floor(r) + 1; boost::rational normalizes the denominator to be positive.
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q + 1;
}

double round_up(const Rational& r, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = r * scale;
  std::int64_t q = scaled.numerator() / scaled.denominator();
  if (scaled.numerator() % scaled.denominator() != 0 && scaled.numerator() > 0) ++q;
  return static_cast<double>(q) / static_cast<double>(scale);
}

double round_nearest(const Rational& r, int digits) {
  double scale = 1.0;
  for (int i = 0; i < digits; ++i) scale *= 10.0;
  return std::round(to_double(r) * scale) / scale;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ipd
