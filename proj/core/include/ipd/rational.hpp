#ifndef IPD_RATIONAL_HPP
#define IPD_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ipd {

using Rational = boost::rational<std::int64_t>;

// Parses "3", "-2", "2.5", "0.025" or "7/3" exactly.
Rational parse_rational(std::string_view text);

// Exact conversion of a double that has a short decimal representation
// (up to 12 significant fractional digits), e.g. 2.6 -> 13/5.
Rational rational_from_double(double value);

double to_double(const Rational& r);

// Least integer strictly greater than r.
std::int64_t least_integer_above(const Rational& r);

// Round up to `digits` decimal places.
double round_up(const Rational& r, int digits);
double round_nearest(const Rational& r, int digits);

std::string to_string(const Rational& r);

}  // namespace ipd

#endif  // IPD_RATIONAL_HPP
