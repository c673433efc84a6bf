#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mpinv {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Stored reduced, denominator positive, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den with the sign moved onto the numerator.
/// Throws std::invalid_argument when den == 0.
Rational make_rational(Integer num, Integer den);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Parses the format produced by to_string: optional '-', digits,
/// optional "/q" with q a positive integer. Whitespace is not accepted.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace mpinv
