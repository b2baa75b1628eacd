#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace hfsplit {

// Exact scalar. cpp_rational keeps every value in lowest terms with a
// positive denominator, so equality is representation equality.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw Error(ErrorKind::ParseError, "not an integer literal: '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits);
}

}  // namespace detail

// Accepts "p" or "p/q" with q != 0.
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
  Integer num = detail::parse_integer(s.substr(0, slash));
  Integer den = detail::parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool fits_int64(const Rational& r) {
  if (!is_integral(r)) return false;
  const Integer& n = numerator(r);
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace hfsplit
