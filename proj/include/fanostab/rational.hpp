#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "fanostab/errors.hpp"

namespace fanostab {

// Arbitrary-precision signed integer. All lattice data is integral; nothing in
// the library ever rounds through floating point.
using Integer = boost::multiprecision::cpp_int;

// Exact rational, kept in lowest terms with positive denominator (the backend
// maintains that canonical form, see make_rational for sign handling).
using Rational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form. The backend reduces to lowest terms but
// refuses negative denominators outright, so normalize the sign here.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw input_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Serialized form: "p/q" in lowest terms, or plain "p" when q == 1.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline Integer parse_integer(const std::string& text) {
  if (!is_integer_token(text)) throw input_error("bad integer: '" + text + "'");
  return Integer(text);
}

// Accepts "p/q" or "p"; normalizes, so "-2/4" parses to -1/2.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return make_rational(parse_integer(text.substr(0, slash)),
                       parse_integer(text.substr(slash + 1)));
}

// floor(a/b), exact, b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw input_error("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// ceil(a/b), exact, b != 0.
inline Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

inline Integer rational_floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

inline Integer rational_ceil(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

}  // namespace fanostab
