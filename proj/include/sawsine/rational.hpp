#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace sawsine {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form (reduced, positive denominator).
/// Throws std::domain_error if den == 0.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline Rational make_rational(long long num, long long den) {
  return make_rational(Int(num), Int(den));
}

/// Largest integer <= q.  (cpp_int division truncates toward zero, so
/// negative non-integers need a fixup.)
inline Int floor_int(const Rational& q) {
  Int n = numerator(q);
  Int d = denominator(q);
  Int t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

/// Smallest integer >= q.
inline Int ceil_int(const Rational& q) { return -floor_int(Rational(-q)); }

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

/// Parses "p" or "p/q" (optional leading '-', q > 0); result is reduced.
/// Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
  };
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer(num, true) || !is_integer(den, false)) fail();
  Int d{std::string(den)};
  if (d == 0) fail();
  return make_rational(Int{std::string(num)}, std::move(d));
}

}  // namespace sawsine
