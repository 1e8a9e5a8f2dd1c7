#pragma once

#include <cmath>
#include <stdexcept>

#include "sawsine/rational.hpp"

namespace sawsine {

namespace detail {
inline void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(who) + ": non-finite argument");
}
}  // namespace detail

/// Fractional part x - floor(x), with values in [0, 1).
inline double lower_frac(double x) {
  detail::require_finite(x, "lower_frac");
  return x - std::floor(x);
}

/// Upper fractional part x - ceil(x) + 1, with values in (0, 1].
/// Agrees with lower_frac except at integers, where it returns 1 instead of 0.
inline double upper_frac(double x) {
  detail::require_finite(x, "upper_frac");
  return x - std::ceil(x) + 1.0;
}

/// Sawtooth wave: the representative of x mod 1 in (-1/2, 1/2].
/// Odd away from half-integers, 1-periodic, slope 1 between jumps, and
/// takes the value +1/2 (not -1/2) at half-integers.
inline double sawtooth(double x) {
  detail::require_finite(x, "sawtooth");
  return x + std::floor(0.5 - x);
}

inline Rational lower_frac_exact(const Rational& q) { return q - Rational(floor_int(q)); }

inline Rational upper_frac_exact(const Rational& q) { return q - Rational(ceil_int(q)) + 1; }

inline Rational sawtooth_exact(const Rational& q) {
  return q + Rational(floor_int(Rational(1, 2) - q));
}

}  // namespace sawsine
