#pragma once

#include <cmath>
#include <stdexcept>

#include "sawsine/sine.hpp"

namespace sawsine {

/// Fejer kernel F_{m+1}(x) = (1/(m+1)) (sin((m+1)x/2) / sin(x/2))^2.
/// The removable singularity at x in 2*pi*Z evaluates to the limit m+1;
/// the kernel is nonnegative and vanishes at the other even multiples of
/// pi/(m+1).
inline double fejer_kernel(int m, double x) {
  if (m < 0) throw std::domain_error("fejer_kernel: requires m >= 0");
  const double s = std::sin(x / 2);
  if (std::abs(s) < 1e-9) return m + 1.0;
  const double t = std::sin((m + 1) * x / 2);
  return t * t / (s * s) / (m + 1);
}

/// The square wave sampled at pi j/(m+1): +1 left of pi, -1 right of pi,
/// 0 at the nodes 0 and pi.  Integer logic on j keeps the sign exact.
inline int square_wave_sign(int m, int j) {
  const int n = 2 * m + 2;
  j %= n;
  if (j < 0) j += n;
  if (j == 0 || j == m + 1) return 0;
  return j < m + 1 ? 1 : -1;
}

/// f as a Fejer-kernel interpolation of the square wave:
/// (1/(m+1)) sum over odd j in (0, 2m+2) of sign * F_{m+1}(x - pi j/(m+1)).
/// Agrees with evaluate_trig(sine_coefficients(m), x).
inline double fejer_interpolant(int m, double x) {
  detail::require_m(m, "fejer_interpolant");
  double s = 0;
  for (int j = 1; j < 2 * m + 2; j += 2) {
    const int sign = square_wave_sign(m, j);
    if (sign != 0) s += sign * fejer_kernel(m, x - detail::pi * j / (m + 1));
  }
  return s / (m + 1);
}

/// Grid check of the kernel-difference sign conditions behind the
/// interpolant's boundedness.
struct FejerSignReport {
  int m = 0;
  long n_points = 0;
  double min_on_plus_range = 0;   // should stay >= -1e-10
  double max_on_minus_range = 0;  // should stay <= 1e-10
  bool passed = false;
};

/// For odd m checks D(x) = F(x) - F(x - pi) >= 0 on [-pi/2, pi/2] and <= 0 on
/// [pi/2, 3pi/2].  For even m checks
/// D(x) = 2F(x) - F(x - m pi/(m+1)) - F(x - (m+2) pi/(m+1)) on the same
/// intervals shrunk by pi/(m+1) at both ends.  Each interval is sampled at
/// n_points evenly spaced points (endpoints included); tolerance 1e-10.
inline FejerSignReport fejer_sign_lemma(int m, long n_points) {
  detail::require_m(m, "fejer_sign_lemma");
  if (n_points < 100) throw std::domain_error("fejer_sign_lemma: requires n_points >= 100");

  const double shrink = m % 2 == 1 ? 0.0 : detail::pi / (m + 1);
  auto diff = [&](double x) {
    if (m % 2 == 1) return fejer_kernel(m, x) - fejer_kernel(m, x - detail::pi);
    return 2 * fejer_kernel(m, x) - fejer_kernel(m, x - detail::pi * m / (m + 1)) -
           fejer_kernel(m, x - detail::pi * (m + 2) / (m + 1));
  };
  auto extremum = [&](double lo, double hi, bool want_min) {
    double best = diff(lo);
    for (long i = 1; i < n_points; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
      const double v = diff(x);
      if (want_min ? v < best : v > best) best = v;
    }
    return best;
  };

  FejerSignReport rep;
  rep.m = m;
  rep.n_points = n_points;
  rep.min_on_plus_range = extremum(-detail::pi / 2 + shrink, detail::pi / 2 - shrink, true);
  rep.max_on_minus_range = extremum(detail::pi / 2 + shrink, 3 * detail::pi / 2 - shrink, false);
  rep.passed = rep.min_on_plus_range >= -1e-10 && rep.max_on_minus_range <= 1e-10;
  return rep;
}

}  // namespace sawsine
