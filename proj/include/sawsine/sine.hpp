#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sawsine/measure.hpp"
#include "sawsine/parallel.hpp"

namespace sawsine {

/// Weights of a sine polynomial f(x) = sum_k a_k sin(kx); coeffs[k-1] = a_k.
struct TrigCombination {
  int m = 0;
  std::vector<double> coeffs;
};

namespace detail {

inline constexpr double pi = std::numbers::pi_v<double>;

inline double cot(double x) { return std::cos(x) / std::sin(x); }

inline void require_m(int m, const char* who) {
  if (m < 1) throw std::domain_error(std::string(who) + ": requires m >= 1");
}

/// Arguments beyond |x| = 1e6 are reduced mod 2*pi before k-fold dilation to
/// keep the sin-argument error from growing linearly in k.
inline double reduce_angle(double x) {
  if (std::abs(x) > 1e6) x = std::fmod(x, 2 * pi);
  return x;
}

/// sum_{k=1..m} a_k sin(k x) by the Clenshaw backward recurrence: one sin and
/// one cos of x regardless of m.  Used for bulk grid scans.
inline double clenshaw_sin(const std::vector<double>& a, double cx, double sx) {
  double b1 = 0, b2 = 0;
  const double t = 2 * cx;
  for (std::size_t k = a.size(); k-- > 0;) {
    const double b0 = a[k] + t * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1 * sx;
}

}  // namespace detail

/// The maximal-sum coefficient vector: for each odd k <= m the weight
/// (2/(m+1)^2) cot(pi k/(2m+2)) contributes (m+1-k) to a_k and k to
/// a_{m+1-k}; contributions landing on the same index are summed.
/// All entries are nonnegative and sum to cm(m).
inline TrigCombination sine_coefficients(int m) {
  detail::require_m(m, "sine_coefficients");
  TrigCombination a{m, std::vector<double>(static_cast<std::size_t>(m), 0.0)};
  const double n = m + 1;
  for (int k = 1; k <= m; k += 2) {
    const double w = 2.0 / (n * n) * detail::cot(detail::pi * k / (2 * n));
    a.coeffs[static_cast<std::size_t>(k) - 1] += w * (n - k);
    a.coeffs[static_cast<std::size_t>(m - k)] += w * k;  // index m+1-k, zero-based
  }
  return a;
}

/// Single closed form for the same vector:
/// a_k = (4(m+1-k)/(m+1)^2) sin^2(ceil(m/2) k pi/(m+1)) / sin(k pi/(m+1)).
inline TrigCombination sine_coefficients_alt(int m) {
  detail::require_m(m, "sine_coefficients_alt");
  TrigCombination a{m, std::vector<double>(static_cast<std::size_t>(m), 0.0)};
  const double n = m + 1;
  const int half = (m + 1) / 2;  // ceil(m/2)
  for (int k = 1; k <= m; ++k) {
    const double s = std::sin(detail::pi * half * k / n);
    a.coeffs[static_cast<std::size_t>(k) - 1] =
        4.0 * (n - k) / (n * n) * s * s / std::sin(detail::pi * k / n);
  }
  return a;
}

/// The sharp constant c_m = (2/(m+1)) sum_{odd j <= m} cot(pi j/(2m+2));
/// equals the coefficient sum and the reciprocal of the sharp bound.
inline double cm(int m) {
  detail::require_m(m, "cm");
  double s = 0;
  for (int j = 1; j <= m; j += 2) s += detail::cot(detail::pi * j / (2.0 * (m + 1)));
  return 2.0 / (m + 1) * s;
}

/// Leading asymptotic of c_m: (2/pi) log(m+1) + (2/pi)(log(4/pi) + gamma).
inline double cm_asymptotic(int m) {
  detail::require_m(m, "cm_asymptotic");
  constexpr double euler_gamma = 0.57721566490153286061;
  constexpr double c = 2.0 / detail::pi;
  return c * std::log(static_cast<double>(m) + 1.0) + c * (std::log(4.0 / detail::pi) + euler_gamma);
}

/// The extremizing probability measure: an atom at pi j/(m+1) of mass
/// (2/((m+1) c_m)) cot(pi j/(2m+2)) for each odd j <= m.
inline RealMeasure sine_extremal_measure(int m) {
  detail::require_m(m, "sine_extremal_measure");
  const double c = cm(m);
  RealMeasure mu;
  for (int j = 1; j <= m; j += 2)
    mu.atoms.push_back({detail::pi * j / (m + 1),
                        2.0 / ((m + 1) * c) * detail::cot(detail::pi * j / (2.0 * (m + 1)))});
  return mu;
}

/// f(x) = sum_k a_k sin(kx), by direct per-term summation.
inline double evaluate_trig(const TrigCombination& a, double x) {
  x = detail::reduce_angle(x);
  double s = 0;
  for (std::size_t k = 1; k <= a.coeffs.size(); ++k)
    s += a.coeffs[k - 1] * std::sin(static_cast<double>(k) * x);
  return s;
}

/// f'(x) = sum_k k a_k cos(kx).
inline double evaluate_trig_derivative(const TrigCombination& a, double x) {
  x = detail::reduce_angle(x);
  double s = 0;
  for (std::size_t k = 1; k <= a.coeffs.size(); ++k)
    s += static_cast<double>(k) * a.coeffs[k - 1] * std::cos(static_cast<double>(k) * x);
  return s;
}

/// E_mu sin(k x).
inline double sine_expectation(const RealMeasure& mu, int k) {
  if (k < 1) throw std::domain_error("sine_expectation: requires k >= 1");
  double s = 0;
  for (const auto& a : mu.atoms) s += a.mass * std::sin(k * a.x);
  return s;
}

/// The Lipschitz constant sum_k k a_k of f (|f'| is bounded by it).
inline double lipschitz_constant(const TrigCombination& a) {
  double s = 0;
  for (std::size_t k = 1; k <= a.coeffs.size(); ++k) s += static_cast<double>(k) * a.coeffs[k - 1];
  return s;
}

/// DFT of the discrete square wave sigma_m on Z/(2m+2), where sigma_m is
/// +1 on {1..m}, -1 on {m+2..2m+1} and 0 at 0 and m+1.  values[j] holds the
/// closed form (-i/(m+1)) cot(pi j/(2m+2)) for odd j and 0 for even j;
/// direct_deviation is the largest gap to the definitional sum.
struct SquareWaveSpectrum {
  int m = 0;
  std::vector<std::complex<double>> values;
  double direct_deviation = 0;
};

inline SquareWaveSpectrum square_wave_dft(int m) {
  detail::require_m(m, "square_wave_dft");
  const int n = 2 * m + 2;
  SquareWaveSpectrum spectrum{m, std::vector<std::complex<double>>(static_cast<std::size_t>(n)), 0.0};
  for (int j = 0; j < n; ++j) {
    std::complex<double> closed =
        j % 2 == 1 ? std::complex<double>(0.0, -detail::cot(detail::pi * j / n) / (m + 1))
                   : std::complex<double>(0.0, 0.0);
    std::complex<double> direct(0.0, 0.0);
    for (int x = 1; x <= m; ++x) direct += std::polar(1.0, -2 * detail::pi * j * x / n);
    for (int x = m + 2; x < n; ++x) direct -= std::polar(1.0, -2 * detail::pi * j * x / n);
    direct /= n;
    spectrum.values[static_cast<std::size_t>(j)] = closed;
    spectrum.direct_deviation = std::max(spectrum.direct_deviation, std::abs(closed - direct));
  }
  return spectrum;
}

/// The classical cotangent-sine sum
/// sum_{odd j <= m} (2/(m+1)) cot(pi j/(2m+2)) sin(pi j k/(m+1)),
/// which equals 1 for every k in 1..m.  Returns the computed value.
inline double eisenstein_identity_check(int m, int k) {
  detail::require_m(m, "eisenstein_identity_check");
  if (k < 1 || k > m) throw std::domain_error("eisenstein_identity_check: requires 1 <= k <= m");
  double s = 0;
  for (int j = 1; j <= m; j += 2)
    s += detail::cot(detail::pi * j / (2.0 * (m + 1))) * std::sin(detail::pi * j * k / (m + 1));
  return 2.0 / (m + 1) * s;
}

/// One row of the support check: distance of f from 1 and of f' from 0 at an
/// extremal-measure atom.
struct SupportResidual {
  double point = 0;
  double f_error = 0;     // |f(point) - 1|
  double derivative = 0;  // |f'(point)|
};

/// Outcome of a grid scan of f over [0, 2*pi] with a Lipschitz-certified
/// upper bound grid_max + pi L/grid_size (L = sum k a_k, step 2*pi/grid_size).
struct GridCertificate {
  long grid_size = 0;
  double grid_max = 0;
  double argmax_x = 0;  // smallest grid point attaining grid_max
  double grid_min = 0;
  double lipschitz_constant = 0;
  double certified_upper_bound = 0;
  std::vector<SupportResidual> support_residuals;
  double endpoint_residual = 0;  // max(|f(0)|, |f(pi)|)
  bool passed = false;
};

namespace detail {
struct ChunkExtrema {
  double max = 0, min = 0;
  long argmax = 0, argmin = 0;
};
}  // namespace detail

/// Scans f on the uniform (grid_size+1)-point grid over [0, 2*pi], checks
/// f = 1 and f' = 0 at the extremal atoms and f = 0 at 0 and pi (all within
/// 1e-9), and certifies sup f <= grid_max + pi L/grid_size.  The scan is a
/// parallel map-reduce over fixed chunks with ties resolved to the smallest
/// grid point, so the result is identical for any worker count.
inline GridCertificate verify_sine(int m, long grid_size) {
  detail::require_m(m, "verify_sine");
  if (grid_size < 1000) throw std::domain_error("verify_sine: requires grid_size >= 1000");

  const TrigCombination a = sine_coefficients(m);
  GridCertificate cert;
  cert.grid_size = grid_size;
  cert.lipschitz_constant = lipschitz_constant(a);

  const double h = 2 * detail::pi / static_cast<double>(grid_size);
  auto scan = [&](long lo, long hi) {
    detail::ChunkExtrema e{-1e300, 1e300, lo, lo};
    for (long i = lo; i < hi; ++i) {
      const double x = h * static_cast<double>(i);
      const double f = detail::clenshaw_sin(a.coeffs, std::cos(x), std::sin(x));
      if (f > e.max) {
        e.max = f;
        e.argmax = i;
      }
      if (f < e.min) {
        e.min = f;
        e.argmin = i;
      }
    }
    return e;
  };
  detail::ChunkExtrema best{-1e300, 1e300, 0, 0};
  for (const auto& e : map_chunks<detail::ChunkExtrema>(grid_size + 1, scan)) {
    if (e.max > best.max) {
      best.max = e.max;
      best.argmax = e.argmax;
    }
    if (e.min < best.min) {
      best.min = e.min;
      best.argmin = e.argmin;
    }
  }
  cert.grid_max = best.max;
  cert.argmax_x = h * static_cast<double>(best.argmax);
  cert.grid_min = best.min;
  cert.certified_upper_bound = cert.grid_max + detail::pi * cert.lipschitz_constant / static_cast<double>(grid_size);

  constexpr double tol = 1e-9;
  bool ok = std::abs(cert.grid_max - 1.0) <= tol;
  for (int j = 1; j <= m; j += 2) {
    const double x0 = detail::pi * j / (m + 1);
    SupportResidual r{x0, std::abs(evaluate_trig(a, x0) - 1.0),
                      std::abs(evaluate_trig_derivative(a, x0))};
    ok = ok && r.f_error <= tol && r.derivative <= tol;
    cert.support_residuals.push_back(r);
  }
  cert.endpoint_residual = std::max(std::abs(evaluate_trig(a, 0.0)), std::abs(evaluate_trig(a, detail::pi)));
  ok = ok && cert.endpoint_residual <= tol;
  // the mirror-image lower bound (f >= -1 by oddness), with the same slack
  ok = ok && cert.grid_min >= -1.0 - detail::pi * cert.lipschitz_constant / static_cast<double>(grid_size) - tol;
  cert.passed = ok;
  return cert;
}

}  // namespace sawsine
