#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "sawsine/family.hpp"
#include "sawsine/fracparts.hpp"
#include "sawsine/measure.hpp"
#include "sawsine/rational.hpp"

namespace sawsine {

/// Weights of a combination sum_k b_k g(k x) of dilated sawtooth waves.
/// coeffs[k-1] is the weight of the k-fold dilation, k = 1..m.
struct CoefficientVector {
  Family family = Family::sawtooth;
  int m = 0;
  std::vector<Rational> coeffs;
};

/// The unique r >= 0 with 2^r < m <= 2^(r+1).  Requires m >= 2.
inline int level(int m) {
  if (m < 2) throw std::domain_error("level: requires m >= 2");
  int r = 0;
  while ((std::int64_t{1} << (r + 1)) < m) ++r;
  return r;
}

namespace detail {
// m = 1 rides along as the r = 0 degenerate case of every closed form below.
inline int level_or_zero(int m) {
  if (m < 1) throw std::domain_error("requires m >= 1");
  return m == 1 ? 0 : level(m);
}
}  // namespace detail

/// Weights of 2 g(x) + sum_{j=1..r} g(2^j x), the power-of-two combination
/// for m = 2^r.  Coefficient sum is r + 2.
inline CoefficientVector coefficients_pow2(int r) {
  if (r < 0) throw std::domain_error("coefficients_pow2: requires r >= 0");
  if (r > 30) throw std::domain_error("coefficients_pow2: r too large");
  const int m = 1 << r;
  CoefficientVector b{Family::sawtooth, m, std::vector<Rational>(m, Rational(0))};
  b.coeffs[0] = 2;
  for (int j = 1; j <= r; ++j) b.coeffs[(1 << j) - 1] += 1;
  return b;
}

/// The optimal weight vector for general m: start from the power-of-two
/// combination at level r, then for each dilation l in (2^r, m] move mass
/// m/(l(l-1)) from index 1 onto indices l and 2^(r+1)+1-l.  Contributions
/// landing on the same index are summed, so each dilation carries a single
/// collapsed weight.  All entries are nonnegative; the sum is r + 1 + m/2^r.
inline CoefficientVector coefficients(int m) {
  const int r = detail::level_or_zero(m);
  CoefficientVector b{Family::sawtooth, m, std::vector<Rational>(m, Rational(0))};
  b.coeffs[0] = 2;
  for (int j = 1; j <= r; ++j) b.coeffs[(1 << j) - 1] += 1;
  for (int l = (1 << r) + 1; l <= m; ++l) {
    const Rational c = make_rational(m, std::int64_t{l} * (l - 1));
    b.coeffs[l - 1] += c;
    b.coeffs[(1 << (r + 1)) - l] += c;  // index 2^(r+1)+1-l, zero-based
    b.coeffs[0] -= c;
  }
  return b;
}

/// Closed form r + 1 + m/2^r for the sum of coefficients(m).
inline Rational coefficient_sum(int m) {
  const int r = detail::level_or_zero(m);
  return Rational(r + 1) + make_rational(m, std::int64_t{1} << r);
}

/// The sharp constant 2^r / ((r+1) 2^r + m); reciprocal of coefficient_sum.
inline Rational bound(int m) {
  const int r = detail::level_or_zero(m);
  const std::int64_t p = std::int64_t{1} << r;
  return make_rational(p, (r + 1) * p + m);
}

/// The extremizing probability measure: atoms at 1/2, 1/4, ..., 1/2^(r+1)
/// of mass 2^r/D each and an atom at 1/(2m) of mass m/D, D = (r+1) 2^r + m.
/// For m = 1 the two descriptions coincide and merge into a unit atom at 1/2.
inline ExactMeasure extremal_measure(int m) {
  const int r = detail::level_or_zero(m);
  const std::int64_t p = std::int64_t{1} << r;
  const std::int64_t d = (r + 1) * p + m;
  ExactMeasure mu;
  for (int j = 1; j <= r + 1; ++j) mu.add_mass(make_rational(1, std::int64_t{1} << j), make_rational(p, d));
  mu.add_mass(make_rational(1, 2 * std::int64_t{m}), make_rational(m, d));
  return mu;
}

/// sum_k b_k g(k x), exactly.
inline Rational evaluate(const CoefficientVector& b, const Rational& x) {
  if (b.family != Family::sawtooth) throw std::invalid_argument("evaluate: sawtooth vectors only");
  Rational s;
  for (std::size_t k = 1; k <= b.coeffs.size(); ++k)
    if (b.coeffs[k - 1] != 0) s += b.coeffs[k - 1] * sawtooth_exact(Rational(static_cast<int>(k)) * x);
  return s;
}

/// sum_k b_k g(k x) in floating point.
inline double evaluate(const CoefficientVector& b, double x) {
  if (b.family != Family::sawtooth) throw std::invalid_argument("evaluate: sawtooth vectors only");
  double s = 0;
  for (std::size_t k = 1; k <= b.coeffs.size(); ++k)
    s += to_double(b.coeffs[k - 1]) * sawtooth(static_cast<double>(k) * x);
  return s;
}

/// All jump locations of x -> sum_{k<=m} b_k g(kx) in one period: the points
/// (2n+1)/(2k) mod 1 for k = 1..m, deduplicated and sorted ascending.
inline std::vector<Rational> breakpoints(int m) {
  if (m < 1) throw std::domain_error("breakpoints: requires m >= 1");
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(m) * (m + 1) / 2);
  for (int k = 1; k <= m; ++k)
    for (int n = 0; n < k; ++n) pts.push_back(make_rational(2 * n + 1, 2 * std::int64_t{k}));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Outcome of an exact max-bound check over one period.
struct VerificationCertificate {
  Rational max_value;
  std::vector<Rational> argmax;  // every location attaining max_value
  bool passed = false;           // max_value <= 1
};

/// Exact supremum of sum_k b_k g(kx) over one period, with its argmax set.
///
/// Between consecutive jump locations the sum is affine with slope
/// sum_k k b_k >= 0, and g attains the upper value 1/2 at each of its own
/// jumps (left-continuity), so on every half-open interval (x_{i-1}, x_i]
/// the supremum is attained at x_i.  Scanning the exact values at all
/// breakpoints therefore gives the true supremum, attained.
inline VerificationCertificate verify_exact(const CoefficientVector& b) {
  if (b.family != Family::sawtooth) throw std::invalid_argument("verify_exact: sawtooth vectors only");
  if (b.coeffs.empty()) throw std::invalid_argument("verify_exact: empty coefficient vector");
  for (const Rational& c : b.coeffs)
    if (c < 0) throw std::invalid_argument("verify_exact: negative coefficient");

  VerificationCertificate cert;
  bool first = true;
  for (const Rational& x : breakpoints(static_cast<int>(b.coeffs.size()))) {
    Rational v = evaluate(b, x);
    if (first || v > cert.max_value) {
      cert.max_value = v;
      cert.argmax.assign(1, x);
      first = false;
    } else if (v == cert.max_value) {
      cert.argmax.push_back(x);
    }
  }
  cert.passed = cert.max_value <= 1;
  return cert;
}

/// E_mu g(k x) = sum over atoms of mass * g(k * location).
template <class T>
T expectation(const AtomicMeasure<T>& mu, int k) {
  if (k < 1) throw std::domain_error("expectation: requires k >= 1");
  T s{};
  for (const auto& a : mu.atoms) {
    if constexpr (std::is_same_v<T, Rational>)
      s += a.mass * sawtooth_exact(Rational(k) * a.x);
    else
      s += a.mass * sawtooth(static_cast<double>(k) * a.x);
  }
  return s;
}

struct DirichletMin {
  int k = 0;
  double value = 0;
};

/// The smallest k in 1..m minimizing |g(kx)|, together with that minimum.
/// Pigeonholing the m+1 points {0, x, ..., mx} shows the minimum never
/// exceeds 1/(m+1).
inline DirichletMin dirichlet_min(double x, int m) {
  if (m < 1) throw std::domain_error("dirichlet_min: requires m >= 1");
  DirichletMin best{1, std::abs(sawtooth(x))};
  for (int k = 2; k <= m; ++k) {
    double v = std::abs(sawtooth(k * x));
    if (v < best.value) best = {k, v};
  }
  return best;
}

/// sum_{k=1..m} g(k/2) by direct summation; closed form ceil(m/2)/2.
inline Rational unweighted_sum_at_half(int m) {
  if (m < 1) throw std::domain_error("unweighted_sum_at_half: requires m >= 1");
  Rational s;
  for (int k = 1; k <= m; ++k) s += sawtooth_exact(make_rational(k, 2));
  return s;
}

}  // namespace sawsine
