#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sawsine/family.hpp"
#include "sawsine/sawtooth.hpp"
#include "sawsine/simplex.hpp"
#include "sawsine/sine.hpp"

namespace sawsine {

namespace detail {
inline Rational h_value(Family f, int k, const Rational& x) {
  if (f != Family::sawtooth) throw std::invalid_argument("exact LPs exist for the sawtooth family only");
  return sawtooth_exact(Rational(k) * x);
}
inline double h_value(Family f, int k, double x) {
  return f == Family::sawtooth ? sawtooth(k * x) : std::sin(k * x);
}
}  // namespace detail

/// The discretized dual ("coefficient") program: maximize sum_k a_k subject
/// to sum_k a_k h(k x_i) <= 1 at every constraint point and a_k >= 0.  With
/// the sawtooth family and the full breakpoint set the discretization is
/// exact, because the constrained function is affine increasing between
/// breakpoints.
template <class T>
LinearProgram<T> build_coefficient_lp(Family family, int m, const std::vector<T>& constraint_points) {
  if (m < 1) throw std::domain_error("build_coefficient_lp: requires m >= 1");
  if (constraint_points.empty()) throw std::invalid_argument("build_coefficient_lp: no constraint points");
  LinearProgram<T> lp;
  lp.objective.assign(static_cast<std::size_t>(m), T(1));
  for (const T& x : constraint_points) {
    std::vector<T> row(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) row[static_cast<std::size_t>(k) - 1] = detail::h_value(family, k, x);
    lp.constraint_matrix.push_back(std::move(row));
    lp.constraint_rhs.push_back(T(1));
    lp.constraint_sense.push_back(Sense::le);
  }
  return lp;
}

/// The discretized primal ("measure") program: variables are atom masses p_i
/// on the given support plus a free level t; maximize t subject to
/// sum_i p_i h(k x_i) >= t for k = 1..m and sum_i p_i = 1, p_i >= 0.
/// Restricting to a finite support can only lower the optimum, with equality
/// when the support contains the extremal atoms.
template <class T>
LinearProgram<T> build_measure_lp(Family family, int m, const std::vector<T>& support_points) {
  if (m < 1) throw std::domain_error("build_measure_lp: requires m >= 1");
  if (support_points.empty()) throw std::invalid_argument("build_measure_lp: no support points");
  const std::size_t n = support_points.size();
  LinearProgram<T> lp;
  lp.objective.assign(n + 1, T(0));
  lp.objective[n] = 1;  // t
  lp.free_variable.assign(n + 1, 0);
  lp.free_variable[n] = 1;
  for (int k = 1; k <= m; ++k) {
    std::vector<T> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = detail::h_value(family, k, support_points[i]);
    row[n] = -1;
    lp.constraint_matrix.push_back(std::move(row));
    lp.constraint_rhs.push_back(T(0));
    lp.constraint_sense.push_back(Sense::ge);
  }
  std::vector<T> mass_row(n + 1, T(1));
  mass_row[n] = 0;
  lp.constraint_matrix.push_back(std::move(mass_row));
  lp.constraint_rhs.push_back(T(1));
  lp.constraint_sense.push_back(Sense::eq);
  return lp;
}

/// Exact two-sided optimality confirmation for the sawtooth family.
struct SawtoothDualityReport {
  int m = 0;
  Rational dual_value;    // coefficient LP over the breakpoints
  Rational primal_value;  // measure LP over breakpoints + extremal atoms
  long dual_iterations = 0;
  long primal_iterations = 0;
  bool matches_closed_forms = false;  // dual = coefficient_sum(m), primal = bound(m)
  bool product_is_one = false;
  bool passed() const { return matches_closed_forms && product_is_one; }
};

/// Solves both sawtooth LPs with exact pivoting and checks the optima against
/// the closed forms.  The measure-LP support is the breakpoint set united
/// with the extremal atoms (the atoms are themselves breakpoints, so this is
/// defensive only).
inline SawtoothDualityReport duality_cross_check_sawtooth(int m) {
  if (m < 1 || m > 64) throw std::domain_error("duality_cross_check_sawtooth: requires 1 <= m <= 64");
  SawtoothDualityReport rep;
  rep.m = m;

  const std::vector<Rational> pts = breakpoints(m);
  auto dual = simplex_solve(build_coefficient_lp(Family::sawtooth, m, pts));
  if (dual.status != LPStatus::optimal) throw std::runtime_error("sawtooth coefficient LP not optimal");
  rep.dual_value = dual.value;
  rep.dual_iterations = dual.iterations;

  std::vector<Rational> support = pts;
  for (const auto& atom : extremal_measure(m).atoms) support.push_back(atom.x);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  auto primal = simplex_solve(build_measure_lp(Family::sawtooth, m, support));
  if (primal.status != LPStatus::optimal) throw std::runtime_error("sawtooth measure LP not optimal");
  rep.primal_value = primal.value;
  rep.primal_iterations = primal.iterations;

  rep.matches_closed_forms = rep.dual_value == coefficient_sum(m) && rep.primal_value == bound(m);
  rep.product_is_one = rep.dual_value * rep.primal_value == 1;
  return rep;
}

/// Optimal value of the sine coefficient LP on a uniform n-point grid over
/// [0, 2*pi).  Solved through the transposed program (minimize sum y_i
/// subject to sum_i y_i sin(k x_i) >= 1, y >= 0): by strong LP duality the
/// two optima coincide, and the transposed tableau is m-by-n instead of
/// n-by-n, which keeps refined grids cheap.
inline double sine_grid_dual_value(int m, long grid_points, long* iterations = nullptr) {
  if (m < 1) throw std::domain_error("sine_grid_dual_value: requires m >= 1");
  if (grid_points < 8) throw std::domain_error("sine_grid_dual_value: grid too small");
  LinearProgram<double> lp;
  lp.objective.assign(static_cast<std::size_t>(grid_points), -1.0);  // maximize -(sum y) = -min sum y
  for (int k = 1; k <= m; ++k) {
    std::vector<double> row(static_cast<std::size_t>(grid_points));
    for (long i = 0; i < grid_points; ++i)
      row[static_cast<std::size_t>(i)] = std::sin(k * (2 * detail::pi * static_cast<double>(i) / static_cast<double>(grid_points)));
    lp.constraint_matrix.push_back(std::move(row));
    lp.constraint_rhs.push_back(1.0);
    lp.constraint_sense.push_back(Sense::ge);
  }
  auto sol = simplex_solve(lp);
  if (sol.status != LPStatus::optimal) throw std::runtime_error("sine grid LP not optimal");
  if (iterations) *iterations = sol.iterations;
  return -sol.value;
}

/// Numerical optimality confirmation for the sine family: a grid-refinement
/// ladder of dual values closing in on cm(m) from above, plus the measure LP
/// on the extremal support.
struct SineDualityReport {
  int m = 0;
  std::vector<long> grid_sizes;
  std::vector<double> dual_values;
  double cm_value = 0;
  double final_relative_gap = 0;   // |last dual - cm| / cm
  double primal_value = 0;         // measure LP on the extremal atoms
  double primal_gap = 0;           // |primal - 1/cm|
  double duality_product_gap = 0;  // |last dual * primal - 1|
  bool monotone = false;           // dual values nonincreasing down the ladder
  bool passed() const {
    return monotone && final_relative_gap < 1e-6 && primal_gap < 1e-9 && duality_product_gap < 1e-6;
  }
};

inline SineDualityReport duality_cross_check_sine(int m, long max_grid = 16384) {
  if (m < 1 || m > 32) throw std::domain_error("duality_cross_check_sine: requires 1 <= m <= 32");
  if (max_grid < 1024) throw std::domain_error("duality_cross_check_sine: requires max_grid >= 1024");
  SineDualityReport rep;
  rep.m = m;
  rep.cm_value = cm(m);

  for (long n = 1024; n <= max_grid; n *= 2) {
    rep.grid_sizes.push_back(n);
    rep.dual_values.push_back(sine_grid_dual_value(m, n));
  }
  rep.monotone = true;
  for (std::size_t i = 1; i < rep.dual_values.size(); ++i)
    rep.monotone = rep.monotone && rep.dual_values[i] <= rep.dual_values[i - 1] + 1e-12;
  rep.final_relative_gap = std::abs(rep.dual_values.back() - rep.cm_value) / rep.cm_value;

  std::vector<double> support;
  for (const auto& atom : sine_extremal_measure(m).atoms) support.push_back(atom.x);
  auto primal = simplex_solve(build_measure_lp(Family::sine, m, support));
  if (primal.status != LPStatus::optimal) throw std::runtime_error("sine measure LP not optimal");
  rep.primal_value = primal.value;
  rep.primal_gap = std::abs(rep.primal_value - 1.0 / rep.cm_value);
  rep.duality_product_gap = std::abs(rep.dual_values.back() * rep.primal_value - 1.0);
  return rep;
}

}  // namespace sawsine
