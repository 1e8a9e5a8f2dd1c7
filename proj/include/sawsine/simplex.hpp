#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sawsine/rational.hpp"

namespace sawsine {

enum class Sense { le, eq, ge };
enum class LPStatus { optimal, unbounded, infeasible };

/// Dense LP in the orientation "maximize objective . x subject to rows".
/// Variables are >= 0 unless flagged free (unbounded below).
/// T = Rational runs every pivot exactly; T = double uses tolerance 1e-9.
template <class T>
struct LinearProgram {
  std::vector<T> objective;
  std::vector<std::vector<T>> constraint_matrix;
  std::vector<T> constraint_rhs;
  std::vector<Sense> constraint_sense;
  std::vector<std::uint8_t> free_variable;  // empty means all bounded below by 0

  std::size_t num_variables() const { return objective.size(); }
  std::size_t num_constraints() const { return constraint_matrix.size(); }
  bool is_free(std::size_t j) const { return !free_variable.empty() && free_variable[j] != 0; }

  void validate() const {
    if (constraint_rhs.size() != constraint_matrix.size() ||
        constraint_sense.size() != constraint_matrix.size())
      throw std::invalid_argument("LinearProgram: row count mismatch");
    for (const auto& row : constraint_matrix)
      if (row.size() != objective.size())
        throw std::invalid_argument("LinearProgram: row width mismatch");
    if (!free_variable.empty() && free_variable.size() != objective.size())
      throw std::invalid_argument("LinearProgram: free-variable flags mismatch");
  }
};

template <class T>
struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  T value{};
  std::vector<T> point;
  long iterations = 0;
};

namespace detail {

template <class T>
struct SimplexTraits {
  static T zero_tol() { return T(0); }  // exact arithmetic: no slop anywhere
  static T feas_tol() { return T(0); }
};
template <>
struct SimplexTraits<double> {
  static double zero_tol() { return 1e-9; }
  static double feas_tol() { return 1e-7; }
};

template <class T>
T absval(const T& v) {
  return v < 0 ? T(-v) : v;
}

/// Two-phase dense tableau simplex.  Entering columns follow Dantzig's rule
/// (most negative reduced cost) while the objective is moving; a run of
/// degenerate pivots switches to Bland's anti-cycling rule (smallest
/// improving column index, leaving row by smallest basic variable among
/// minimal ratios) until progress resumes.  Strict improvements are finite,
/// so any non-terminating run would end inside a pure Bland phase — which
/// terminates on every exact-arithmetic input.
template <class T>
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram<T>& lp) : lp_(lp) {
    lp.validate();
    build();
  }

  LPSolution<T> solve() {
    if (art_begin_ < width_) {  // some artificials exist: phase 1
      set_phase1_costs();
      if (!pivot_loop(false))
        throw std::runtime_error("simplex: phase-1 objective unbounded (numerical trouble)");
      // phase-1 optimum is -(sum of artificials); nonzero means no feasible point
      if (objective_value() < -SimplexTraits<T>::feas_tol()) return make_result(LPStatus::infeasible);
      drive_out_artificials();
    }
    set_phase2_costs();
    if (!pivot_loop(true)) return make_result(LPStatus::unbounded);
    return make_result(LPStatus::optimal);
  }

 private:
  static constexpr long iteration_limit = 2000000;

  const LinearProgram<T>& lp_;
  std::size_t n_orig_ = 0, n_struct_ = 0, slack_begin_ = 0, art_begin_ = 0, width_ = 0;
  std::vector<long> neg_col_;  // free variable -> column of its negated copy
  std::vector<std::vector<T>> tab_;
  std::vector<T> rhs_;
  std::vector<int> basis_;
  std::vector<T> cost_;  // current-phase objective per column (maximized)
  std::vector<T> red_;   // reduced costs z_j - c_j
  long iterations_ = 0;

  void build() {
    n_orig_ = lp_.num_variables();
    neg_col_.assign(n_orig_, -1);
    std::size_t extra = 0;
    for (std::size_t j = 0; j < n_orig_; ++j)
      if (lp_.is_free(j)) neg_col_[j] = static_cast<long>(n_orig_ + extra++);
    n_struct_ = n_orig_ + extra;

    const std::size_t m = lp_.num_constraints();
    std::size_t slack_count = 0, art_count = 0;
    std::vector<Sense> sense(m);
    std::vector<bool> flip(m);
    for (std::size_t i = 0; i < m; ++i) {
      flip[i] = lp_.constraint_rhs[i] < 0;  // keep rhs >= 0 for the initial basis
      Sense s = lp_.constraint_sense[i];
      if (flip[i]) s = (s == Sense::le ? Sense::ge : s == Sense::ge ? Sense::le : Sense::eq);
      if (s == Sense::ge && lp_.constraint_rhs[i] == 0) {
        // ">= 0" rows negate into "<= 0" rows, whose slack is basic feasible:
        // saves an artificial per row
        flip[i] = !flip[i];
        s = Sense::le;
      }
      sense[i] = s;
      if (s != Sense::eq) ++slack_count;
      if (s != Sense::le) ++art_count;
    }
    slack_begin_ = n_struct_;
    art_begin_ = slack_begin_ + slack_count;
    width_ = art_begin_ + art_count;

    tab_.assign(m, std::vector<T>(width_, T{}));
    rhs_.assign(m, T{});
    basis_.assign(m, -1);
    std::size_t s = slack_begin_, a = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_orig_; ++j) {
        tab_[i][j] = flip[i] ? T(-lp_.constraint_matrix[i][j]) : lp_.constraint_matrix[i][j];
        if (neg_col_[j] >= 0) tab_[i][static_cast<std::size_t>(neg_col_[j])] = -tab_[i][j];
      }
      rhs_[i] = flip[i] ? T(-lp_.constraint_rhs[i]) : lp_.constraint_rhs[i];
      switch (sense[i]) {
        case Sense::le:
          tab_[i][s] = 1;
          basis_[i] = static_cast<int>(s++);
          break;
        case Sense::ge:
          tab_[i][s++] = -1;
          tab_[i][a] = 1;
          basis_[i] = static_cast<int>(a++);
          break;
        case Sense::eq:
          tab_[i][a] = 1;
          basis_[i] = static_cast<int>(a++);
          break;
      }
    }
  }

  void set_phase1_costs() {
    cost_.assign(width_, T{});
    for (std::size_t j = art_begin_; j < width_; ++j) cost_[j] = -1;  // maximize -(sum artificials)
    recompute_reduced();
  }

  void set_phase2_costs() {
    cost_.assign(width_, T{});
    for (std::size_t j = 0; j < n_orig_; ++j) {
      cost_[j] = lp_.objective[j];
      if (neg_col_[j] >= 0) cost_[static_cast<std::size_t>(neg_col_[j])] = -lp_.objective[j];
    }
    recompute_reduced();
  }

  void recompute_reduced() {
    red_.assign(width_, T{});
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      const T& cb = cost_[static_cast<std::size_t>(basis_[i])];
      if (cb != 0)
        for (std::size_t j = 0; j < width_; ++j) red_[j] += cb * tab_[i][j];
    }
    for (std::size_t j = 0; j < width_; ++j) red_[j] -= cost_[j];
  }

  T objective_value() const {
    T v{};
    for (std::size_t i = 0; i < tab_.size(); ++i)
      v += cost_[static_cast<std::size_t>(basis_[i])] * rhs_[i];
    return v;
  }

  // exclude_artificials: phase 2 never lets an artificial re-enter
  bool pivot_loop(bool exclude_artificials) {
    constexpr long degenerate_threshold = 64;
    const std::size_t limit = exclude_artificials ? art_begin_ : width_;
    const T tol = SimplexTraits<T>::zero_tol();
    long degenerate_run = 0;
    for (;;) {
      long enter = -1;
      if (degenerate_run > degenerate_threshold) {  // Bland: smallest improving index
        for (std::size_t j = 0; j < limit; ++j)
          if (red_[j] < -tol) {
            enter = static_cast<long>(j);
            break;
          }
      } else {  // Dantzig: most negative reduced cost (first on ties)
        for (std::size_t j = 0; j < limit; ++j)
          if (red_[j] < -tol && (enter < 0 || red_[j] < red_[static_cast<std::size_t>(enter)]))
            enter = static_cast<long>(j);
      }
      if (enter < 0) return true;

      long leave = -1;
      T best{};
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        const T& piv = tab_[i][static_cast<std::size_t>(enter)];
        if (piv > tol) {
          T ratio = rhs_[i] / piv;
          if (leave < 0 || ratio < best ||
              (ratio == best && basis_[i] < basis_[static_cast<std::size_t>(leave)])) {
            leave = static_cast<long>(i);
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;

      if (rhs_[static_cast<std::size_t>(leave)] > tol)
        degenerate_run = 0;  // strict objective progress
      else
        ++degenerate_run;
      pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
      if (++iterations_ > iteration_limit) throw std::runtime_error("simplex: iteration limit exceeded");
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T p = tab_[r][c];
    for (std::size_t j = 0; j < width_; ++j) tab_[r][j] /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r) continue;
      const T f = tab_[i][c];
      if (f != 0) {
        for (std::size_t j = 0; j < width_; ++j) tab_[i][j] -= f * tab_[r][j];
        rhs_[i] -= f * rhs_[r];
      }
    }
    const T fr = red_[c];
    if (fr != 0)
      for (std::size_t j = 0; j < width_; ++j) red_[j] -= fr * tab_[r][j];
    basis_[r] = static_cast<int>(c);
  }

  /// After a feasible phase 1, swap every still-basic artificial (value 0)
  /// for a non-artificial column; rows with no eligible pivot are redundant
  /// constraints and are dropped.
  void drive_out_artificials() {
    const T tol = SimplexTraits<T>::zero_tol();
    for (std::size_t i = 0; i < tab_.size();) {
      if (static_cast<std::size_t>(basis_[i]) < art_begin_) {
        ++i;
        continue;
      }
      long c = -1;
      for (std::size_t j = 0; j < art_begin_; ++j)
        if (absval(tab_[i][j]) > tol) {
          c = static_cast<long>(j);
          break;
        }
      if (c >= 0) {
        pivot(i, static_cast<std::size_t>(c));  // degenerate pivot: rhs is 0
        ++i;
      } else {
        tab_.erase(tab_.begin() + static_cast<long>(i));
        rhs_.erase(rhs_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
      }
    }
  }

  LPSolution<T> make_result(LPStatus status) {
    LPSolution<T> sol;
    sol.status = status;
    sol.iterations = iterations_;
    if (status != LPStatus::optimal) return sol;
    std::vector<T> full(n_struct_, T{});
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (static_cast<std::size_t>(basis_[i]) < n_struct_)
        full[static_cast<std::size_t>(basis_[i])] = rhs_[i];
    sol.point.resize(n_orig_);
    for (std::size_t j = 0; j < n_orig_; ++j) {
      sol.point[j] = full[j];
      if (neg_col_[j] >= 0) sol.point[j] -= full[static_cast<std::size_t>(neg_col_[j])];
      sol.value += lp_.objective[j] * sol.point[j];
    }
    return sol;
  }
};

template <class T>
std::string entry_string(const T& v);
template <>
inline std::string entry_string<Rational>(const Rational& v) {
  return to_string(v);
}
template <>
inline std::string entry_string<double>(const double& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Solves max objective.x over the constraints; exactness is determined by T.
template <class T>
LPSolution<T> simplex_solve(const LinearProgram<T>& lp) {
  return detail::SimplexSolver<T>(lp).solve();
}

/// Worst constraint/bound violation of a candidate point (0 when feasible;
/// exact zero required of exact-mode solutions).
template <class T>
T max_constraint_violation(const LinearProgram<T>& lp, const std::vector<T>& x) {
  lp.validate();
  if (x.size() != lp.num_variables())
    throw std::invalid_argument("max_constraint_violation: point size mismatch");
  T worst{};
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    T lhs{};
    for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.constraint_matrix[i][j] * x[j];
    T v{};
    switch (lp.constraint_sense[i]) {
      case Sense::le: v = lhs - lp.constraint_rhs[i]; break;
      case Sense::ge: v = lp.constraint_rhs[i] - lhs; break;
      case Sense::eq: v = detail::absval(T(lhs - lp.constraint_rhs[i])); break;
    }
    if (v > worst) worst = v;
  }
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!lp.is_free(j) && -x[j] > worst) worst = -x[j];
  return worst;
}

/// Plain-text tableau export for external cross-validation: the objective
/// row, then one constraint per line with its sense and right-hand side,
/// then the indices (1-based) of free variables.  Exact entries print as
/// canonical rationals, floating entries with 17 significant digits.
template <class T>
void write_tableau(const LinearProgram<T>& lp, std::ostream& os) {
  lp.validate();
  os << "maximize:";
  for (const T& c : lp.objective) os << ' ' << detail::entry_string(c);
  os << "\nsubject_to:\n";
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    for (std::size_t j = 0; j < lp.num_variables(); ++j) {
      if (j) os << ' ';
      os << detail::entry_string(lp.constraint_matrix[i][j]);
    }
    const char* s = lp.constraint_sense[i] == Sense::le   ? "<="
                    : lp.constraint_sense[i] == Sense::ge ? ">="
                                                          : "=";
    os << ' ' << s << ' ' << detail::entry_string(lp.constraint_rhs[i]) << '\n';
  }
  os << "free:";
  bool any = false;
  for (std::size_t j = 0; j < lp.num_variables(); ++j)
    if (lp.is_free(j)) {
      os << ' ' << (j + 1);
      any = true;
    }
  if (!any) os << " none";
  os << '\n';
}

}  // namespace sawsine
