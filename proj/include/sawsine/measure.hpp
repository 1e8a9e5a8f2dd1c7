#pragma once

#include <algorithm>
#include <vector>

#include "sawsine/rational.hpp"

namespace sawsine {

/// Finitely supported nonnegative measure: a list of (location, mass) atoms.
/// T is Rational for exact work or double for trigonometric work.
template <class T>
struct AtomicMeasure {
  struct Atom {
    T x;
    T mass;
  };
  std::vector<Atom> atoms;

  T total_mass() const {
    T s{};
    for (const auto& a : atoms) s += a.mass;
    return s;
  }

  /// Adds mass at x, merging with an existing atom at the same location.
  void add_mass(const T& x, const T& mass) {
    for (auto& a : atoms)
      if (a.x == x) {
        a.mass += mass;
        return;
      }
    atoms.push_back({x, mass});
  }

  void sort_by_location() {
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.x < b.x; });
  }
};

using ExactMeasure = AtomicMeasure<Rational>;
using RealMeasure = AtomicMeasure<double>;

}  // namespace sawsine
