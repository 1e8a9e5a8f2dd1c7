#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "sawsine/fejer.hpp"

using namespace sawsine;

namespace {
constexpr double pi = std::numbers::pi_v<double>;
}

TEST_CASE("kernel values and singular branch") {
  REQUIRE(fejer_kernel(8, 0.0) == 9.0);
  REQUIRE(fejer_kernel(8, 2 * pi) == 9.0);  // |sin(x/2)| ~ 1e-16: removable branch
  REQUIRE(fejer_kernel(8, 2 * pi / 9) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(fejer_kernel(8, 4 * pi / 9) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(fejer_kernel(0, 1.234) == Catch::Approx(1.0).margin(1e-15));
  REQUIRE_THROWS_AS(fejer_kernel(-1, 0.0), std::domain_error);

  // F_2(x) = 1 + cos(x).
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng);
    REQUIRE(fejer_kernel(1, x) == Catch::Approx(1.0 + std::cos(x)).margin(1e-12));
  }

  for (int m : {1, 2, 7, 16}) {
    for (int i = 0; i < 500; ++i) {
      REQUIRE(fejer_kernel(m, dist(rng)) >= 0.0);
    }
  }
}

TEST_CASE("square wave sampling signs") {
  REQUIRE(square_wave_sign(8, 0) == 0);
  REQUIRE(square_wave_sign(8, 9) == 0);
  REQUIRE(square_wave_sign(8, 1) == 1);
  REQUIRE(square_wave_sign(8, 8) == 1);
  REQUIRE(square_wave_sign(8, 10) == -1);
  REQUIRE(square_wave_sign(8, 17) == -1);
  REQUIRE(square_wave_sign(8, 18) == 0);   // wraps to 0
  REQUIRE(square_wave_sign(8, 19) == 1);   // wraps to 1
  REQUIRE(square_wave_sign(8, -1) == -1);  // wraps to 17
}

TEST_CASE("the interpolant reproduces the sine combination") {
  const TrigCombination a1 = sine_coefficients(1);
  const TrigCombination a5 = sine_coefficients(5);
  REQUIRE(fejer_interpolant(5, 1.0) == Catch::Approx(evaluate_trig(a5, 1.0)).margin(1e-10));
  REQUIRE(fejer_interpolant(1, 0.7) == Catch::Approx(std::sin(0.7)).margin(1e-10));
  REQUIRE(fejer_interpolant(1, 0.7) == Catch::Approx(evaluate_trig(a1, 0.7)).margin(1e-10));
  REQUIRE(fejer_interpolant(8, 0.0) == Catch::Approx(0.0).margin(1e-10));

  // At an odd node the interpolant returns the square-wave value 1.
  for (int j = 1; j <= 8; j += 2) {
    REQUIRE(fejer_interpolant(8, pi * j / 9) == Catch::Approx(1.0).margin(1e-10));
  }

  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> dist(0.0, 2 * pi);
  for (int m = 1; m <= 16; ++m) {
    const TrigCombination a = sine_coefficients(m);
    for (int i = 0; i < 250; ++i) {
      const double x = dist(rng);
      REQUIRE(fejer_interpolant(m, x) == Catch::Approx(evaluate_trig(a, x)).margin(1e-9));
    }
  }
  REQUIRE_THROWS_AS(fejer_interpolant(0, 1.0), std::domain_error);
}

TEST_CASE("kernel difference sign conditions") {
  // m = 1: D(x) = F_2(x) - F_2(x - pi) = 2 cos(x), nonnegative on
  // [-pi/2, pi/2] and nonpositive on [pi/2, 3pi/2].
  const FejerSignReport r1 = fejer_sign_lemma(1, 1000);
  REQUIRE(r1.passed);
  REQUIRE(r1.min_on_plus_range >= -1e-10);
  REQUIRE(r1.max_on_minus_range <= 1e-10);

  const FejerSignReport r8 = fejer_sign_lemma(8, 10000);
  REQUIRE(r8.passed);

  for (int m = 1; m <= 12; ++m) {
    REQUIRE(fejer_sign_lemma(m, 2000).passed);
  }

  REQUIRE_THROWS_AS(fejer_sign_lemma(0, 1000), std::domain_error);
  REQUIRE_THROWS_AS(fejer_sign_lemma(1, 99), std::domain_error);
}

TEST_CASE("even-m difference at the center") {
  // For even m the difference at x = 0 is 2(m+1) - 2 F_{m+1}(pi m/(m+1)),
  // comfortably positive.
  for (int m : {2, 4, 8}) {
    const double d = 2 * fejer_kernel(m, 0.0) - fejer_kernel(m, -pi * m / (m + 1)) -
                     fejer_kernel(m, -pi * (m + 2) / (m + 1));
    REQUIRE(d > 0.0);
  }
}
