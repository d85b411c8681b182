#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nclaw/flux.hpp"

using namespace nclaw;

namespace {
FluxSpec wrapped_cubic_plus() {
  // Cubic flux routed through the custom (root-search) code paths.
  return FluxSpec::custom([](double u) { return u * u * u + u; },
                          [](double u) { return 3.0 * u * u + 1.0; },
                          Convexity::ConcaveConvex,
                          Monotonicity::NonDecreasing);
}
}  // namespace

TEST_CASE("cubic flux evaluation") {
  FluxSpec cp = FluxSpec::cubic_plus();
  FluxSpec cm = FluxSpec::cubic_minus();
  CHECK(eval(cp, 0.0) == 0.0);
  CHECK(eval(cp, 4.0) == 68.0);
  CHECK(eval(cm, 4.0) == -68.0);
  CHECK(eval_deriv(cp, 0.0) == 1.0);
  CHECK(eval_deriv(cp, -3.0) == 28.0);
  CHECK(eval_deriv(cm, 2.0) == -13.0);
}

TEST_CASE("shock speed") {
  FluxSpec cp = FluxSpec::cubic_plus();
  CHECK(shock_speed(cp, 4.0, -3.0) == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(shock_speed(cp, -3.0, -2.0) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(shock_speed(cp, 2.0, -2.0) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK_THROWS_AS(shock_speed(cp, 1.0, 1.0), EqualStates);
  // Nearly equal states take the midpoint derivative.
  double u = 2.0;
  double v = u + 1e-15;
  CHECK(shock_speed(cp, u, v) == doctest::Approx(eval_deriv(cp, u)).epsilon(1e-12));
  // Same expression evaluated either way round.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    double a = dist(rng);
    double b = dist(rng);
    if (a == b) continue;
    CHECK(shock_speed(cp, a, b) == shock_speed(cp, b, a));
  }
}

TEST_CASE("tangent map closed forms") {
  FluxSpec cp = FluxSpec::cubic_plus();
  CHECK(tangent_map(cp, 4.0) == -2.0);
  CHECK(tangent_map(cp, 0.0) == 0.0);
  CHECK(tangent_map(cp, -6.0) == 3.0);
  CHECK(inverse_tangent_map(cp, -2.0) == 4.0);
  CHECK(inverse_tangent_map(cp, 0.0) == 0.0);
  CHECK(tangent_map(cp, inverse_tangent_map(cp, 1.7)) == doctest::Approx(1.7).epsilon(1e-15));
}

TEST_CASE("tangent map: tangency residual and monotonicity") {
  FluxSpec cp = FluxSpec::cubic_plus();
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 0; i <= 400; ++i) {
    double u = -10.0 + 20.0 * i / 400.0;
    if (std::abs(u) < 1e-9) continue;
    double w = tangent_map(cp, u);
    double residual = std::abs(eval_deriv(cp, w) - shock_speed(cp, u, w));
    CHECK(residual <= 1e-10 * (1.0 + std::abs(eval_deriv(cp, u))));
    if (have_prev) CHECK(w < prev);  // strictly decreasing
    prev = w;
    have_prev = true;
  }
}

TEST_CASE("custom flux root searches match the closed forms") {
  FluxSpec cp = FluxSpec::cubic_plus();
  FluxSpec cw = wrapped_cubic_plus();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-8.0, 8.0);
  for (int i = 0; i < 50; ++i) {
    double u = dist(rng);
    if (std::abs(u) < 1e-3) continue;
    CHECK(tangent_map(cw, u) ==
          doctest::Approx(tangent_map(cp, u)).epsilon(1e-9));
    CHECK(inverse_tangent_map(cw, u) ==
          doctest::Approx(inverse_tangent_map(cp, u)).epsilon(1e-9));
    double v = dist(rng);
    if (std::abs(v - u) < 1e-3 || std::abs(v - tangent_map(cp, u)) < 1e-3 ||
        std::abs(u + v) < 1e-3)
      continue;
    CHECK(chord_third_root(cw, u, v) ==
          doctest::Approx(-(u + v)).epsilon(1e-9));
  }
}

TEST_CASE("chord third root") {
  FluxSpec cp = FluxSpec::cubic_plus();
  CHECK(chord_third_root(cp, 4.0, -3.0) == -1.0);
  CHECK(chord_third_root(cp, 1.0, 1.0) == -2.0);  // continuity: phi^{-nat}
  CHECK(chord_third_root(cp, 2.0, -2.0) == 0.0);

  // The root lies on the same chord: equal Rankine-Hugoniot slopes.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    double u = dist(rng);
    double v = dist(rng);
    double w = chord_third_root(cp, u, v);
    if (std::abs(u - v) < 1e-6 || std::abs(w - u) < 1e-6 ||
        std::abs(w - v) < 1e-6)
      continue;
    CHECK(std::abs(shock_speed(cp, u, w) - shock_speed(cp, u, v)) <=
          1e-10 * (1.0 + std::abs(eval_deriv(cp, u))));
  }
}

TEST_CASE("zero dissipation map") {
  CHECK(zero_dissipation_map(FluxSpec::cubic_plus(), 4.0) == -4.0);
  CHECK(zero_dissipation_map(FluxSpec::cubic_minus(), -2.5) == 2.5);
}

TEST_CASE("convexity classes: sign of u * f''(u) and derivative sign") {
  const double h = 1e-5;
  for (int i = 0; i <= 200; ++i) {
    double u = -10.0 + 20.0 * i / 200.0;
    if (std::abs(u) < 1e-6) continue;
    FluxSpec cp = FluxSpec::cubic_plus();
    FluxSpec cm = FluxSpec::cubic_minus();
    double fpp_cp = (eval_deriv(cp, u + h) - eval_deriv(cp, u - h)) / (2.0 * h);
    double fpp_cm = (eval_deriv(cm, u + h) - eval_deriv(cm, u - h)) / (2.0 * h);
    CHECK(u * fpp_cp > 0.0);
    CHECK(u * fpp_cm < 0.0);
    CHECK(eval_deriv(cp, u) > 0.0);
    CHECK(eval_deriv(cm, u) < 0.0);
  }
}

TEST_CASE("entropy pair: exact forms and F' = U' f'") {
  FluxSpec cp = FluxSpec::cubic_plus();
  EntropyPair ep = EntropyPair::quadratic_for(cp);
  CHECK(ep.U(2.0) == 4.0);
  CHECK(ep.F(2.0) == 1.5 * 16.0 + 4.0);

  for (const FluxSpec& fs : {FluxSpec::cubic_plus(), FluxSpec::cubic_minus()}) {
    EntropyPair pair = EntropyPair::quadratic_for(fs);
    const double h = 1e-5;
    for (int i = 1; i < 1000; ++i) {
      double u = -5.0 + 10.0 * i / 1000.0;
      double dF = (pair.F(u + h) - pair.F(u - h)) / (2.0 * h);
      double expected = 2.0 * u * eval_deriv(fs, u);
      if (std::abs(expected) < 1e-3) continue;
      CHECK(dF == doctest::Approx(expected).epsilon(1e-6));
    }
  }
}
