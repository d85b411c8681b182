#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nclaw/riemann.hpp"

using namespace nclaw;

namespace {

const FluxSpec kCp = FluxSpec::cubic_plus();
const FluxSpec kCm = FluxSpec::cubic_minus();
const KineticFunction kBeta075 = KineticFunction::linear(0.75);

void check_fan_invariants(const FluxSpec& fs, const KineticFunction& kf,
                          const WaveFan& fan) {
  OrientedKinetics ok = orient(kf, fs);
  if (fan.empty()) {
    CHECK(fan.left_state == fan.right_state);
    return;
  }
  CHECK(fan[0].left_state == fan.left_state);
  CHECK(fan[fan.size() - 1].right_state == fan.right_state);
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const Wave& w = fan[k];
    CHECK(w.speed_lo <= w.speed_hi + 1e-12);
    if (k + 1 < fan.size()) {
      CHECK(w.right_state == fan[k + 1].left_state);
      CHECK(w.speed_hi <= fan[k + 1].speed_lo + 1e-12);
    }
    double scale = 1.0 + std::abs(w.left_state);
    if (w.kind == WaveKind::NonclassicalShock) {
      CHECK(std::abs(w.right_state - ok.fwd(w.left_state)) <= 1e-12 * scale);
      CHECK(w.speed_lo == w.speed_hi);
    }
    if (w.kind == WaveKind::ClassicalShock) {
      CHECK(w.speed_lo == w.speed_hi);
      // Lax/kinetic admissibility: the right state stays within the
      // companion interval of the left state.
      if (fs.convexity == Convexity::ConcaveConvex) {
        double sharp = w.left_state == 0.0
                           ? 0.0
                           : chord_third_root(fs, w.left_state,
                                              ok.fwd(w.left_state));
        if (w.left_state > 0.0) {
          CHECK(w.right_state >= sharp - 1e-12 * scale);
          CHECK(w.right_state <= w.left_state);
        } else if (w.left_state < 0.0) {
          CHECK(w.right_state <= sharp + 1e-12 * scale);
          CHECK(w.right_state >= w.left_state);
        }
      }
    }
    if (w.kind == WaveKind::Rarefaction) {
      CHECK(std::abs(w.speed_lo - eval_deriv(fs, w.left_state)) <= 1e-12);
      CHECK(std::abs(w.speed_hi - eval_deriv(fs, w.right_state)) <= 1e-12);
    }
  }
}

}  // namespace

TEST_CASE("Test A data: single nonclassical shock") {
  WaveFan fan = solve_nonclassical(kCp, kBeta075, 4.0, -3.0);
  REQUIRE(fan.size() == 1);
  CHECK(fan[0].kind == WaveKind::NonclassicalShock);
  CHECK(fan[0].speed_lo == doctest::Approx(14.0).epsilon(1e-14));
}

TEST_CASE("Test B data: nonclassical shock then rarefaction") {
  WaveFan fan = solve_nonclassical(kCp, kBeta075, 4.0, -5.0);
  REQUIRE(fan.size() == 2);
  CHECK(fan[0].kind == WaveKind::NonclassicalShock);
  CHECK(fan[0].right_state == -3.0);
  CHECK(fan[0].speed_lo == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(fan[1].kind == WaveKind::Rarefaction);
  CHECK(fan[1].speed_lo == doctest::Approx(28.0).epsilon(1e-14));
  CHECK(fan[1].speed_hi == doctest::Approx(76.0).epsilon(1e-14));
}

TEST_CASE("Test C data: nonclassical then classical shock") {
  WaveFan fan = solve_nonclassical(kCp, kBeta075, 4.0, -2.0);
  REQUIRE(fan.size() == 2);
  CHECK(fan[0].kind == WaveKind::NonclassicalShock);
  CHECK(fan[0].speed_lo == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(fan[1].kind == WaveKind::ClassicalShock);
  CHECK(fan[1].speed_lo == doctest::Approx(20.0).epsilon(1e-14));
}

TEST_CASE("pure rarefaction and single classical shock cases") {
  WaveFan raref = solve_nonclassical(kCp, kBeta075, 1.0, 2.0);
  REQUIRE(raref.size() == 1);
  CHECK(raref[0].kind == WaveKind::Rarefaction);

  WaveFan shock = solve_nonclassical(kCp, kBeta075, 4.0, 2.25);
  REQUIRE(shock.size() == 1);
  CHECK(shock[0].kind == WaveKind::ClassicalShock);
  CHECK(shock[0].speed_lo == doctest::Approx(31.0625).epsilon(1e-14));
}

TEST_CASE("convex-concave wave structures for the mirrored cubic") {
  WaveFan first = solve_nonclassical(kCm, kBeta075, -4.0, 4.0);
  REQUIRE(first.size() == 2);
  CHECK(first[0].kind == WaveKind::Rarefaction);
  CHECK(first[0].right_state == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(first[1].kind == WaveKind::NonclassicalShock);
  CHECK(first[1].speed_lo == doctest::Approx(-14.0).epsilon(1e-14));

  WaveFan second = solve_nonclassical(kCm, kBeta075, -2.0, 4.0);
  REQUIRE(second.size() == 2);
  CHECK(second[0].kind == WaveKind::ClassicalShock);
  CHECK(second[0].right_state == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(second[1].kind == WaveKind::NonclassicalShock);
}

TEST_CASE("invalid kinetics rejected by the solver") {
  CHECK_THROWS_AS(solve_nonclassical(kCp, KineticFunction::linear(0.4), 4.0, -3.0),
                  InvalidKinetics);
}

TEST_CASE("classical solver: tangent construction") {
  WaveFan fan = solve_classical(kCp, 4.0, -5.0);
  REQUIRE(fan.size() == 2);
  CHECK(fan[0].kind == WaveKind::ClassicalShock);
  CHECK(fan[0].right_state == -2.0);
  CHECK(fan[0].speed_lo == doctest::Approx(13.0).epsilon(1e-14));  // sonic
  CHECK(fan[1].kind == WaveKind::Rarefaction);

  WaveFan single = solve_classical(kCp, 1.0, 0.0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].kind == WaveKind::ClassicalShock);
  CHECK(single[0].speed_lo == doctest::Approx(2.0).epsilon(1e-14));

  WaveFan raref = solve_classical(kCp, -1.0, -2.0);
  REQUIRE(raref.size() == 1);
  CHECK(raref[0].kind == WaveKind::Rarefaction);
}

TEST_CASE("sampling the self-similar solution") {
  WaveFan a = solve_nonclassical(kCp, kBeta075, 4.0, -3.0);
  CHECK(sample(a, 13.9) == 4.0);
  CHECK(sample(a, 14.1) == -3.0);
  CHECK(sample(a, 14.0) == -3.0);  // tie resolves right
  CHECK(sample(a, -1e9) == 4.0);

  WaveFan b = solve_nonclassical(kCp, kBeta075, 4.0, -5.0);
  CHECK(sample(b, 76.5) == -5.0);
  CHECK(sample(b, 20.0) == -3.0);
  // Inside the rarefaction: f'(u) = xi inverted on the negative branch.
  double xi = 40.0;
  double u = sample(b, xi);
  CHECK(u < 0.0);
  CHECK(eval_deriv(kCp, u) == doctest::Approx(xi).epsilon(1e-12));
}

TEST_CASE("exact riemann solution in (x, t)") {
  // The boundary ray x/t == 14 resolves to the right state; 1.75/0.125
  // hits the speed exactly in floating arithmetic.
  CHECK(exact_riemann_solution(kCp, kBeta075, 4.0, -3.0, 1.75, 0.125) == -3.0);
  CHECK(exact_riemann_solution(kCp, kBeta075, 4.0, -3.0, 1.39, 0.1) == 4.0);
  CHECK(exact_riemann_solution(kCp, kBeta075, 7.0, 1.0, -0.5, 0.0) == 7.0);
  CHECK(exact_riemann_solution(kCp, kBeta075, 4.0, -2.0, 1.7, 0.1) == -3.0);
}

TEST_CASE("fan integral: consistency with dense sampling") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int trial = 0; trial < 40; ++trial) {
    double ul = dist(rng);
    double ur = dist(rng);
    WaveFan fan = solve_nonclassical(kCp, kBeta075, ul, ur);
    double lo = -150.0, hi = 150.0;
    // Riemann sums against the closed-form integral.
    const int nbins = 200000;
    double h = (hi - lo) / nbins;
    double riemann = 0.0;
    for (int i = 0; i < nbins; ++i) riemann += sample(fan, lo + (i + 0.5) * h) * h;
    double closed = fan_integral(fan, lo, hi);
    CHECK(closed == doctest::Approx(riemann).epsilon(5e-4));
  }
}

TEST_CASE("wave fan invariants over random data, both flux kinds") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  std::uniform_real_distribution<double> betas(0.5, 0.95);
  for (int trial = 0; trial < 10000; ++trial) {
    double ul = dist(rng);
    double ur = dist(rng);
    KineticFunction kf = KineticFunction::linear(betas(rng));
    {
      WaveFan fan = solve_nonclassical(kCp, kf, ul, ur);
      check_fan_invariants(kCp, kf, fan);
    }
    {
      WaveFan fan = solve_nonclassical(kCm, kf, ul, ur);
      check_fan_invariants(kCm, kf, fan);
    }
  }
}

TEST_CASE("sampled one-sided limits match wave traces") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int trial = 0; trial < 300; ++trial) {
    double ul = dist(rng);
    double ur = dist(rng);
    WaveFan fan = solve_nonclassical(kCp, kBeta075, ul, ur);
    for (const Wave& w : fan) {
      double eps = 1e-9 * (1.0 + std::abs(w.speed_lo));
      CHECK(std::abs(sample(fan, w.speed_lo - eps) - w.left_state) <= 1e-6);
      double eps2 = 1e-9 * (1.0 + std::abs(w.speed_hi));
      CHECK(std::abs(sample(fan, w.speed_hi + eps2) - w.right_state) <= 1e-6);
    }
  }
}

TEST_CASE("convex-concave solutions mirror the concave-convex ones") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int trial = 0; trial < 100; ++trial) {
    double ul = dist(rng);
    double ur = dist(rng);
    WaveFan minus = solve_nonclassical(kCm, kBeta075, ul, ur);
    WaveFan plus = solve_nonclassical(kCp, kBeta075, ur, ul);
    REQUIRE(minus.size() == plus.size());
    for (std::size_t k = 0; k < minus.size(); ++k) {
      const Wave& m = minus[k];
      const Wave& p = plus[plus.size() - 1 - k];
      CHECK(m.kind == p.kind);
      CHECK(m.left_state == doctest::Approx(p.right_state).epsilon(1e-13));
      CHECK(m.right_state == doctest::Approx(p.left_state).epsilon(1e-13));
      CHECK(m.speed_lo == doctest::Approx(-p.speed_hi).epsilon(1e-13));
      CHECK(m.speed_hi == doctest::Approx(-p.speed_lo).epsilon(1e-13));
    }
  }
}
