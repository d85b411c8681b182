#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nclaw/glimm.hpp"

using namespace nclaw;

TEST_CASE("van der Corput radical inverse") {
  CHECK(van_der_corput(1) == 0.5);
  CHECK(van_der_corput(2) == 0.25);
  CHECK(van_der_corput(3) == 0.75);
  CHECK(van_der_corput(4) == 0.125);
  CHECK(van_der_corput(5) == 0.625);
  CHECK(van_der_corput(6) == 0.375);
  CHECK(van_der_corput(7) == 0.875);
  CHECK(van_der_corput(8) == 0.0625);
  CHECK_THROWS_AS(van_der_corput(0), Error);
  // Low-discrepancy: all values distinct and in (0, 1).
  for (std::uint64_t n = 1; n <= 64; ++n) {
    double a = van_der_corput(n);
    CHECK(a > 0.0);
    CHECK(a < 1.0);
  }
}

TEST_CASE("constant states are invariant under every sample") {
  GlimmConfig cfg;
  GridState gs;
  gs.dx = 0.01;
  gs.cells.assign(40, 2.5);
  gs.boundary = Boundary::Periodic;
  double dt = glimm_dt(cfg, gs);
  for (std::uint64_t n = 1; n < 20; ++n) {
    gs = glimm_step(cfg, gs, n, dt);
    for (double u : gs.cells) CHECK(u == 2.5);
  }
}

TEST_CASE("config validation") {
  GlimmConfig cfg;
  cfg.cfl = 0.8;
  GridState gs;
  gs.dx = 0.01;
  gs.cells.assign(10, 1.0);
  CHECK_THROWS_AS(glimm_dt(cfg, gs), ConfigError);
  cfg.cfl = 0.45;
  cfg.sequence_offset = 0;
  CHECK_THROWS_AS(glimm_run(cfg, gs, 0.1), ConfigError);
}

TEST_CASE("isolated nonclassical shock: values copied from exact fans") {
  GlimmConfig cfg;  // cubic plus, beta = 0.75, cfl 0.45
  InitialData u0 = InitialData::piecewise(PiecewiseLinearFn::step(0.0, 4.0, -3.0));
  GridState gs = init_average(u0, -0.1, 1.9, 100, Boundary::Outflow);
  RunResult rr = glimm_run(cfg, gs, 0.1);
  // Random choice copies exact fan values: every cell is exactly 4 or -3.
  for (double u : rr.state.cells) CHECK((u == 4.0 || u == -3.0));

  // Shock position error bounded by the sequence discrepancy: within
  // two cells of x = 14 * t.
  double pos = -0.1;
  for (std::size_t j = 0; j < rr.state.size(); ++j) {
    if (rr.state.cells[j] == 4.0) pos = rr.state.interface(j + 1);
  }
  CHECK(std::abs(pos - 1.4) <= 2.0 * rr.state.dx);
}

TEST_CASE("fan-range bounds: no new extrema") {
  GlimmConfig cfg;
  InitialData u0 =
      InitialData::callable([](double x) { return std::sin(2.0 * M_PI * x); });
  GridState gs = init_average(u0, -0.5, 0.5, 100, Boundary::Periodic);
  double lo0 = *std::min_element(gs.cells.begin(), gs.cells.end());
  double hi0 = *std::max_element(gs.cells.begin(), gs.cells.end());
  // The one-sided fans can reach the oriented kinetic images of the
  // data, never beyond.
  double bound = std::max(std::abs(lo0), std::abs(hi0)) / 0.75 + 1e-12;
  RunResult rr = glimm_run(cfg, gs, 0.3);
  for (double u : rr.state.cells) {
    CHECK(u >= -bound);
    CHECK(u <= bound);
  }
}

TEST_CASE("every cell value lies in its one-sided fan's range") {
  GlimmConfig cfg;
  InitialData u0 =
      InitialData::callable([](double x) { return std::sin(2.0 * M_PI * x); });
  GridState gs = init_average(u0, -0.5, 0.5, 80, Boundary::Periodic);
  OrientedKinetics ok = orient(cfg.kinetics, cfg.flux);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    double dt = glimm_dt(cfg, gs);
    GridState next = glimm_step(cfg, gs, n, dt);
    for (std::size_t j = 0; j < gs.size(); ++j) {
      double a = j > 0 ? gs.cells[j - 1] : gs.cells[gs.size() - 1];
      double b = gs.cells[j];
      // Fan values: the data, the nonclassical trace, and rarefaction
      // interiors between them.
      double lo = std::min({a, b, ok.fwd(a)});
      double hi = std::max({a, b, ok.fwd(a)});
      CHECK(next.cells[j] >= lo - 1e-12);
      CHECK(next.cells[j] <= hi + 1e-12);
    }
    gs = next;
  }
}

TEST_CASE("nonclassical jumps in the profile satisfy the kinetic relation") {
  GlimmConfig cfg;
  InitialData u0 =
      InitialData::callable([](double x) { return std::sin(2.0 * M_PI * x); });
  GridState gs = init_average(u0, -0.5, 0.5, 200, Boundary::Periodic);
  RunResult rr = glimm_run(cfg, gs, 0.5);
  int checked = 0;
  for (std::size_t j = 0; j + 1 < rr.state.size(); ++j) {
    double a = rr.state.cells[j];
    double b = rr.state.cells[j + 1];
    if (a > 0.1 && b < -0.1 && b < -0.5 * a - 1e-12) {
      // Undercompressive (beyond the tangent line): a kinetic jump.
      // The two cells sample traces from nearby steps, so under a
      // compression gradient the adjacent-cell proxy drifts a little;
      // the exact bitwise relation is checked on isolated-shock data.
      CHECK(std::abs(b + 0.75 * a) <= 0.02 * std::abs(a));
      ++checked;
    }
  }
  MESSAGE("undercompressive jumps checked: ", checked);
}

TEST_CASE("sequence offset changes the trajectory but not the limit") {
  GlimmConfig a;
  GlimmConfig b;
  b.sequence_offset = 7;
  InitialData u0 = InitialData::piecewise(PiecewiseLinearFn::step(0.0, 4.0, -3.0));
  GridState gs = init_average(u0, -0.1, 1.9, 100, Boundary::Outflow);
  RunResult ra = glimm_run(a, gs, 0.05);
  RunResult rb = glimm_run(b, gs, 0.05);
  // Both track the shock to within two cells.
  auto shock_pos = [](const GridState& s) {
    double pos = s.x_left;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.cells[j] == 4.0) pos = s.interface(j + 1);
    return pos;
  };
  CHECK(std::abs(shock_pos(ra.state) - 0.7) <= 2.0 * gs.dx);
  CHECK(std::abs(shock_pos(rb.state) - 0.7) <= 2.0 * gs.dx);
}

TEST_CASE("bit reproducible with fixed dt and offset") {
  GlimmConfig cfg;
  InitialData u0 =
      InitialData::callable([](double x) { return std::sin(2.0 * M_PI * x); });
  GridState gs = init_average(u0, -0.5, 0.5, 50, Boundary::Periodic);
  RunOptions opts;
  opts.fixed_dt = true;
  RunResult a = glimm_run(cfg, gs, 0.1, opts);
  RunResult b = glimm_run(cfg, gs, 0.1, opts);
  for (std::size_t j = 0; j < a.state.size(); ++j)
    CHECK(a.state.cells[j] == b.state.cells[j]);
}
