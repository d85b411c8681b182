#include "nclaw/glimm.hpp"

#include <algorithm>
#include <cmath>

#include "nclaw/kernels.hpp"

namespace nclaw {

namespace {

double ghost(const GridState& gs, std::ptrdiff_t j) {
  const std::ptrdiff_t n = std::ptrdiff_t(gs.size());
  if (j >= 0 && j < n) return gs.cells[std::size_t(j)];
  if (gs.boundary == Boundary::Periodic) return gs.cells[std::size_t(((j % n) + n) % n)];
  return gs.cells[j < 0 ? 0 : std::size_t(n - 1)];
}

void check_config(const GlimmConfig& cfg) {
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 0.5))
    throw ConfigError("glimm: cfl must lie in (0, 0.5]");
  if (cfg.sequence_offset < 1)
    throw ConfigError("glimm: sequence offset must be >= 1");
}

}  // namespace

double van_der_corput(std::uint64_t n) {
  if (n < 1) throw Error("van_der_corput: index must be >= 1");
  double r = 0.0;
  double b = 0.5;
  while (n) {
    if (n & 1u) r += b;
    n >>= 1u;
    b *= 0.5;
  }
  return r;
}

double glimm_dt(const GlimmConfig& cfg, const GridState& gs) {
  check_config(cfg);
  // Every value in a one-sided fan lies in the hull of the neighboring
  // cell values: the kinetic trace shrinks toward the origin in its
  // oriented direction, so |f'| peaks at the cell hull endpoints.
  double lo, hi;
  kernels::active_ops().minmax(gs.cells.data(), gs.size(), &lo, &hi);
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw NumericalError("glimm: non-finite cell average");
  double m = std::max(std::abs(eval_deriv(cfg.flux, lo)),
                      std::abs(eval_deriv(cfg.flux, hi)));
  if (!(m > 0.0)) throw NumericalError("glimm: vanishing maximal speed");
  return cfg.cfl * gs.dx / m;
}

GridState glimm_step(const GlimmConfig& cfg, const GridState& gs,
                     std::uint64_t n, double dt) {
  check_config(cfg);
  const double a = van_der_corput(n);
  const std::size_t cells = gs.size();
  GridState out = gs;
  if (cfg.flux.monotonicity == Monotonicity::NonDecreasing) {
    // All speeds are nonnegative: the only fan reaching into cell j by
    // time dt comes from interface j-1/2.
    const double xi = a * gs.dx / dt;
    for (std::size_t j = 0; j < cells; ++j) {
      double ul = j > 0 ? gs.cells[j - 1] : ghost(gs, -1);
      double ur = gs.cells[j];
      if (ul == ur) continue;
      WaveFan fan = solve_nonclassical(cfg.flux, cfg.kinetics, ul, ur);
      out.cells[j] = sample(fan, xi);
    }
  } else {
    const double xi = (a - 1.0) * gs.dx / dt;
    for (std::size_t j = 0; j < cells; ++j) {
      double ul = gs.cells[j];
      double ur = j + 1 < cells ? gs.cells[j + 1] : ghost(gs, std::ptrdiff_t(cells));
      if (ul == ur) continue;
      WaveFan fan = solve_nonclassical(cfg.flux, cfg.kinetics, ul, ur);
      out.cells[j] = sample(fan, xi);
    }
  }
  out.t = gs.t + dt;
  return out;
}

RunResult glimm_run(const GlimmConfig& cfg, GridState gs, double t_end,
                    const RunOptions& opts) {
  check_config(cfg);
  if (t_end < gs.t) throw BadDomain("glimm_run: t_end precedes current time");
  RunResult result;
  const std::size_t n = gs.size();
  const double dx = gs.dx;
  const kernels::Ops& ops = kernels::active_ops();
  EntropyPair ep = EntropyPair::quadratic_for(cfg.flux);

  auto record_state = [&](const GridState& s, double dt) {
    StepRecord rec;
    rec.t = s.t;
    rec.dt = dt;
    rec.mass = dx * ops.sum(s.cells.data(), n);
    rec.total_variation = ops.total_variation(s.cells.data(), n);
    rec.entropy = dx * ops.sum_squares(s.cells.data(), n);
    result.history.steps.push_back(std::move(rec));
  };
  if (opts.record) record_state(gs, 0.0);

  double dt_frozen = 0.0;
  if (opts.dt_override > 0.0)
    dt_frozen = opts.dt_override;
  else if (opts.fixed_dt)
    dt_frozen = glimm_dt(cfg, gs);

  std::uint64_t index = cfg.sequence_offset;
  const std::int64_t max_steps = 500'000'000;
  std::int64_t steps = 0;
  while (gs.t < t_end) {
    if (++steps > max_steps) throw NumericalError("glimm_run: step limit exceeded");
    double dt = dt_frozen > 0.0 ? dt_frozen : glimm_dt(cfg, gs);
    dt = std::min(dt, t_end - gs.t);
    if (!(dt > 0.0)) break;
    gs = glimm_step(cfg, gs, index, dt);
    ++index;
    if (opts.record) record_state(gs, dt);
  }
  gs.t = t_end;
  result.state = std::move(gs);
  return result;
}

}  // namespace nclaw
