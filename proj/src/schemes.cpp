#include "nclaw/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "nclaw/kernels.hpp"

namespace nclaw {

namespace {

double ghost(const GridState& gs, std::ptrdiff_t j) {
  const std::ptrdiff_t n = std::ptrdiff_t(gs.size());
  if (j >= 0 && j < n) return gs.cells[std::size_t(j)];
  if (gs.boundary == Boundary::Periodic) return gs.cells[std::size_t(((j % n) + n) % n)];
  return gs.cells[j < 0 ? 0 : std::size_t(n - 1)];
}

bool uses_kinetics(Scheme s) {
  return s == Scheme::Reconstruction || s == Scheme::VariantTestG;
}

// Reconstructed trace states of the cell with stencil (um, uc, un).
void traces(const SchemeConfig& cfg, const OrientedKinetics& ok, double um,
            double /*uc*/, double un, double& ul, double& ur) {
  switch (cfg.scheme) {
    case Scheme::Reconstruction:
      ul = ok.inv(un);
      ur = ok.fwd(um);
      break;
    case Scheme::VariantTestG:
      ul = um;
      ur = ok.fwd(um);
      break;
    case Scheme::AdvectionReconstruction:
      ul = um;
      ur = un;
      break;
    case Scheme::Upwind:
      ul = ur = 0.0;  // never reached
      break;
  }
}

struct CellRecon {
  double ul = 0.0, ur = 0.0, d = 0.0;
  bool active = false;
};

// Mirrors kernels::element::recon_flux: identical expressions and
// comparison order so the generic path agrees bitwise with the kernels.
CellRecon reconstruct(const SchemeConfig& cfg, const OrientedKinetics& ok,
                      double um, double uc, double un) {
  CellRecon r;
  traces(cfg, ok, um, uc, un, r.ul, r.ur);
  double den = r.ur - r.ul;
  r.d = (r.ur - uc) / den;
  r.active = r.d >= 0.0 && r.d <= 1.0 &&
             std::abs(den) >= 1e-13 * (1.0 + std::abs(r.ul) + std::abs(r.ur));
  return r;
}

// Interface flux owned by the cell with stencil (um, uc, un).
double cell_flux(const SchemeConfig& cfg, const OrientedKinetics& ok,
                 double um, double uc, double un, double dx, double dt,
                 std::int64_t* warnings) {
  if (cfg.scheme == Scheme::Upwind) return eval(cfg.flux, uc);
  CellRecon r = reconstruct(cfg, ok, um, uc, un);
  if (!r.active) return eval(cfg.flux, uc);
  double fl = eval(cfg.flux, r.ul);
  double fr = eval(cfg.flux, r.ur);
  double sigma = (fr - fl) / (r.ur - r.ul);
  if (cfg.flux.monotonicity == Monotonicity::NonDecreasing) {
    if (!(sigma > 0.0)) {
      if (warnings && (*warnings)++ == 0)
        std::clog << "nclaw: degenerate reconstruction speed, cell treated "
                     "as inactive\n";
      return eval(cfg.flux, uc);
    }
    double dt_loc = ((1.0 - r.d) * dx) / sigma;
    return (std::min(dt_loc, dt) * fr + std::max(dt - dt_loc, 0.0) * fl) / dt;
  }
  if (!(sigma < 0.0)) {
    if (warnings && (*warnings)++ == 0)
      std::clog << "nclaw: degenerate reconstruction speed, cell treated "
                   "as inactive\n";
    return eval(cfg.flux, uc);
  }
  double dt_loc = (r.d * dx) / (-sigma);
  return (std::min(dt_loc, dt) * fl + std::max(dt - dt_loc, 0.0) * fr) / dt;
}

bool fast_path(const SchemeConfig& cfg) {
  if (cfg.flux.kind == FluxKind::Custom) return false;
  if (cfg.scheme == Scheme::Upwind) return true;
  return cfg.scheme == Scheme::Reconstruction &&
         cfg.kinetics.family == KineticFamily::Linear;
}

struct Workspace {
  std::vector<double> padded;  // N + 4 with two ghosts per side
  std::vector<double> flux;    // N + 1 interface fluxes

  void resize(std::size_t n) {
    padded.resize(n + 4);
    flux.resize(n + 1);
  }

  void load(const GridState& gs) {
    const std::size_t n = gs.size();
    resize(n);
    std::copy(gs.cells.begin(), gs.cells.end(), padded.begin() + 2);
    padded[1] = ghost(gs, -1);
    padded[0] = ghost(gs, -2);
    padded[n + 2] = ghost(gs, std::ptrdiff_t(n));
    padded[n + 3] = ghost(gs, std::ptrdiff_t(n) + 1);
  }
};

// Fills the N+1 interface fluxes.  For non-decreasing flux the
// interface i is owned by cell i-1 (stencil starting at padded[i]);
// mirrored ownership for non-increasing flux.
void compute_fluxes(const SchemeConfig& cfg, Workspace& w, std::size_t n,
                    double dx, double dt, std::int64_t* warnings) {
  const bool noninc = cfg.flux.monotonicity == Monotonicity::NonIncreasing;
  const double* up = w.padded.data() + (noninc ? 1 : 0);
  if (fast_path(cfg)) {
    const kernels::Ops& ops = kernels::active_ops();
    if (cfg.scheme == Scheme::Upwind) {
      ops.cubic_flux(up + 1, w.flux.data(), n + 1, cfg.flux.sign());
    } else {
      ops.recon_flux_cubic_linear(up, w.flux.data(), n + 1, cfg.kinetics.beta,
                                  dx, dt, cfg.flux.sign(), noninc);
    }
    return;
  }
  OrientedKinetics ok = uses_kinetics(cfg.scheme) ? orient(cfg.kinetics, cfg.flux)
                                                  : OrientedKinetics{};
  for (std::size_t i = 0; i <= n; ++i)
    w.flux[i] = cell_flux(cfg, ok, up[i], up[i + 1], up[i + 2], dx, dt,
                          warnings);
}

struct Probe {
  double max_speed = 0.0;
  std::vector<std::int32_t> active_cells;
  std::vector<TracePair> straddle;
};

// One scalar pass: hull speed for the CFL bound plus the active-cell
// bookkeeping the history records.
void probe_state(const SchemeConfig& cfg, const GridState& gs, bool record,
                 Probe& out) {
  out.active_cells.clear();
  out.straddle.clear();
  const std::size_t n = gs.size();
  double lo, hi;
  kernels::active_ops().minmax(gs.cells.data(), n, &lo, &hi);
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw NumericalError("non-finite cell average encountered");
  out.max_speed = std::max(std::abs(eval_deriv(cfg.flux, lo)),
                           std::abs(eval_deriv(cfg.flux, hi)));
  if (cfg.scheme == Scheme::Upwind) return;
  OrientedKinetics ok = uses_kinetics(cfg.scheme) ? orient(cfg.kinetics, cfg.flux)
                                                  : OrientedKinetics{};
  for (std::size_t j = 0; j < n; ++j) {
    double um = j > 0 ? gs.cells[j - 1] : ghost(gs, -1);
    double un = j + 1 < n ? gs.cells[j + 1] : ghost(gs, std::ptrdiff_t(n));
    CellRecon r = reconstruct(cfg, ok, um, gs.cells[j], un);
    if (!r.active) continue;
    out.max_speed = std::max(out.max_speed,
                             std::max(std::abs(eval_deriv(cfg.flux, r.ul)),
                                      std::abs(eval_deriv(cfg.flux, r.ur))));
    if (record) {
      out.active_cells.push_back(std::int32_t(j));
      if (um * un < 0.0) out.straddle.push_back(TracePair{um, un});
    }
  }
}

}  // namespace

double cfl_dt(const SchemeConfig& cfg, const GridState& gs) {
  Probe p;
  probe_state(cfg, gs, false, p);
  if (!(p.max_speed > 0.0))
    throw NumericalError("cfl_dt: vanishing maximal speed");
  return cfg.cfl * gs.dx / p.max_speed;
}

ReconstructionInfo reconstruct_cell(const SchemeConfig& cfg,
                                    const GridState& gs, std::size_t j) {
  OrientedKinetics ok = uses_kinetics(cfg.scheme) ? orient(cfg.kinetics, cfg.flux)
                                                  : OrientedKinetics{};
  double um = ghost(gs, std::ptrdiff_t(j) - 1);
  double un = ghost(gs, std::ptrdiff_t(j) + 1);
  CellRecon r = reconstruct(cfg, ok, um, gs.cells[j], un);
  ReconstructionInfo info;
  info.active = r.active;
  if (r.active) {
    info.u_left = r.ul;
    info.u_right = r.ur;
    info.d = r.d;
    info.xbar = gs.interface(j) + r.d * gs.dx;
  } else {
    info.u_left = info.u_right = gs.cells[j];
    info.d = info.xbar = std::numeric_limits<double>::quiet_NaN();
  }
  return info;
}

double reconstruction_flux(const SchemeConfig& cfg, const GridState& gs,
                           std::size_t j, double dt) {
  OrientedKinetics ok = uses_kinetics(cfg.scheme) ? orient(cfg.kinetics, cfg.flux)
                                                  : OrientedKinetics{};
  double um = ghost(gs, std::ptrdiff_t(j) - 1);
  double un = ghost(gs, std::ptrdiff_t(j) + 1);
  return cell_flux(cfg, ok, um, gs.cells[j], un, gs.dx, dt, nullptr);
}

GridState step(const SchemeConfig& cfg, const GridState& gs, double dt) {
  Workspace w;
  w.load(gs);
  GridState out = gs;
  std::int64_t warnings = 0;
  compute_fluxes(cfg, w, gs.size(), gs.dx, dt, &warnings);
  kernels::active_ops().conservative_update(out.cells.data(), w.flux.data(),
                                            gs.size(), dt / gs.dx);
  out.t = gs.t + dt;
  return out;
}

GridState step(const SchemeConfig& cfg, const GridState& gs) {
  return step(cfg, gs, cfl_dt(cfg, gs));
}

RunResult run(const SchemeConfig& cfg, GridState gs, double t_end,
              const RunOptions& opts) {
  if (t_end < gs.t) throw BadDomain("run: t_end precedes current time");
  RunResult result;
  result.history.steps.reserve(256);

  const std::size_t n = gs.size();
  const double dx = gs.dx;
  const kernels::Ops& ops = kernels::active_ops();
  EntropyPair ep = EntropyPair::quadratic_for(cfg.flux);

  auto record_state = [&](const GridState& s, double dt,
                          std::vector<std::int32_t>&& active) {
    StepRecord rec;
    rec.t = s.t;
    rec.dt = dt;
    rec.mass = dx * ops.sum(s.cells.data(), n);
    rec.total_variation = ops.total_variation(s.cells.data(), n);
    rec.entropy = ep.quadratic ? dx * ops.sum_squares(s.cells.data(), n) : [&] {
      double acc = 0.0;
      for (double u : s.cells) acc += ep.U(u);
      return dx * acc;
    }();
    rec.active_cells = std::move(active);
    result.history.steps.push_back(std::move(rec));
  };

  if (opts.record) record_state(gs, 0.0, {});

  double dt_frozen = 0.0;
  if (opts.dt_override > 0.0)
    dt_frozen = opts.dt_override;
  else if (opts.fixed_dt)
    dt_frozen = cfl_dt(cfg, gs);

  Workspace w;
  Probe probe;
  const std::int64_t max_steps = 500'000'000;
  std::int64_t steps = 0;
  while (gs.t < t_end) {
    if (++steps > max_steps) throw NumericalError("run: step limit exceeded");
    probe_state(cfg, gs, opts.record, probe);
    if (dt_frozen <= 0.0 && !(probe.max_speed > 0.0))
      throw NumericalError("run: vanishing maximal speed");
    double dt = dt_frozen > 0.0 ? dt_frozen : cfg.cfl * dx / probe.max_speed;
    dt = std::min(dt, t_end - gs.t);
    if (!(dt > 0.0)) break;

    w.load(gs);
    compute_fluxes(cfg, w, n, dx, dt, &result.history.degenerate_speed_warnings);
    ops.conservative_update(gs.cells.data(), w.flux.data(), n, dt / dx);
    gs.t = gs.t + dt;

    result.history.influx_integral += dt * w.flux.front();
    result.history.outflux_integral += dt * w.flux.back();
    if (opts.record) {
      for (const TracePair& p : probe.straddle)
        result.history.straddle_traces.push_back(p);
      record_state(gs, dt, std::move(probe.active_cells));
      probe.active_cells = {};
    }
  }
  gs.t = t_end;
  result.state = std::move(gs);
  return result;
}

}  // namespace nclaw
