#pragma once

#include <cstdint>
#include <vector>

#include "nclaw/flux.hpp"
#include "nclaw/grid.hpp"
#include "nclaw/kinetics.hpp"

namespace nclaw {

// Upwind: f(u_j) for non-decreasing flux (f(u_{j+1}) mirrored).
// Reconstruction: in-cell discontinuity with kinetic traces
//   u_left = phi^{-flat}(u_{j+1}), u_right = phi^flat(u_{j-1}).
// VariantTestG: u_left = u_{j-1} instead; kept as the documented
//   non-convergent variant.
// AdvectionReconstruction: u_left = u_{j-1}, u_right = u_{j+1}; exact
//   transport for the linear flux.
enum class Scheme { Upwind, Reconstruction, VariantTestG, AdvectionReconstruction };

struct SchemeConfig {
  Scheme scheme = Scheme::Reconstruction;
  double cfl = 0.5;
  FluxSpec flux = FluxSpec::cubic_plus();
  KineticFunction kinetics = KineticFunction::linear(0.75);
};

// Result of the in-cell reconstruction.  When inactive the trace states
// collapse to the cell average and d/xbar are NaN.
struct ReconstructionInfo {
  bool active = false;
  double u_left = 0.0;
  double u_right = 0.0;
  double d = 0.0;
  double xbar = 0.0;
};

// Global time step: cfl * dx / M with M = max |f'| over the hull of the
// cell values and the reconstructed traces of currently active cells.
double cfl_dt(const SchemeConfig& cfg, const GridState& gs);

ReconstructionInfo reconstruct_cell(const SchemeConfig& cfg,
                                    const GridState& gs, std::size_t j);

// Flux at the outgoing interface of cell j (j+1/2 for non-decreasing
// flux, j-1/2 mirrored) for a step of length dt.
double reconstruction_flux(const SchemeConfig& cfg, const GridState& gs,
                           std::size_t j, double dt);

GridState step(const SchemeConfig& cfg, const GridState& gs, double dt);
GridState step(const SchemeConfig& cfg, const GridState& gs);

struct TracePair {
  double u_left = 0.0;
  double u_right = 0.0;
};

struct StepRecord {
  double t = 0.0;   // time after the step
  double dt = 0.0;  // 0 for the initial record
  double mass = 0.0;
  double total_variation = 0.0;
  double entropy = 0.0;
  std::vector<std::int32_t> active_cells;
};

struct RunHistory {
  std::vector<StepRecord> steps;
  // Neighbor values (u_{j-1}, u_{j+1}) of active cells whose neighbors
  // straddle u = 0, appended each step; feeds the kinetic scatter.
  std::vector<TracePair> straddle_traces;
  double influx_integral = 0.0;   // sum of dt * (left boundary flux)
  double outflux_integral = 0.0;  // sum of dt * (right boundary flux)
  std::int64_t degenerate_speed_warnings = 0;
};

struct RunOptions {
  bool fixed_dt = false;     // freeze dt from the initial state
  double dt_override = 0.0;  // > 0: use exactly this dt (implies fixed)
  bool record = true;
};

struct RunResult {
  GridState state;
  RunHistory history;
};

// Advances gs to t_end, clamping the final step to land exactly.
RunResult run(const SchemeConfig& cfg, GridState gs, double t_end,
              const RunOptions& opts = {});

}  // namespace nclaw
