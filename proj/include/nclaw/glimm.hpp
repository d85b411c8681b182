#pragma once

#include <cstdint>

#include "nclaw/grid.hpp"
#include "nclaw/riemann.hpp"
#include "nclaw/schemes.hpp"

namespace nclaw {

// Random-choice scheme driven by the van der Corput sequence, using the
// exact nonclassical Riemann solver.  cfl <= 0.5 keeps fans from
// adjacent interfaces from interacting within one step.
struct GlimmConfig {
  double cfl = 0.45;
  FluxSpec flux = FluxSpec::cubic_plus();
  KineticFunction kinetics = KineticFunction::linear(0.75);
  std::uint64_t sequence_offset = 1;  // index of the first sample a_n
};

// Binary radical inverse of n >= 1.
double van_der_corput(std::uint64_t n);

double glimm_dt(const GlimmConfig& cfg, const GridState& gs);

// One random-choice step with sample a_n: each cell takes the value of
// the one-sided Riemann fan covering the ray through
// x_{j-1/2} + a_n * dx (mirrored for non-increasing flux).
GridState glimm_step(const GlimmConfig& cfg, const GridState& gs,
                     std::uint64_t n, double dt);

RunResult glimm_run(const GlimmConfig& cfg, GridState gs, double t_end,
                    const RunOptions& opts = {});

}  // namespace nclaw
