#pragma once

#include <cstddef>

namespace nclaw::kernels {

// Hot inner loops of the finite-volume engine.  Every operation has a
// scalar reference implementation and, on x86-64, an AVX2 variant
// selected at runtime.  Elementwise kernels (cubic_flux,
// conservative_update, recon_flux_cubic_linear, minmax) are bitwise
// identical across variants; reductions (sum, sum_squares, l1_diff,
// total_variation) accumulate in a different order and agree to
// rounding only.
struct Ops {
  const char* name;

  // f[i] = sign * (u[i]^3 + u[i])
  void (*cubic_flux)(const double* u, double* f, std::size_t n, double sign);

  // u[j] -= lambda * (flux[j+1] - flux[j]); flux has n+1 entries.
  void (*conservative_update)(double* u, const double* flux, std::size_t n,
                              double lambda);

  void (*minmax)(const double* u, std::size_t n, double* lo, double* hi);
  double (*sum)(const double* u, std::size_t n);
  double (*sum_squares)(const double* u, std::size_t n);
  double (*l1_diff)(const double* a, const double* b, std::size_t n);
  double (*total_variation)(const double* u, std::size_t n);

  // Reconstruction interface fluxes for a cubic flux with the linear
  // kinetic family.  F[i] is the flux owned by the cell with stencil
  // (up[i], up[i+1], up[i+2]); `nonincreasing` selects the mirrored
  // local-time formula for f' <= 0.
  void (*recon_flux_cubic_linear)(const double* up, double* F, std::size_t n,
                                  double beta, double dx, double dt,
                                  double sign, bool nonincreasing);
};

const Ops& scalar_ops();

// Null when the binary or the CPU lacks AVX2.
const Ops* avx2_ops();

// Runtime selection: AVX2 when available, scalar otherwise.  The
// NCLAW_KERNELS environment variable ("scalar" or "avx2") overrides.
const Ops& active_ops();

}  // namespace nclaw::kernels
