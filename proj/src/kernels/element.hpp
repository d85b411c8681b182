#pragma once

#include <algorithm>
#include <cmath>

// Per-element expressions shared by the scalar kernels and the AVX2
// tail loops.  The SIMD lanes evaluate the same operations in the same
// order, which is what makes the elementwise kernels bitwise identical
// across variants (the build disables FP contraction).

namespace nclaw::kernels::element {

inline double cubic(double u, double sign) { return sign * (u * u * u + u); }

inline double recon_flux(double um, double uc, double un, double beta,
                         double dx, double dt, double sign,
                         bool nonincreasing) {
  // The kinetic maps appear right-parameterized in the convex-concave
  // (non-increasing) case, so the beta roles swap with the orientation.
  double ul = nonincreasing ? -(beta * un) : -(un / beta);
  double ur = nonincreasing ? -(um / beta) : -(beta * um);
  double den = ur - ul;
  double d = (ur - uc) / den;
  bool active = d >= 0.0 && d <= 1.0 &&
                std::abs(den) >= 1e-13 * (1.0 + std::abs(ul) + std::abs(ur));
  if (!active) return cubic(uc, sign);
  double fl = cubic(ul, sign);
  double fr = cubic(ur, sign);
  double sigma = (fr - fl) / den;
  if (!nonincreasing) {
    double dt_loc = ((1.0 - d) * dx) / sigma;
    return (std::min(dt_loc, dt) * fr + std::max(dt - dt_loc, 0.0) * fl) / dt;
  }
  double dt_loc = (d * dx) / (-sigma);
  return (std::min(dt_loc, dt) * fl + std::max(dt - dt_loc, 0.0) * fr) / dt;
}

}  // namespace nclaw::kernels::element
