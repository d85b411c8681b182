#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nclaw/flux.hpp"

namespace nclaw {

enum class KineticFamily { Linear, Custom };

// Kinetic function phi^flat selecting admissible nonclassical shocks,
// together with its inverse phi^{-flat}.  The linear family is
// phi^flat(u) = -beta*u with beta in [0.5, 1); custom families must
// supply both maps (no numerical inversion is attempted).
struct KineticFunction {
  KineticFamily family = KineticFamily::Linear;
  double beta = 0.75;
  std::function<double(double)> fwd;
  std::function<double(double)> inv;

  static KineticFunction linear(double beta);
  static KineticFunction custom(std::function<double(double)> fwd,
                                std::function<double(double)> inv);
};

double kinetic(const KineticFunction& kf, double u);          // phi^flat
double kinetic_inverse(const KineticFunction& kf, double u);  // phi^{-flat}

// phi^sharp: third intersection of the chord through u and phi^flat(u)
// with the flux graph; -u - phi^flat(u) for cubic kinds.
double companion(const KineticFunction& kf, const FluxSpec& fs, double u);

// The Riemann solver and the reconstruction scheme for a convex-concave
// flux are the x-mirror of the concave-convex ones; under the mirror the
// shock states swap, so nonclassical shocks are parameterized by their
// right state and the left-to-right map is phi^{-flat}.  This pair
// presents the kinetic maps in the orientation each convexity class
// uses.
struct OrientedKinetics {
  const KineticFunction* kf = nullptr;
  bool flipped = false;  // true for ConvexConcave

  double fwd(double u) const { return flipped ? kinetic_inverse(*kf, u) : kinetic(*kf, u); }
  double inv(double u) const { return flipped ? kinetic(*kf, u) : kinetic_inverse(*kf, u); }
};

OrientedKinetics orient(const KineticFunction& kf, const FluxSpec& fs);

struct BoundCheck {
  std::string name;
  bool passed = true;
  double worst_u = 0.0;       // sample with the largest violation
  double worst_margin = 0.0;  // positive means violated by that much
};

struct ValidationReport {
  bool passed = true;
  std::vector<BoundCheck> bounds;
};

// Samples the admissibility bounds of the kinetic function against the
// flux geometry over [range_lo, range_hi]: strict zero-dissipation
// bound, tangent bound, monotonicity and inverse consistency.
ValidationReport validate(const KineticFunction& kf, const FluxSpec& fs,
                          double range_lo, double range_hi,
                          std::size_t samples = 1024);

// True without sampling for the linear family (the bounds reduce to
// beta in [0.5, 1)); falls back to sampled validation otherwise.
bool quick_valid(const KineticFunction& kf, const FluxSpec& fs,
                 double range_lo, double range_hi);

}  // namespace nclaw
