#pragma once

#include <cstddef>

#include "nclaw/flux.hpp"
#include "nclaw/kinetics.hpp"

namespace nclaw {

enum class WaveKind { Rarefaction, ClassicalShock, NonclassicalShock };

struct Wave {
  WaveKind kind = WaveKind::ClassicalShock;
  double left_state = 0.0;
  double right_state = 0.0;
  double speed_lo = 0.0;  // == speed_hi for shocks
  double speed_hi = 0.0;
};

// Ordered self-similar wave structure of a Riemann solution.  At most
// two waves arise for a single-inflection flux, so storage is inline;
// `flux` is a non-owning pointer used to invert rarefactions while
// sampling and must outlive the fan.
struct WaveFan {
  const FluxSpec* flux = nullptr;
  double left_state = 0.0;
  double right_state = 0.0;

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  const Wave& operator[](std::size_t i) const { return waves_[i]; }
  const Wave* begin() const { return waves_; }
  const Wave* end() const { return waves_ + count_; }

  void push(const Wave& w) { waves_[count_++] = w; }

 private:
  Wave waves_[2];
  std::size_t count_ = 0;
};

// Exact nonclassical Riemann solver: the eight-case analysis per
// convexity class.  Throws InvalidKinetics if kf fails the
// admissibility bounds on the interval spanned by the data and its
// kinetic images.
WaveFan solve_nonclassical(const FluxSpec& fs, const KineticFunction& kf,
                           double u_l, double u_r);

// Classical entropy solution: the same case analysis with the kinetic
// map replaced by the tangent map, which collapses the nonclassical
// branch and yields the convex-envelope construction.
WaveFan solve_classical(const FluxSpec& fs, double u_l, double u_r);

// Value of the self-similar solution on the ray x/t = xi.  Ties at a
// shock speed resolve to the right state.
double sample(const WaveFan& fan, double xi);

// Integral of the self-similar profile over [xi_lo, xi_hi]
// (rarefactions via their closed-form primitive for cubic kinds).
double fan_integral(const WaveFan& fan, double xi_lo, double xi_hi);

// Solution of the Riemann problem with the jump at x = 0; t = 0 returns
// the step data.
double exact_riemann_solution(const FluxSpec& fs, const KineticFunction& kf,
                              double u_l, double u_r, double x, double t);

}  // namespace nclaw
