#pragma once

#include <functional>

#include "nclaw/errors.hpp"

namespace nclaw {

enum class FluxKind { CubicPlus, CubicMinus, Custom };

// Single inflection point at u = 0.  ConcaveConvex means u*f''(u) > 0
// away from the origin (convex for u > 0), ConvexConcave the mirror.
enum class Convexity { ConcaveConvex, ConvexConcave };

// Sign of f' over the whole line; the scheme needs one-directional
// propagation.
enum class Monotonicity { NonDecreasing, NonIncreasing };

// Flux function together with its derivative, convexity class and
// monotonicity sign.  The cubic prototypes f(u) = u^3 + u and
// f(u) = -u^3 - u carry closed-form geometric maps; custom fluxes fall
// back to bracketed root searches.
struct FluxSpec {
  FluxKind kind = FluxKind::CubicPlus;
  Convexity convexity = Convexity::ConcaveConvex;
  Monotonicity monotonicity = Monotonicity::NonDecreasing;

  // Only consulted for FluxKind::Custom.
  std::function<double(double)> f;
  std::function<double(double)> fp;

  static FluxSpec cubic_plus();
  static FluxSpec cubic_minus();
  static FluxSpec custom(std::function<double(double)> f,
                         std::function<double(double)> fp,
                         Convexity convexity, Monotonicity monotonicity);
  // f(u) = a*u with a > 0 (a < 0 gives NonIncreasing).  Used by the
  // advection schemes only; the geometric maps are undefined for it.
  static FluxSpec linear_advection(double a);

  double sign() const { return monotonicity == Monotonicity::NonDecreasing ? 1.0 : -1.0; }
};

double eval(const FluxSpec& fs, double u);
double eval_deriv(const FluxSpec& fs, double u);

// Rankine-Hugoniot speed (f(u_plus) - f(u_minus)) / (u_plus - u_minus).
// Throws EqualStates on exact equality; nearly equal states (relative
// gap below 1e-13) return f' at the midpoint.
double shock_speed(const FluxSpec& fs, double u_minus, double u_plus);

// phi^natural: the state != u where the chord from u touches the graph
// tangentially.  Cubic kinds: -u/2.
double tangent_map(const FluxSpec& fs, double u);

// phi^{-natural}: inverse of tangent_map.  Cubic kinds: -2u.
double inverse_tangent_map(const FluxSpec& fs, double u);

// rho(u, v): third intersection of the chord through (u, f(u)) and
// (v, f(v)) with the graph, extended by continuity at v = u and
// v = tangent_map(u).  Cubic kinds: -(u + v).
double chord_third_root(const FluxSpec& fs, double u, double v);

// Zero-entropy-dissipation companion for the quadratic entropy.  Both
// cubic kinds: -u.  Custom fluxes are not supported.
double zero_dissipation_map(const FluxSpec& fs, double u);

// Strictly convex entropy U with flux F, F' = U' f'.
struct EntropyPair {
  bool quadratic = true;  // U(u) = u^2 fast path
  std::function<double(double)> U;
  std::function<double(double)> F;

  // U(u) = u^2 and the matching F for the given flux.
  static EntropyPair quadratic_for(const FluxSpec& fs);
};

}  // namespace nclaw
