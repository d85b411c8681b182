#include "nclaw/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace nclaw {

namespace {

bool negligible(double a, double b) {
  return std::abs(a - b) <= 1e-15 * (1.0 + std::abs(a));
}

void push_shock(WaveFan& fan, const FluxSpec& fs, WaveKind kind, double l,
                double r) {
  if (negligible(l, r)) return;
  double s = shock_speed(fs, l, r);
  fan.push(Wave{kind, l, r, s, s});
}

void push_rarefaction(WaveFan& fan, const FluxSpec& fs, double l, double r) {
  if (negligible(l, r)) return;
  fan.push(Wave{WaveKind::Rarefaction, l, r, eval_deriv(fs, l),
                eval_deriv(fs, r)});
}

// The case lists below are shared by the nonclassical solver and the
// classical (convex-envelope) construction.  A geometry bundles the
// left-to-right selection map with the two chord intersections the
// cases compare against.
struct KineticGeometry {
  const FluxSpec* fs;
  OrientedKinetics ok;
  WaveKind nc_kind = WaveKind::NonclassicalShock;

  double fwd(double u) const { return ok.fwd(u); }
  double inv(double u) const { return ok.inv(u); }
  double sharp(double u, double phi) const {
    return u == 0.0 ? 0.0 : chord_third_root(*fs, u, phi);
  }
  double rho(double a, double b) const { return chord_third_root(*fs, a, b); }
};

// Tangent-map geometry: the chord through u and phi^natural(u) is
// tangent, so both intersections collapse onto the tangent point and
// the nonclassical interval is empty.  Waves become sonic classical
// shocks.
struct TangentGeometry {
  const FluxSpec* fs;
  bool flipped;  // ConvexConcave orientation
  WaveKind nc_kind = WaveKind::ClassicalShock;

  double fwd(double u) const {
    return flipped ? inverse_tangent_map(*fs, u) : tangent_map(*fs, u);
  }
  double inv(double u) const {
    return flipped ? tangent_map(*fs, u) : inverse_tangent_map(*fs, u);
  }
  double sharp(double, double phi) const { return phi; }
  double rho(double a, double) const { return a; }
};

template <class Geometry>
WaveFan solve_concave_convex(const FluxSpec& fs, const Geometry& geo,
                             double u_l, double u_r) {
  WaveFan fan;
  fan.flux = &fs;
  fan.left_state = u_l;
  fan.right_state = u_r;
  double phi = geo.fwd(u_l);
  double sharp = geo.sharp(u_l, phi);
  if (u_l > 0.0) {
    if (u_r >= u_l) {
      push_rarefaction(fan, fs, u_l, u_r);
    } else if (u_r >= sharp) {  // ties resolve to the classical branch
      push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
    } else if (u_r > phi) {
      push_shock(fan, fs, geo.nc_kind, u_l, phi);
      push_shock(fan, fs, WaveKind::ClassicalShock, phi, u_r);
    } else {
      push_shock(fan, fs, geo.nc_kind, u_l, phi);
      push_rarefaction(fan, fs, phi, u_r);
    }
  } else {
    if (u_r <= u_l) {
      push_rarefaction(fan, fs, u_l, u_r);
    } else if (u_r <= sharp) {
      push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
    } else if (u_r < phi) {
      push_shock(fan, fs, geo.nc_kind, u_l, phi);
      push_shock(fan, fs, WaveKind::ClassicalShock, phi, u_r);
    } else {
      push_shock(fan, fs, geo.nc_kind, u_l, phi);
      push_rarefaction(fan, fs, phi, u_r);
    }
  }
  return fan;
}

// Convex-concave list: the nonclassical shock connects inv(u_r) to u_r
// and the sub-cases compare u_l against rho(inv(u_r), u_r).
template <class Geometry>
WaveFan solve_convex_concave(const FluxSpec& fs, const Geometry& geo,
                             double u_l, double u_r) {
  WaveFan fan;
  fan.flux = &fs;
  fan.left_state = u_l;
  fan.right_state = u_r;
  double phi = geo.fwd(u_l);
  if (u_l > 0.0) {
    if (u_r >= u_l) {
      push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
    } else if (u_r >= 0.0) {
      push_rarefaction(fan, fs, u_l, u_r);
    } else if (u_r > phi) {
      double mid = geo.inv(u_r);
      push_rarefaction(fan, fs, u_l, mid);
      push_shock(fan, fs, geo.nc_kind, mid, u_r);
    } else {
      double mid = geo.inv(u_r);
      double rho = geo.rho(mid, u_r);
      if (u_l > rho) {
        push_shock(fan, fs, WaveKind::ClassicalShock, u_l, mid);
        push_shock(fan, fs, geo.nc_kind, mid, u_r);
      } else {
        push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
      }
    }
  } else {
    if (u_r <= u_l) {
      push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
    } else if (u_r <= 0.0) {
      push_rarefaction(fan, fs, u_l, u_r);
    } else if (u_r < phi) {
      double mid = geo.inv(u_r);
      push_rarefaction(fan, fs, u_l, mid);
      push_shock(fan, fs, geo.nc_kind, mid, u_r);
    } else {
      double mid = geo.inv(u_r);
      double rho = geo.rho(mid, u_r);
      if (u_l < rho) {
        push_shock(fan, fs, WaveKind::ClassicalShock, u_l, mid);
        push_shock(fan, fs, geo.nc_kind, mid, u_r);
      } else {
        push_shock(fan, fs, WaveKind::ClassicalShock, u_l, u_r);
      }
    }
  }
  return fan;
}

}  // namespace

WaveFan solve_nonclassical(const FluxSpec& fs, const KineticFunction& kf,
                           double u_l, double u_r) {
  OrientedKinetics ok = orient(kf, fs);
  double lo = std::min({u_l, u_r, ok.fwd(u_l), ok.fwd(u_r), ok.inv(u_l), ok.inv(u_r)});
  double hi = std::max({u_l, u_r, ok.fwd(u_l), ok.fwd(u_r), ok.inv(u_l), ok.inv(u_r)});
  if (!quick_valid(kf, fs, lo, hi))
    throw InvalidKinetics("solve_nonclassical: kinetic function fails the "
                          "admissibility bounds on the data interval");
  KineticGeometry geo{&fs, ok};
  if (fs.convexity == Convexity::ConcaveConvex)
    return solve_concave_convex(fs, geo, u_l, u_r);
  return solve_convex_concave(fs, geo, u_l, u_r);
}

WaveFan solve_classical(const FluxSpec& fs, double u_l, double u_r) {
  TangentGeometry geo{&fs, fs.convexity == Convexity::ConvexConcave};
  if (fs.convexity == Convexity::ConcaveConvex)
    return solve_concave_convex(fs, geo, u_l, u_r);
  return solve_convex_concave(fs, geo, u_l, u_r);
}

namespace {

double invert_rarefaction(const FluxSpec& fs, const Wave& w, double xi) {
  double s = (w.left_state + w.right_state) >= 0.0 ? 1.0 : -1.0;
  switch (fs.kind) {
    case FluxKind::CubicPlus:
      return s * std::sqrt(std::max(0.0, (xi - 1.0) / 3.0));
    case FluxKind::CubicMinus:
      return s * std::sqrt(std::max(0.0, -(xi + 1.0) / 3.0));
    case FluxKind::Custom: {
      // f' is monotone on the one-signed wave range; plain bisection.
      double a = std::min(w.left_state, w.right_state);
      double b = std::max(w.left_state, w.right_state);
      bool increasing = eval_deriv(fs, a) < eval_deriv(fs, b);
      for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (b - a <= 1e-14 * (1.0 + std::abs(m))) return m;
        if ((eval_deriv(fs, m) < xi) == increasing)
          a = m;
        else
          b = m;
      }
      return 0.5 * (a + b);
    }
  }
  return 0.0;  // unreachable
}

// Primitive of the rarefaction profile u(xi) for cubic kinds.
double rarefaction_primitive(const FluxSpec& fs, const Wave& w, double xi) {
  double s = (w.left_state + w.right_state) >= 0.0 ? 1.0 : -1.0;
  const double c = 2.0 / (3.0 * std::sqrt(3.0));
  switch (fs.kind) {
    case FluxKind::CubicPlus:
      return s * c * std::pow(std::max(0.0, xi - 1.0), 1.5);
    case FluxKind::CubicMinus:
      return -s * c * std::pow(std::max(0.0, -(xi + 1.0)), 1.5);
    case FluxKind::Custom:
      return 0.0;  // handled by quadrature in fan_integral
  }
  return 0.0;  // unreachable
}

double rarefaction_integral(const FluxSpec& fs, const Wave& w, double a,
                            double b) {
  if (fs.kind != FluxKind::Custom)
    return rarefaction_primitive(fs, w, b) - rarefaction_primitive(fs, w, a);
  static const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
  static const double wg[5] = {0.2369268850561891, 0.4786286704993665,
                               0.5688888888888889, 0.4786286704993665,
                               0.2369268850561891};
  const int panels = 16;
  double h = (b - a) / panels;
  double acc = 0.0;
  for (int p = 0; p < panels; ++p) {
    double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 5; ++k)
      acc += wg[k] * 0.5 * h * invert_rarefaction(fs, w, mid + 0.5 * h * xg[k]);
  }
  return acc;
}

}  // namespace

double sample(const WaveFan& fan, double xi) {
  for (const Wave& w : fan) {
    if (xi < w.speed_lo) return w.left_state;
    if (w.kind == WaveKind::Rarefaction && xi <= w.speed_hi)
      return invert_rarefaction(*fan.flux, w, xi);
    // xi at or beyond the wave: fall through to its right side.
  }
  return fan.right_state;
}

double fan_integral(const WaveFan& fan, double xi_lo, double xi_hi) {
  double acc = 0.0;
  double cur = xi_lo;
  double value = fan.left_state;
  for (const Wave& w : fan) {
    if (cur >= xi_hi) break;
    if (cur < w.speed_lo) {
      double end = std::min(xi_hi, w.speed_lo);
      acc += value * (end - cur);
      cur = end;
    }
    if (w.kind == WaveKind::Rarefaction && cur < std::min(xi_hi, w.speed_hi)) {
      double end = std::min(xi_hi, w.speed_hi);
      acc += rarefaction_integral(*fan.flux, w, cur, end);
      cur = end;
    }
    value = w.right_state;
  }
  if (cur < xi_hi) acc += value * (xi_hi - cur);
  return acc;
}

double exact_riemann_solution(const FluxSpec& fs, const KineticFunction& kf,
                              double u_l, double u_r, double x, double t) {
  if (t <= 0.0) return x < 0.0 ? u_l : u_r;
  WaveFan fan = solve_nonclassical(fs, kf, u_l, u_r);
  return sample(fan, x / t);
}

}  // namespace nclaw
