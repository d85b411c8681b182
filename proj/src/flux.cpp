#include "nclaw/flux.hpp"

#include <cmath>
#include <utility>

namespace nclaw {

FluxSpec FluxSpec::cubic_plus() {
  return FluxSpec{FluxKind::CubicPlus, Convexity::ConcaveConvex,
                  Monotonicity::NonDecreasing, {}, {}};
}

FluxSpec FluxSpec::cubic_minus() {
  return FluxSpec{FluxKind::CubicMinus, Convexity::ConvexConcave,
                  Monotonicity::NonIncreasing, {}, {}};
}

FluxSpec FluxSpec::custom(std::function<double(double)> f,
                          std::function<double(double)> fp,
                          Convexity convexity, Monotonicity monotonicity) {
  return FluxSpec{FluxKind::Custom, convexity, monotonicity, std::move(f),
                  std::move(fp)};
}

FluxSpec FluxSpec::linear_advection(double a) {
  // Convexity is meaningless for a linear flux; the advection schemes
  // never consult it.
  return FluxSpec{FluxKind::Custom, Convexity::ConcaveConvex,
                  a >= 0.0 ? Monotonicity::NonDecreasing : Monotonicity::NonIncreasing,
                  [a](double u) { return a * u; }, [a](double) { return a; }};
}

double eval(const FluxSpec& fs, double u) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
      return u * u * u + u;
    case FluxKind::CubicMinus:
      return -(u * u * u + u);
    case FluxKind::Custom:
      return fs.f(u);
  }
  return 0.0;  // unreachable
}

double eval_deriv(const FluxSpec& fs, double u) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
      return 3.0 * (u * u) + 1.0;
    case FluxKind::CubicMinus:
      return -(3.0 * (u * u) + 1.0);
    case FluxKind::Custom:
      return fs.fp(u);
  }
  return 0.0;  // unreachable
}

double shock_speed(const FluxSpec& fs, double u_minus, double u_plus) {
  if (u_minus == u_plus)
    throw EqualStates("shock_speed: equal states, use eval_deriv instead");
  if (std::abs(u_plus - u_minus) < 1e-13 * (1.0 + std::abs(u_minus)))
    return eval_deriv(fs, 0.5 * (u_minus + u_plus));
  return (eval(fs, u_plus) - eval(fs, u_minus)) / (u_plus - u_minus);
}

namespace {

// Tangency defect: zero when the chord from u to w is tangent at w.
double tangency_defect(const FluxSpec& fs, double u, double w) {
  return eval(fs, u) - eval(fs, w) - eval_deriv(fs, w) * (u - w);
}

// Bracketed bisection refined by Newton.  g must change sign on
// [lo, hi].
template <class G, class Gp>
double bisect_newton(G g, Gp gp, double lo, double hi, const char* what) {
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0))
    throw NoConvergence(std::string(what) + ": no sign change in bracket");
  const double tol = 1e-12;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    double gx = g(x);
    if (gx == 0.0) return x;
    if ((gx > 0.0) == (glo > 0.0)) {
      lo = x;
    } else {
      hi = x;
    }
    // Newton step, clipped back into the bracket.
    double gpx = gp(x);
    double xn = gpx != 0.0 ? x - gx / gpx : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= tol * (1.0 + std::abs(x))) return xn;
    x = xn;
  }
  throw NoConvergence(std::string(what) + ": iteration cap reached");
}

// d/dw of the tangency defect: -f''(w) (u - w), with f'' by central
// difference (custom fluxes only declare f').
double tangency_defect_deriv(const FluxSpec& fs, double u, double w) {
  const double h = 1e-6 * (1.0 + std::abs(w));
  double fpp = (eval_deriv(fs, w + h) - eval_deriv(fs, w - h)) / (2.0 * h);
  return -fpp * (u - w);
}

double tangent_map_custom(const FluxSpec& fs, double u) {
  // The tangent point lies strictly on the other side of the
  // inflection at 0; expand the bracket until the defect changes sign.
  double lo_mag = 1e-8 * (1.0 + std::abs(u));
  double hi_mag = 2.0 * std::abs(u);
  const double s = u > 0.0 ? -1.0 : 1.0;  // search on the opposite side
  auto g = [&](double w) { return tangency_defect(fs, u, w); };
  auto gp = [&](double w) { return tangency_defect_deriv(fs, u, w); };
  for (int grow = 0; grow < 60; ++grow) {
    double a = s * hi_mag;
    double b = s * lo_mag;
    if ((g(a) > 0.0) != (g(b) > 0.0))
      return u > 0.0 ? bisect_newton(g, gp, a, b, "tangent_map")
                     : bisect_newton(g, gp, b, a, "tangent_map");
    hi_mag *= 2.0;
  }
  throw NoConvergence("tangent_map: bracket expansion failed");
}

}  // namespace

double tangent_map(const FluxSpec& fs, double u) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
    case FluxKind::CubicMinus:
      return -u / 2.0;
    case FluxKind::Custom:
      if (u == 0.0) return 0.0;
      return tangent_map_custom(fs, u);
  }
  return 0.0;  // unreachable
}

double inverse_tangent_map(const FluxSpec& fs, double u) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
    case FluxKind::CubicMinus:
      return -2.0 * u;
    case FluxKind::Custom: {
      if (u == 0.0) return 0.0;
      // Invert tangent_map: find v with tangent_map(v) = u.  The
      // tangent point of v lands at u exactly when the chord from v is
      // tangent at u, i.e. the defect with roles (v, u) vanishes.
      auto g = [&](double v) { return tangency_defect(fs, v, u); };
      auto gp = [&](double v) {
        return eval_deriv(fs, v) - eval_deriv(fs, u);
      };
      const double s = u > 0.0 ? -1.0 : 1.0;
      double lo_mag = std::abs(u);  // |phi^{-nat}(u)| > |u|
      double hi_mag = 4.0 * std::abs(u);
      for (int grow = 0; grow < 60; ++grow) {
        double a = s * hi_mag;
        double b = s * lo_mag;
        if ((g(a) > 0.0) != (g(b) > 0.0))
          return u > 0.0 ? bisect_newton(g, gp, a, b, "inverse_tangent_map")
                         : bisect_newton(g, gp, b, a, "inverse_tangent_map");
        hi_mag *= 2.0;
      }
      throw NoConvergence("inverse_tangent_map: bracket expansion failed");
    }
  }
  return 0.0;  // unreachable
}

double chord_third_root(const FluxSpec& fs, double u, double v) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
    case FluxKind::CubicMinus:
      return -(u + v);
    case FluxKind::Custom: {
      // Continuity extensions: rho(u, u) = phi^{-nat}(u); the chord
      // tangent at v = phi^nat(u) meets the graph only twice, the
      // "third" root collapsing onto v itself -- also covered by the
      // generic search below through the double-root bracket, so only
      // the v == u case needs special treatment.
      if (v == u) return inverse_tangent_map(fs, u);
      double sigma = shock_speed(fs, u, v);
      auto g = [&](double w) {
        return eval(fs, w) - eval(fs, u) - sigma * (w - u);
      };
      auto gp = [&](double w) { return eval_deriv(fs, w) - sigma; };
      // Search outward from both endpoints, then between them, keeping
      // the root distinct from u and v.
      double lo = std::min(u, v);
      double hi = std::max(u, v);
      double span = hi - lo;
      const double eps = 1e-9 * (1.0 + span);
      // Outside [lo, hi] on each side.
      for (double dir : {-1.0, 1.0}) {
        double a = dir < 0 ? lo - eps : hi + eps;
        double step = std::max(span, 1.0);
        for (int grow = 0; grow < 60; ++grow) {
          double b = a + dir * step;
          if ((g(a) > 0.0) != (g(b) > 0.0))
            return dir < 0 ? bisect_newton(g, gp, b, a, "chord_third_root")
                           : bisect_newton(g, gp, a, b, "chord_third_root");
          step *= 2.0;
          if (std::abs(b) > 1e12) break;
        }
      }
      // Between the two states (double root side).
      double a = lo + eps;
      double b = hi - eps;
      if ((g(a) > 0.0) != (g(b) > 0.0))
        return bisect_newton(g, gp, a, b, "chord_third_root");
      throw NoConvergence("chord_third_root: no third intersection found");
    }
  }
  return 0.0;  // unreachable
}

double zero_dissipation_map(const FluxSpec& fs, double u) {
  switch (fs.kind) {
    case FluxKind::CubicPlus:
    case FluxKind::CubicMinus:
      return -u;
    case FluxKind::Custom:
      throw NoConvergence(
          "zero_dissipation_map: no closed form for custom fluxes");
  }
  return 0.0;  // unreachable
}

EntropyPair EntropyPair::quadratic_for(const FluxSpec& fs) {
  EntropyPair ep;
  ep.quadratic = true;
  ep.U = [](double u) { return u * u; };
  switch (fs.kind) {
    case FluxKind::CubicPlus:
      ep.F = [](double u) {
        double u2 = u * u;
        return 1.5 * (u2 * u2) + u2;
      };
      break;
    case FluxKind::CubicMinus:
      ep.F = [](double u) {
        double u2 = u * u;
        return -(1.5 * (u2 * u2) + u2);
      };
      break;
    case FluxKind::Custom: {
      // F(u) = int_0^u 2 s f'(s) ds by composite 5-point Gauss.
      auto fp = fs.fp;
      ep.F = [fp](double u) {
        static const double xg[5] = {-0.9061798459386640, -0.5384693101056831,
                                     0.0, 0.5384693101056831,
                                     0.9061798459386640};
        static const double wg[5] = {0.2369268850561891, 0.4786286704993665,
                                     0.5688888888888889, 0.4786286704993665,
                                     0.2369268850561891};
        const int panels = 64;
        double acc = 0.0;
        double h = u / panels;
        for (int p = 0; p < panels; ++p) {
          double mid = (p + 0.5) * h;
          for (int k = 0; k < 5; ++k) {
            double s = mid + 0.5 * h * xg[k];
            acc += wg[k] * 0.5 * h * 2.0 * s * fp(s);
          }
        }
        return acc;
      };
      break;
    }
  }
  return ep;
}

}  // namespace nclaw
