#include "nclaw/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "nclaw/kernels.hpp"

namespace nclaw {

RiemannExact::RiemannExact(const FluxSpec& fs, const KineticFunction& kf,
                           double u_l, double u_r, double x0, double t0)
    : fs_(fs), kf_(kf), x0_(x0), t0_(t0) {
  fan_ = solve_nonclassical(fs_, kf_, u_l, u_r);
}

double RiemannExact::value(double x, double t) const {
  double tau = t - t0_;
  if (tau <= 0.0) return x < x0_ ? fan_.left_state : fan_.right_state;
  return sample(fan_, (x - x0_) / tau);
}

double RiemannExact::average(double xl, double xr, double t) const {
  double tau = t - t0_;
  if (tau <= 0.0) {
    if (xr <= x0_) return fan_.left_state;
    if (xl >= x0_) return fan_.right_state;
    return (fan_.left_state * (x0_ - xl) + fan_.right_state * (xr - x0_)) /
           (xr - xl);
  }
  return tau * fan_integral(fan_, (xl - x0_) / tau, (xr - x0_) / tau) /
         (xr - xl);
}

double l1_error(const GridState& gs, const ExactAverage& exact) {
  double acc = 0.0;
  for (std::size_t j = 0; j < gs.size(); ++j)
    acc += std::abs(gs.cells[j] -
                    exact(gs.interface(j), gs.interface(j + 1), gs.t));
  return gs.dx * acc;
}

ConvergenceReport convergence_order(const std::vector<ConvergencePoint>& runs) {
  if (runs.size() < 3)
    throw DegenerateFit("convergence_order: need at least 3 mesh levels");
  ConvergenceReport report;
  for (const auto& p : runs) {
    if (p.error > 0.0)
      report.points.push_back(p);
    else
      report.excluded.push_back(p);
  }
  if (report.points.size() < 2)
    throw DegenerateFit(
        "convergence_order: fewer than 2 nonzero errors (exact runs "
        "excluded)");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(report.points.size());
  for (const auto& p : report.points) {
    double x = std::log(p.dx);
    double y = std::log(p.error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DegenerateFit("convergence_order: identical dx");
  report.fitted_order = (n * sxy - sx * sy) / denom;
  double intercept = (sy - report.fitted_order * sx) / n;
  double ss = 0.0;
  for (const auto& p : report.points) {
    double r = std::log(p.error) -
               (intercept + report.fitted_order * std::log(p.dx));
    ss += r * r;
  }
  report.fit_residual = std::sqrt(ss / n);
  return report;
}

KineticScatter extract_kinetic_pairs(const RunHistory& history) {
  return KineticScatter{history.straddle_traces};
}

LineFit fit_scatter(const KineticScatter& scatter) {
  if (scatter.pairs.size() < 2)
    throw DegenerateFit("fit_scatter: need at least 2 pairs");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(scatter.pairs.size());
  for (const auto& p : scatter.pairs) {
    sx += p.u_left;
    sy += p.u_right;
    sxx += p.u_left * p.u_left;
    sxy += p.u_left * p.u_right;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DegenerateFit("fit_scatter: degenerate abscissae");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (const auto& p : scatter.pairs) {
    double r = p.u_right - (fit.intercept + fit.slope * p.u_left);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

double scatter_rms_to_line(const KineticScatter& scatter, double slope,
                           double intercept) {
  if (scatter.pairs.empty()) return 0.0;
  double ss = 0.0;
  for (const auto& p : scatter.pairs) {
    double r = p.u_right - (intercept + slope * p.u_left);
    ss += r * r;
  }
  return std::sqrt(ss / double(scatter.pairs.size()));
}

double total_variation(const GridState& gs) {
  return kernels::active_ops().total_variation(gs.cells.data(), gs.size());
}

double total_mass(const GridState& gs) {
  return gs.dx * kernels::active_ops().sum(gs.cells.data(), gs.size());
}

double entropy_total(const EntropyPair& ep, const GridState& gs) {
  if (ep.quadratic)
    return gs.dx * kernels::active_ops().sum_squares(gs.cells.data(), gs.size());
  double acc = 0.0;
  for (double u : gs.cells) acc += ep.U(u);
  return gs.dx * acc;
}

std::vector<DetectedJump> detect_nonclassical_jumps(const GridState& gs,
                                                    double min_amplitude) {
  std::vector<DetectedJump> jumps;
  const std::size_t n = gs.size();
  if (n < 6) return jumps;
  std::size_t i = 2;
  while (i + 3 < n) {
    double a = gs.cells[i];
    double b = gs.cells[i + 1];
    if (a * b < 0.0) {
      double left = gs.cells[i - 2];
      double right = gs.cells[i + 3];
      if (std::abs(left) >= min_amplitude && std::abs(right) >= min_amplitude &&
          left * right < 0.0 && std::abs(right) > 0.5 * std::abs(left)) {
        jumps.push_back(DetectedJump{i, left, right});
        i += 4;
        continue;
      }
    }
    ++i;
  }
  return jumps;
}

}  // namespace nclaw
