#pragma once

#include <functional>
#include <vector>

#include "nclaw/grid.hpp"
#include "nclaw/riemann.hpp"
#include "nclaw/schemes.hpp"

namespace nclaw {

// Exact cell average of a reference solution over [xl, xr] at time t.
using ExactAverage = std::function<double(double xl, double xr, double t)>;

// Self-similar Riemann reference anchored at (x0, t0), with exact
// piecewise integration of the wave fan.  Holds its own copy of the
// flux, so it is pinned in memory (the fan points into it).
class RiemannExact {
 public:
  RiemannExact(const FluxSpec& fs, const KineticFunction& kf, double u_l,
               double u_r, double x0 = 0.0, double t0 = 0.0);
  RiemannExact(const RiemannExact&) = delete;
  RiemannExact& operator=(const RiemannExact&) = delete;

  double value(double x, double t) const;
  double average(double xl, double xr, double t) const;
  ExactAverage averager() const {
    return [this](double xl, double xr, double t) {
      return average(xl, xr, t);
    };
  }
  const WaveFan& fan() const { return fan_; }

 private:
  FluxSpec fs_;
  KineticFunction kf_;
  WaveFan fan_;
  double x0_;
  double t0_;
};

// L1 distance between the cell averages and the exact ones:
// sum_j dx * |u_j - ubar_j|.
double l1_error(const GridState& gs, const ExactAverage& exact);

struct ConvergencePoint {
  double dx = 0.0;
  double error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergencePoint> points;    // used by the fit
  std::vector<ConvergencePoint> excluded;  // zero-error (exact) runs
  double fitted_order = 0.0;              // slope of log(error) vs log(dx)
  double fit_residual = 0.0;              // RMS residual of the fit
};

// Log-log least-squares fit; needs >= 3 mesh levels and >= 2 nonzero
// errors after excluding exact runs.
ConvergenceReport convergence_order(const std::vector<ConvergencePoint>& runs);

struct KineticScatter {
  std::vector<TracePair> pairs;  // (left trace, right trace)
};

// Straddle-zero traces of active cells collected during a
// reconstruction run.
KineticScatter extract_kinetic_pairs(const RunHistory& history);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
};

// Least squares of u_right against u_left.
LineFit fit_scatter(const KineticScatter& scatter);

// RMS distance of the scatter to the prescribed relation
// u_right = slope * u_left + intercept.
double scatter_rms_to_line(const KineticScatter& scatter, double slope,
                           double intercept);

double total_variation(const GridState& gs);
double total_mass(const GridState& gs);
double entropy_total(const EntropyPair& ep, const GridState& gs);

struct DetectedJump {
  std::size_t index = 0;  // sign change between cells index, index+1
  double u_left = 0.0;    // plateau value two cells left
  double u_right = 0.0;   // plateau value three cells right
};

// Sharp sign-changing jumps beyond the tangent line (|u_right| >
// |u_left| / 2), i.e. undercompressive transitions.  Classical shocks
// straddling zero stay inside the tangent bound and are not reported;
// resolved smooth crossings fail the amplitude floor.
std::vector<DetectedJump> detect_nonclassical_jumps(const GridState& gs,
                                                    double min_amplitude);

}  // namespace nclaw
