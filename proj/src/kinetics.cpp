#include "nclaw/kinetics.hpp"

#include <cmath>
#include <utility>

namespace nclaw {

KineticFunction KineticFunction::linear(double beta) {
  KineticFunction kf;
  kf.family = KineticFamily::Linear;
  kf.beta = beta;
  return kf;
}

KineticFunction KineticFunction::custom(std::function<double(double)> fwd,
                                        std::function<double(double)> inv) {
  KineticFunction kf;
  kf.family = KineticFamily::Custom;
  kf.fwd = std::move(fwd);
  kf.inv = std::move(inv);
  return kf;
}

double kinetic(const KineticFunction& kf, double u) {
  return kf.family == KineticFamily::Linear ? -(kf.beta * u) : kf.fwd(u);
}

double kinetic_inverse(const KineticFunction& kf, double u) {
  return kf.family == KineticFamily::Linear ? -(u / kf.beta) : kf.inv(u);
}

double companion(const KineticFunction& kf, const FluxSpec& fs, double u) {
  if (u == 0.0) return 0.0;
  return chord_third_root(fs, u, kinetic(kf, u));
}

OrientedKinetics orient(const KineticFunction& kf, const FluxSpec& fs) {
  return OrientedKinetics{&kf, fs.convexity == Convexity::ConvexConcave};
}

ValidationReport validate(const KineticFunction& kf, const FluxSpec& fs,
                          double range_lo, double range_hi,
                          std::size_t samples) {
  ValidationReport report;
  OrientedKinetics ok = orient(kf, fs);

  BoundCheck zero_dissipation{"strict zero-dissipation bound"};
  BoundCheck tangent{"tangent bound"};
  BoundCheck monotone{"monotone decreasing"};
  BoundCheck inverse{"inverse consistency"};

  auto record = [](BoundCheck& b, double u, double margin) {
    if (margin > b.worst_margin) {
      b.worst_margin = margin;
      b.worst_u = u;
      b.passed = false;
    }
  };

  // Tangent bound in the oriented frame: for ConcaveConvex the map is
  // bounded by phi^natural, for ConvexConcave by phi^{-natural}.
  auto tangent_bound = [&](double u) {
    return fs.convexity == Convexity::ConcaveConvex ? tangent_map(fs, u)
                                                    : inverse_tangent_map(fs, u);
  };

  double prev_u = 0.0;
  double prev_phi = 0.0;
  bool have_prev = false;
  for (std::size_t i = 0; i < samples; ++i) {
    double u = samples > 1
                   ? range_lo + (range_hi - range_lo) * double(i) / double(samples - 1)
                   : range_lo;
    double phi = ok.fwd(u);
    double scale = 1.0 + std::abs(u);

    if (std::abs(u) > 1e-9) {
      // phi0(u) < phi(u) <= tangent_bound(u) on the side where the map
      // increases away from phi0 (u > 0 concave-convex, u < 0 mirrored
      // convex-concave), the reversed chain on the other side.
      double phi0 = zero_dissipation_map(fs, u);
      double tb = tangent_bound(u);
      bool upper = fs.convexity == Convexity::ConcaveConvex ? u > 0.0 : u < 0.0;
      if (upper) {
        record(zero_dissipation, u, phi0 - phi + 1e-15 * scale);
        record(tangent, u, phi - tb);
      } else {
        record(zero_dissipation, u, phi - phi0 + 1e-15 * scale);
        record(tangent, u, tb - phi);
      }
    }

    if (have_prev && u > prev_u) record(monotone, u, phi - prev_phi);
    prev_u = u;
    prev_phi = phi;
    have_prev = true;

    double back = ok.inv(phi);
    record(inverse, u, std::abs(back - u) - 1e-12 * scale);
  }

  report.bounds = {zero_dissipation, tangent, monotone, inverse};
  for (const auto& b : report.bounds) report.passed = report.passed && b.passed;
  return report;
}

bool quick_valid(const KineticFunction& kf, const FluxSpec& fs,
                 double range_lo, double range_hi) {
  if (kf.family == KineticFamily::Linear)
    return kf.beta >= 0.5 && kf.beta < 1.0;
  return validate(kf, fs, range_lo, range_hi, 256).passed;
}

}  // namespace nclaw
