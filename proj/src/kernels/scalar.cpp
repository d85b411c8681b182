#include <cmath>

#include "nclaw/kernels.hpp"
#include "src/kernels/element.hpp"

namespace nclaw::kernels {

namespace {

void cubic_flux(const double* u, double* f, std::size_t n, double sign) {
  for (std::size_t i = 0; i < n; ++i) f[i] = element::cubic(u[i], sign);
}

void conservative_update(double* u, const double* flux, std::size_t n,
                         double lambda) {
  for (std::size_t j = 0; j < n; ++j)
    u[j] = u[j] - lambda * (flux[j + 1] - flux[j]);
}

void minmax(const double* u, std::size_t n, double* lo, double* hi) {
  double l = u[0];
  double h = u[0];
  for (std::size_t i = 1; i < n; ++i) {
    l = std::min(l, u[i]);
    h = std::max(h, u[i]);
  }
  *lo = l;
  *hi = h;
}

double sum(const double* u, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += u[i];
  return acc;
}

double sum_squares(const double* u, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += u[i] * u[i];
  return acc;
}

double l1_diff(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

double total_variation(const double* u, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) acc += std::abs(u[i + 1] - u[i]);
  return acc;
}

void recon_flux_cubic_linear(const double* up, double* F, std::size_t n,
                             double beta, double dx, double dt, double sign,
                             bool nonincreasing) {
  for (std::size_t i = 0; i < n; ++i)
    F[i] = element::recon_flux(up[i], up[i + 1], up[i + 2], beta, dx, dt,
                               sign, nonincreasing);
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops = {
      "scalar",        cubic_flux, conservative_update,
      minmax,          sum,        sum_squares,
      l1_diff,         total_variation,
      recon_flux_cubic_linear,
  };
  return ops;
}

}  // namespace nclaw::kernels
