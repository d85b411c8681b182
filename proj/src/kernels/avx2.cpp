// AVX2 variants of the kernel set.  This translation unit is compiled
// with -mavx2 on x86-64 and reduced to a stub elsewhere; callers go
// through avx2_ops() which checks CPU support at runtime.

#include "nclaw/kernels.hpp"
#include "src/kernels/element.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>

namespace nclaw::kernels {

namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(x, mask);
}

inline __m256d neg_pd(__m256d x) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x8000000000000000ULL));
  return _mm256_xor_pd(x, mask);
}

inline __m256d cubic_pd(__m256d u, __m256d sign) {
  __m256d t = _mm256_mul_pd(u, u);
  t = _mm256_mul_pd(t, u);
  t = _mm256_add_pd(t, u);
  return _mm256_mul_pd(sign, t);
}

void cubic_flux(const double* u, double* f, std::size_t n, double sign) {
  const __m256d s = _mm256_set1_pd(sign);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(f + i, cubic_pd(_mm256_loadu_pd(u + i), s));
  for (; i < n; ++i) f[i] = element::cubic(u[i], sign);
}

void conservative_update(double* u, const double* flux, std::size_t n,
                         double lambda) {
  const __m256d lam = _mm256_set1_pd(lambda);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256d fl = _mm256_loadu_pd(flux + j);
    __m256d fr = _mm256_loadu_pd(flux + j + 1);
    __m256d uj = _mm256_loadu_pd(u + j);
    __m256d d = _mm256_mul_pd(lam, _mm256_sub_pd(fr, fl));
    _mm256_storeu_pd(u + j, _mm256_sub_pd(uj, d));
  }
  for (; j < n; ++j) u[j] = u[j] - lambda * (flux[j + 1] - flux[j]);
}

void minmax(const double* u, std::size_t n, double* lo, double* hi) {
  double l = u[0];
  double h = u[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vlo = _mm256_loadu_pd(u);
    __m256d vhi = vlo;
    for (i = 4; i + 4 <= n; i += 4) {
      __m256d v = _mm256_loadu_pd(u + i);
      vlo = _mm256_min_pd(vlo, v);
      vhi = _mm256_max_pd(vhi, v);
    }
    double tl[4], th[4];
    _mm256_storeu_pd(tl, vlo);
    _mm256_storeu_pd(th, vhi);
    l = std::min(std::min(tl[0], tl[1]), std::min(tl[2], tl[3]));
    h = std::max(std::max(th[0], th[1]), std::max(th[2], th[3]));
  }
  for (; i < n; ++i) {
    l = std::min(l, u[i]);
    h = std::max(h, u[i]);
  }
  *lo = l;
  *hi = h;
}

inline double hsum(__m256d v) {
  double t[4];
  _mm256_storeu_pd(t, v);
  return t[0] + t[1] + t[2] + t[3];
}

double sum(const double* u, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(u + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += u[i];
  return r;
}

double sum_squares(const double* u, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(u + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += u[i] * u[i];
  return r;
}

double l1_diff(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_add_pd(acc, abs_pd(d));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += std::abs(a[i] - b[i]);
  return r;
}

double total_variation(const double* u, std::size_t n) {
  if (n < 2) return 0.0;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(u + i + 1), _mm256_loadu_pd(u + i));
    acc = _mm256_add_pd(acc, abs_pd(d));
  }
  double r = hsum(acc);
  for (; i + 1 < n; ++i) r += std::abs(u[i + 1] - u[i]);
  return r;
}

void recon_flux_cubic_linear(const double* up, double* F, std::size_t n,
                             double beta, double dx, double dt, double sign,
                             bool nonincreasing) {
  const __m256d vbeta = _mm256_set1_pd(beta);
  const __m256d vdx = _mm256_set1_pd(dx);
  const __m256d vdt = _mm256_set1_pd(dt);
  const __m256d vsign = _mm256_set1_pd(sign);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d floor_scale = _mm256_set1_pd(1e-13);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d um = _mm256_loadu_pd(up + i);
    __m256d uc = _mm256_loadu_pd(up + i + 1);
    __m256d un = _mm256_loadu_pd(up + i + 2);
    __m256d ul = nonincreasing ? neg_pd(_mm256_mul_pd(vbeta, un))
                               : neg_pd(_mm256_div_pd(un, vbeta));
    __m256d ur = nonincreasing ? neg_pd(_mm256_div_pd(um, vbeta))
                               : neg_pd(_mm256_mul_pd(vbeta, um));
    __m256d den = _mm256_sub_pd(ur, ul);
    __m256d d = _mm256_div_pd(_mm256_sub_pd(ur, uc), den);
    __m256d floor = _mm256_mul_pd(
        floor_scale,
        _mm256_add_pd(_mm256_add_pd(one, abs_pd(ul)), abs_pd(ur)));
    __m256d active = _mm256_and_pd(
        _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_GE_OQ),
                      _mm256_cmp_pd(d, one, _CMP_LE_OQ)),
        _mm256_cmp_pd(abs_pd(den), floor, _CMP_GE_OQ));
    __m256d fl = cubic_pd(ul, vsign);
    __m256d fr = cubic_pd(ur, vsign);
    __m256d sigma = _mm256_div_pd(_mm256_sub_pd(fr, fl), den);
    __m256d flux_active;
    if (!nonincreasing) {
      __m256d dt_loc = _mm256_div_pd(
          _mm256_mul_pd(_mm256_sub_pd(one, d), vdx), sigma);
      __m256d a = _mm256_mul_pd(_mm256_min_pd(dt_loc, vdt), fr);
      __m256d b = _mm256_mul_pd(
          _mm256_max_pd(_mm256_sub_pd(vdt, dt_loc), zero), fl);
      flux_active = _mm256_div_pd(_mm256_add_pd(a, b), vdt);
    } else {
      __m256d dt_loc =
          _mm256_div_pd(_mm256_mul_pd(d, vdx), neg_pd(sigma));
      __m256d a = _mm256_mul_pd(_mm256_min_pd(dt_loc, vdt), fl);
      __m256d b = _mm256_mul_pd(
          _mm256_max_pd(_mm256_sub_pd(vdt, dt_loc), zero), fr);
      flux_active = _mm256_div_pd(_mm256_add_pd(a, b), vdt);
    }
    __m256d flux = _mm256_blendv_pd(cubic_pd(uc, vsign), flux_active, active);
    _mm256_storeu_pd(F + i, flux);
  }
  for (; i < n; ++i)
    F[i] = element::recon_flux(up[i], up[i + 1], up[i + 2], beta, dx, dt,
                               sign, nonincreasing);
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2")) return nullptr;
  static const Ops ops = {
      "avx2",          cubic_flux, conservative_update,
      minmax,          sum,        sum_squares,
      l1_diff,         total_variation,
      recon_flux_cubic_linear,
  };
  return &ops;
}

}  // namespace nclaw::kernels

#else  // !defined(__AVX2__)

namespace nclaw::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace nclaw::kernels

#endif
