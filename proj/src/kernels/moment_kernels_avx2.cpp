// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <cmath>
#include <numbers>

#include "nanores/kernels/moment_kernels.hpp"

namespace nanores::kernels::detail {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// sin(t)/t = sum_k (-1)^k t^{2k} / (2k+1)!, k = 0..10. Truncation error below
// 1e-18 for t in [0, pi/2], i.e. radii in [0, 1].
constexpr std::array<double, 11> kSincCoeffs = [] {
  std::array<double, 11> c{};
  double factorial = 1.0;
  for (int k = 0; k < 11; ++k) {
    if (k > 0) factorial *= static_cast<double>((2 * k) * (2 * k + 1));
    c[static_cast<std::size_t>(k)] = (k % 2 == 0 ? 1.0 : -1.0) / factorial;
  }
  return c;
}();

inline double sinc_poly(double t) {
  const double t2 = t * t;
  double p = kSincCoeffs[10];
  for (int k = 9; k >= 0; --k) p = std::fma(p, t2, kSincCoeffs[static_cast<std::size_t>(k)]);
  return p;
}

inline __m256d sinc_poly(__m256d t) {
  const __m256d t2 = _mm256_mul_pd(t, t);
  __m256d p = _mm256_set1_pd(kSincCoeffs[10]);
  for (int k = 9; k >= 0; --k) p = _mm256_fmadd_pd(p, t2, _mm256_set1_pd(kSincCoeffs[static_cast<std::size_t>(k)]));
  return p;
}

inline double ipow(double x, int n) {
  double result = 1.0;
  for (; n > 0; n >>= 1) {
    if (n & 1) result *= x;
    x *= x;
  }
  return result;
}

inline __m256d ipow(__m256d x, int n) {
  __m256d result = _mm256_set1_pd(1.0);
  for (; n > 0; n >>= 1) {
    if (n & 1) result = _mm256_mul_pd(result, x);
    x = _mm256_mul_pd(x, x);
  }
  return result;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

inline __m256d norm3(__m256d a, __m256d b, __m256d c) {
  return _mm256_sqrt_pd(_mm256_fmadd_pd(a, a, _mm256_fmadd_pd(b, b, _mm256_mul_pd(c, c))));
}

} // namespace

// u0(r) = (pi/2) sinc(pi r / 2) / sqrt(2 pi); the product of two is folded into one constant.
Sums ball_pair_avx2(const PairBatch& batch, int power, double scale) {
  const double u0_scale = kHalfPi / std::sqrt(2.0 * std::numbers::pi);
  const double prefactor = scale * u0_scale * u0_scale;
  const std::size_t n = batch.size();

  const __m256d half_pi = _mm256_set1_pd(kHalfPi);
  const __m256d pref = _mm256_set1_pd(prefactor);
  __m256d acc = _mm256_setzero_pd();
  __m256d acc_sq = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(batch.x0.data() + i);
    const __m256d x1 = _mm256_loadu_pd(batch.x1.data() + i);
    const __m256d x2 = _mm256_loadu_pd(batch.x2.data() + i);
    const __m256d y0 = _mm256_loadu_pd(batch.y0.data() + i);
    const __m256d y1 = _mm256_loadu_pd(batch.y1.data() + i);
    const __m256d y2 = _mm256_loadu_pd(batch.y2.data() + i);
    const __m256d dist = norm3(_mm256_sub_pd(x0, y0), _mm256_sub_pd(x1, y1), _mm256_sub_pd(x2, y2));
    const __m256d sx = sinc_poly(_mm256_mul_pd(half_pi, norm3(x0, x1, x2)));
    const __m256d sy = sinc_poly(_mm256_mul_pd(half_pi, norm3(y0, y1, y2)));
    const __m256d f = _mm256_mul_pd(_mm256_mul_pd(pref, ipow(dist, power)), _mm256_mul_pd(sx, sy));
    acc = _mm256_add_pd(acc, f);
    acc_sq = _mm256_fmadd_pd(f, f, acc_sq);
  }

  Sums sums{hsum(acc), hsum(acc_sq)};
  for (; i < n; ++i) {
    const double dx = batch.x0[i] - batch.y0[i];
    const double dy = batch.x1[i] - batch.y1[i];
    const double dz = batch.x2[i] - batch.y2[i];
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    const double rx = std::sqrt(batch.x0[i] * batch.x0[i] + batch.x1[i] * batch.x1[i] + batch.x2[i] * batch.x2[i]);
    const double ry = std::sqrt(batch.y0[i] * batch.y0[i] + batch.y1[i] * batch.y1[i] + batch.y2[i] * batch.y2[i]);
    const double f = prefactor * ipow(dist, power) * sinc_poly(kHalfPi * rx) * sinc_poly(kHalfPi * ry);
    sums.sum += f;
    sums.sum_sq += f * f;
  }
  return sums;
}

// sin(pi a / 2) sin(pi b / 2) = (pi/2)^2 a b sinc(pi a / 2) sinc(pi b / 2).
double radial_pair_avx2(std::span<const double> a, std::span<const double> b, std::span<const double> w, int power) {
  const std::size_t n = a.size();
  const __m256d half_pi = _mm256_set1_pd(kHalfPi);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a.data() + i);
    const __m256d vb = _mm256_loadu_pd(b.data() + i);
    const __m256d vw = _mm256_loadu_pd(w.data() + i);
    const __m256d gap = _mm256_andnot_pd(sign_mask, _mm256_sub_pd(va, vb));
    const __m256d kernel = _mm256_sub_pd(ipow(_mm256_add_pd(va, vb), power), ipow(gap, power));
    const __m256d ta = _mm256_mul_pd(half_pi, va);
    const __m256d tb = _mm256_mul_pd(half_pi, vb);
    const __m256d sa = _mm256_mul_pd(ta, sinc_poly(ta));
    const __m256d sb = _mm256_mul_pd(tb, sinc_poly(tb));
    acc = _mm256_fmadd_pd(_mm256_mul_pd(vw, kernel), _mm256_mul_pd(sa, sb), acc);
  }

  double sum = hsum(acc);
  for (; i < n; ++i) {
    const double kernel = ipow(a[i] + b[i], power) - ipow(std::abs(a[i] - b[i]), power);
    const double ta = kHalfPi * a[i];
    const double tb = kHalfPi * b[i];
    sum += w[i] * kernel * (ta * sinc_poly(ta)) * (tb * sinc_poly(tb));
  }
  return sum;
}

} // namespace nanores::kernels::detail
