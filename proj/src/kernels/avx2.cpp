#include "kernels_impl.hpp"

#if defined(GKDV_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace gkdv::kernels::detail {

#if defined(GKDV_HAVE_AVX2)
namespace {

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(pair) + _mm_cvtsd_f64(_mm_unpackhi_pd(pair, pair));
}

inline double power_one(double x, int p) {
  if (p == 0) return 1.0;
  double v = x;
  for (int e = 1; e < p; ++e) v = v * x;
  return v;
}

inline __m256d power_vec(__m256d x, int p) {
  if (p == 0) return _mm256_set1_pd(1.0);
  __m256d v = x;
  for (int e = 1; e < p; ++e) v = _mm256_mul_pd(v, x);
  return v;
}

void power_avx2(const double* x, int p, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, power_vec(_mm256_loadu_pd(x + i), p));
  for (; i < n; ++i) out[i] = power_one(x[i], p);
}

void multiply_inplace_avx2(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(acc + i, _mm256_mul_pd(_mm256_loadu_pd(acc + i), _mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) acc[i] = acc[i] * x[i];
}

double sum_power_avx2(const double* x, int p, std::size_t n) {
  __m256d sum = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) sum = _mm256_add_pd(sum, power_vec(_mm256_loadu_pd(x + i), p));
  double total = horizontal_sum(sum);
  for (; i < n; ++i) total += power_one(x[i], p);
  return total;
}

// [m0, m0, m1, m1]
inline __m256d duplicate_pair(const double* m) {
  const __m128d mm = _mm_loadu_pd(m);
  return _mm256_set_m128d(_mm_unpackhi_pd(mm, mm), _mm_unpacklo_pd(mm, mm));
}

void scale_complex_avx2(cplx* c, const double* m, std::size_t n) {
  auto* raw = reinterpret_cast<double*>(c);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(raw + 2 * i);
    _mm256_storeu_pd(raw + 2 * i, _mm256_mul_pd(v, duplicate_pair(m + i)));
  }
  for (; i < n; ++i) {
    raw[2 * i] = raw[2 * i] * m[i];
    raw[2 * i + 1] = raw[2 * i + 1] * m[i];
  }
}

// (ar xr - ai xi, ar xi + ai xr) for two packed complex numbers
inline __m256d complex_mul(__m256d a, __m256d x) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d x_swap = _mm256_permute_pd(x, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a_re, x), _mm256_mul_pd(a_im, x_swap));
}

void complex_axpby_avx2(const cplx* a, const cplx* x, const cplx* b, const cplx* y, cplx* out,
                        std::size_t n) {
  const auto* ra = reinterpret_cast<const double*>(a);
  const auto* rx = reinterpret_cast<const double*>(x);
  const auto* rb = reinterpret_cast<const double*>(b);
  const auto* ry = reinterpret_cast<const double*>(y);
  auto* ro = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d ax = complex_mul(_mm256_loadu_pd(ra + 2 * i), _mm256_loadu_pd(rx + 2 * i));
    const __m256d by = complex_mul(_mm256_loadu_pd(rb + 2 * i), _mm256_loadu_pd(ry + 2 * i));
    _mm256_storeu_pd(ro + 2 * i, _mm256_add_pd(ax, by));
  }
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double xr = x[i].real(), xi = x[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    out[i] = cplx((ar * xr - ai * xi) + (br * yr - bi * yi), (ar * xi + ai * xr) + (br * yi + bi * yr));
  }
}

double weighted_norm_sq_avx2(const cplx* c, const double* w, std::size_t n) {
  const auto* raw = reinterpret_cast<const double*>(c);
  __m256d sum = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(raw + 2 * i);
    sum = _mm256_add_pd(sum, _mm256_mul_pd(duplicate_pair(w + i), _mm256_mul_pd(v, v)));
  }
  double total = horizontal_sum(sum);
  for (; i < n; ++i) {
    const double re = c[i].real(), im = c[i].imag();
    total += w[i] * (re * re + im * im);
  }
  return total;
}

}  // namespace

const KernelTable* avx2_table_impl() {
  static const KernelTable table{Isa::avx2,           power_avx2,         multiply_inplace_avx2,
                                 sum_power_avx2,      scale_complex_avx2, complex_axpby_avx2,
                                 weighted_norm_sq_avx2};
  return &table;
}

#else

const KernelTable* avx2_table_impl() { return nullptr; }

#endif

}  // namespace gkdv::kernels::detail
