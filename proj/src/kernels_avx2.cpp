#include <immintrin.h>

#include "pseudoinv/kernels.hpp"

namespace pseudoinv::kernels::avx2 {

namespace {

// Two complex doubles per register: [r0 i0 r1 i1].
// Returns v * s where s = (sr + i si) is broadcast as sr_v = [sr sr sr sr], si_v = [si si si si].
inline __m256d cmul_broadcast(__m256d v, __m256d sr_v, __m256d si_v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);  // [i0 r0 i1 r1]
  // even lanes: r*sr - i*si, odd lanes: i*sr + r*si
  return _mm256_fmaddsub_pd(v, sr_v, _mm256_mul_pd(swapped, si_v));
}

}  // namespace

void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  auto* yd = reinterpret_cast<double*>(y);
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) y[i] = cplx{};

  for (std::size_t j = 0; j < n; ++j) {
    const __m256d xr = _mm256_set1_pd(x[j].real());
    const __m256d xi = _mm256_set1_pd(x[j].imag());
    const auto* col = reinterpret_cast<const double*>(a + j * n);
    for (std::size_t p = 0; p < pairs; ++p) {
      const __m256d av = _mm256_loadu_pd(col + 4 * p);
      const __m256d acc = _mm256_loadu_pd(yd + 4 * p);
      _mm256_storeu_pd(yd + 4 * p, _mm256_add_pd(acc, cmul_broadcast(av, xr, xi)));
    }
    if (n % 2 != 0) {
      const cplx av = a[j * n + n - 1];
      y[n - 1] = cplx{y[n - 1].real() + (av.real() * x[j].real() - av.imag() * x[j].imag()),
                      y[n - 1].imag() + (av.real() * x[j].imag() + av.imag() * x[j].real())};
    }
  }
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d pr = _mm256_set1_pd(alpha.real());
  const __m256d pi = _mm256_set1_pd(alpha.imag());
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const std::size_t pairs = n / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
    const __m256d yv = _mm256_loadu_pd(yd + 4 * p);
    _mm256_storeu_pd(yd + 4 * p, _mm256_add_pd(yv, cmul_broadcast(xv, pr, pi)));
  }
  if (n % 2 != 0) {
    const cplx xv = x[n - 1];
    y[n - 1] = cplx{y[n - 1].real() + (alpha.real() * xv.real() - alpha.imag() * xv.imag()),
                    y[n - 1].imag() + (alpha.real() * xv.imag() + alpha.imag() * xv.real())};
  }
}

}  // namespace pseudoinv::kernels::avx2
