#include "pseudoinv/kernels.hpp"

namespace pseudoinv::kernels::scalar {

void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = cplx{};
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[j].real();
    const double xi = x[j].imag();
    const cplx* col = a + j * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double ar = col[i].real();
      const double ai = col[i].imag();
      y[i] = cplx{y[i].real() + (ar * xr - ai * xi), y[i].imag() + (ar * xi + ai * xr)};
    }
  }
}

void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double pr = alpha.real();
  const double pi = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx{y[i].real() + (pr * xr - pi * xi), y[i].imag() + (pr * xi + pi * xr)};
  }
}

}  // namespace pseudoinv::kernels::scalar
