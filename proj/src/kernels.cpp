#include "pseudoinv/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pseudoinv::kernels {

#ifndef PSEUDOINV_HAVE_AVX2
namespace avx2 {
void cgemv(const cplx*, const cplx*, cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernels not compiled for this target");
}
void caxpy(cplx, const cplx*, cplx*, std::size_t) {
  throw std::logic_error("AVX2 kernels not compiled for this target");
}
}  // namespace avx2
#endif

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(PSEUDOINV_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  if (const char* forced = std::getenv("PSEUDOINV_ISA")) {
    if (std::string(forced) == "scalar") return Isa::scalar;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

void check_sizes(std::size_t a, std::size_t x, std::size_t y) {
  if (a != x * x || y != x) throw std::invalid_argument("cgemv: inconsistent operand sizes");
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

void cgemv(Isa isa, std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y) {
  check_sizes(a.size(), x.size(), y.size());
  if (isa == Isa::avx2) {
    avx2::cgemv(a.data(), x.data(), y.data(), x.size());
  } else {
    scalar::cgemv(a.data(), x.data(), y.data(), x.size());
  }
}

void caxpy(Isa isa, cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  if (x.size() != y.size()) throw std::invalid_argument("caxpy: size mismatch");
  if (isa == Isa::avx2) {
    avx2::caxpy(alpha, x.data(), y.data(), x.size());
  } else {
    scalar::caxpy(alpha, x.data(), y.data(), x.size());
  }
}

void cgemv(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y) {
  cgemv(active_isa(), a, x, y);
}

void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  caxpy(active_isa(), alpha, x, y);
}

}  // namespace pseudoinv::kernels
