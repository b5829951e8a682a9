#pragma once

// Complex BLAS-1/2 kernels on the propagator's hot path.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant. The variant is chosen once at runtime from the CPU's feature bits;
// PSEUDOINV_ISA=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace pseudoinv::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// True when the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Variant used by the dispatching entry points below.
Isa active_isa();

/// y = A x for a column-major n x n matrix A (leading dimension n).
void cgemv(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y);
/// y += alpha x
void caxpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

/// Explicit-variant entry points, used by equivalence tests and benchmarks.
void cgemv(Isa isa, std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> y);
void caxpy(Isa isa, cplx alpha, std::span<const cplx> x, std::span<cplx> y);

namespace scalar {
void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace scalar

namespace avx2 {
void cgemv(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void caxpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
}  // namespace avx2

}  // namespace pseudoinv::kernels
