#pragma once

// Data-parallel inner loops shared by the spectral and time-stepping code.
//
// Every kernel has a scalar reference implementation and an AVX2 variant.
// The variant is chosen once at startup from CPUID; GKDV_ISA=scalar in the
// environment forces the reference path. Elementwise kernels are bit-identical
// across variants (same operation order, no FMA contraction); reductions may
// differ in the last bits because the AVX2 path accumulates four lanes.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gkdv::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // out[i] = x[i]^p, p >= 0
  void (*power)(const double* x, int p, double* out, std::size_t n);
  // acc[i] *= x[i]
  void (*multiply_inplace)(double* acc, const double* x, std::size_t n);
  // sum x[i]^p
  double (*sum_power)(const double* x, int p, std::size_t n);
  // c[i] *= m[i] (complex times real)
  void (*scale_complex)(cplx* c, const double* m, std::size_t n);
  // out[i] = a[i] x[i] + b[i] y[i]
  void (*complex_axpby)(const cplx* a, const cplx* x, const cplx* b, const cplx* y, cplx* out,
                        std::size_t n);
  // sum w[i] |c[i]|^2
  double (*weighted_norm_sq)(const cplx* c, const double* w, std::size_t n);
};

const KernelTable& scalar_table();
// Null when the binary was built without AVX2 support for this target.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

// The table selected for this process.
const KernelTable& active();
std::string_view isa_name(Isa isa);

// Span front-ends over active().

void power(std::span<const double> x, int p, std::span<double> out);
void multiply_inplace(std::span<double> acc, std::span<const double> x);
double sum_power(std::span<const double> x, int p);
void scale_complex(std::span<cplx> c, std::span<const double> m);
void complex_axpby(std::span<const cplx> a, std::span<const cplx> x, std::span<const cplx> b,
                   std::span<const cplx> y, std::span<cplx> out);
double weighted_norm_sq(std::span<const cplx> c, std::span<const double> w);

}  // namespace gkdv::kernels
