#include "kernels_impl.hpp"

namespace gkdv::kernels {
namespace {

void power_scalar(const double* x, int p, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = 1.0;
    if (p > 0) {
      v = x[i];
      for (int e = 1; e < p; ++e) v = v * x[i];
    }
    out[i] = v;
  }
}

void multiply_inplace_scalar(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = acc[i] * x[i];
}

double sum_power_scalar(const double* x, int p, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = 1.0;
    if (p > 0) {
      v = x[i];
      for (int e = 1; e < p; ++e) v = v * x[i];
    }
    sum += v;
  }
  return sum;
}

void scale_complex_scalar(cplx* c, const double* m, std::size_t n) {
  auto* raw = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < n; ++i) {
    raw[2 * i] = raw[2 * i] * m[i];
    raw[2 * i + 1] = raw[2 * i + 1] * m[i];
  }
}

void complex_axpby_scalar(const cplx* a, const cplx* x, const cplx* b, const cplx* y, cplx* out,
                          std::size_t n) {
  // Written out by hand: operator* on std::complex may route through __muldc3.
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double xr = x[i].real(), xi = x[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    const double re = (ar * xr - ai * xi) + (br * yr - bi * yi);
    const double im = (ar * xi + ai * xr) + (br * yi + bi * yr);
    out[i] = cplx(re, im);
  }
}

double weighted_norm_sq_scalar(const cplx* c, const double* w, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double re = c[i].real(), im = c[i].imag();
    sum += w[i] * (re * re + im * im);
  }
  return sum;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar,           power_scalar,         multiply_inplace_scalar,
                                 sum_power_scalar,      scale_complex_scalar, complex_axpby_scalar,
                                 weighted_norm_sq_scalar};
  return table;
}

}  // namespace gkdv::kernels
