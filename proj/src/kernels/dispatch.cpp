#include <cassert>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"

namespace gkdv::kernels {

const KernelTable* avx2_table() { return detail::avx2_table_impl(); }

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

const KernelTable& select() {
  if (const char* forced = std::getenv("GKDV_ISA"); forced != nullptr && std::string(forced) == "scalar") {
    return scalar_table();
  }
  if (cpu_supports(Isa::avx2)) return *avx2_table();
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void power(std::span<const double> x, int p, std::span<double> out) {
  assert(out.size() >= x.size() && p >= 0);
  active().power(x.data(), p, out.data(), x.size());
}

void multiply_inplace(std::span<double> acc, std::span<const double> x) {
  assert(acc.size() == x.size());
  active().multiply_inplace(acc.data(), x.data(), acc.size());
}

double sum_power(std::span<const double> x, int p) {
  assert(p >= 0);
  return active().sum_power(x.data(), p, x.size());
}

void scale_complex(std::span<cplx> c, std::span<const double> m) {
  assert(c.size() == m.size());
  active().scale_complex(c.data(), m.data(), c.size());
}

void complex_axpby(std::span<const cplx> a, std::span<const cplx> x, std::span<const cplx> b,
                   std::span<const cplx> y, std::span<cplx> out) {
  assert(a.size() == x.size() && b.size() == y.size() && a.size() == b.size() && out.size() >= a.size());
  active().complex_axpby(a.data(), x.data(), b.data(), y.data(), out.data(), a.size());
}

double weighted_norm_sq(std::span<const cplx> c, std::span<const double> w) {
  assert(c.size() == w.size());
  return active().weighted_norm_sq(c.data(), w.data(), c.size());
}

}  // namespace gkdv::kernels
