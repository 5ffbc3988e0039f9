#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gkdv/kernels.hpp"

using namespace gkdv::kernels;

namespace {

std::vector<double> reals(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

std::vector<cplx> complexes(std::size_t n, unsigned seed) {
  const auto re = reals(n, seed);
  const auto im = reals(n, seed + 1000);
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {re[i], im[i]};
  return v;
}

// Sizes around the vector width to cover the remainder loops.
const std::size_t kSizes[] = {0, 1, 3, 4, 5, 7, 8, 9, 31, 64, 1001};

}  // namespace

TEST_CASE("scalar kernels match naive loops") {
  const auto& t = scalar_table();
  for (std::size_t n : kSizes) {
    const auto x = reals(n, 1);
    for (int p : {0, 1, 2, 5, 7, 13}) {
      std::vector<double> out(n);
      t.power(x.data(), p, out.data(), n);
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(out[i] == doctest::Approx(std::pow(x[i], p)).epsilon(1e-14));
        sum += std::pow(x[i], p);
      }
      CHECK(t.sum_power(x.data(), p, n) == doctest::Approx(sum).epsilon(1e-13));
    }
  }
}

TEST_CASE("scalar complex kernels match std::complex arithmetic") {
  const auto& t = scalar_table();
  for (std::size_t n : kSizes) {
    const auto a = complexes(n, 2), x = complexes(n, 3), b = complexes(n, 4), y = complexes(n, 5);
    std::vector<cplx> out(n);
    t.complex_axpby(a.data(), x.data(), b.data(), y.data(), out.data(), n);
    const auto w = reals(n, 6);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(out[i] - (a[i] * x[i] + b[i] * y[i])) < 1e-14);
      norm += w[i] * std::norm(x[i]);
    }
    CHECK(t.weighted_norm_sq(x.data(), w.data(), n) == doctest::Approx(norm).epsilon(1e-13));
    auto c = x;
    t.scale_complex(c.data(), w.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(c[i] == x[i] * w[i]);
  }
}

TEST_CASE("avx2 elementwise kernels are bit-identical to scalar") {
  const KernelTable* v = avx2_table();
  if (v == nullptr || !cpu_supports(Isa::avx2)) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  const auto& s = scalar_table();
  for (std::size_t n : kSizes) {
    const auto x = reals(n, 7);
    for (int p : {0, 1, 2, 3, 6, 7, 9}) {
      std::vector<double> a(n), b(n);
      s.power(x.data(), p, a.data(), n);
      v->power(x.data(), p, b.data(), n);
      CHECK(a == b);
      CHECK(v->sum_power(x.data(), p, n) == doctest::Approx(s.sum_power(x.data(), p, n)).epsilon(1e-13));
    }
    auto acc1 = reals(n, 8), acc2 = acc1;
    s.multiply_inplace(acc1.data(), x.data(), n);
    v->multiply_inplace(acc2.data(), x.data(), n);
    CHECK(acc1 == acc2);

    const auto a = complexes(n, 9), cx = complexes(n, 10), b = complexes(n, 11), cy = complexes(n, 12);
    std::vector<cplx> o1(n), o2(n);
    s.complex_axpby(a.data(), cx.data(), b.data(), cy.data(), o1.data(), n);
    v->complex_axpby(a.data(), cx.data(), b.data(), cy.data(), o2.data(), n);
    CHECK(o1 == o2);

    auto c1 = cx, c2 = cx;
    s.scale_complex(c1.data(), x.data(), n);
    v->scale_complex(c2.data(), x.data(), n);
    CHECK(c1 == c2);

    const auto w = reals(n, 13);
    CHECK(v->weighted_norm_sq(cx.data(), w.data(), n) ==
          doctest::Approx(s.weighted_norm_sq(cx.data(), w.data(), n)).epsilon(1e-13));
  }
}

TEST_CASE("power kernel handles in-place use and non-finite input") {
  std::vector<double> x = {2.0, -3.0, INFINITY, 0.5};
  power(x, 3, x);
  CHECK(x[0] == 8.0);
  CHECK(x[1] == -27.0);
  CHECK(std::isinf(x[2]));
  CHECK(x[3] == 0.125);
  CHECK(!isa_name(active().isa).empty());
}
