#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gkdv/initial_data.hpp"
#include "gkdv/spectral.hpp"

using namespace gkdv;
using std::numbers::pi;

namespace {

// O(n^2) transform with the documented convention.
std::vector<cplx> direct_dft(const Field& f) {
  const int n = f.size();
  std::vector<cplx> c(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    cplx acc = 0.0;
    for (int m = 0; m < n; ++m) acc += f[m] * std::polar(1.0, -2.0 * pi * j * m / n);
    c[static_cast<std::size_t>(j)] = acc;
  }
  return c;
}

int signed_index(int j, int n) { return j < n / 2 ? j : j - n; }

Field random_field(const Grid& g, std::uint64_t seed, int modes) { return random_band_limited(g, seed, modes, 0.5, 1.0); }

}  // namespace

TEST_CASE("grid validation and lattice") {
  CHECK_THROWS_AS(Grid(7, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(8, 0.0), std::invalid_argument);
  const Grid g(16, 2.0 * pi);
  CHECK(g.half_size() == 9);
  CHECK(g.x(0) == doctest::Approx(-pi));
  CHECK(g.xi_max() == doctest::Approx(8.0));
  const auto xi = g.frequencies();
  REQUIRE(xi.size() == 16);
  CHECK(xi.front() == doctest::Approx(-8.0));
  CHECK(xi.back() == doctest::Approx(7.0));
  CHECK(g.wavenumber(3) == doctest::Approx(3.0));
}

TEST_CASE("forward transform matches the direct DFT") {
  const Grid g(32, 7.0);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> d;
  std::vector<double> v(32);
  for (auto& x : v) x = d(rng);
  const Field f(g, v);
  const auto fast = f.coefficients();
  const auto slow = direct_dft(f);
  for (std::size_t j = 0; j < fast.size(); ++j) CHECK(std::abs(fast[j] - slow[j]) < 1e-12);
  const auto half = f.spectrum();
  REQUIRE(half.size() == 17);
  for (std::size_t j = 0; j < half.size(); ++j) CHECK(std::abs(half[j] - slow[j]) < 1e-12);

  const Field back = Field::from_spectrum(g, half);
  for (int m = 0; m < 32; ++m) CHECK(back[m] == doctest::Approx(f[m]).epsilon(1e-13));
}

TEST_CASE("Parseval with the stated normalisation") {
  const Grid g(64, 5.0);
  const Field f = random_field(g, 1, 20);
  double physical = 0.0;
  for (double v : f.values()) physical += v * v;
  physical *= g.dx();
  double spectral = 0.0;
  for (const auto& c : f.coefficients()) spectral += std::norm(c);
  spectral *= g.length() / (64.0 * 64.0);
  CHECK(spectral == doctest::Approx(physical).epsilon(1e-13));
  CHECK(sobolev_norm(f, 0.0) == doctest::Approx(std::sqrt(physical)).epsilon(1e-13));
}

TEST_CASE("derivatives of trigonometric polynomials") {
  const Grid g(32, 2.0 * pi);
  const Field f = Field::sample(g, [](double x) { return std::sin(3.0 * x) + 0.5 * std::cos(x); });
  const Field d1 = derivative(f, 1);
  const Field d2 = derivative(f, 2);
  const Field d3 = derivative(f, 3);
  const Field frac2 = fractional_derivative(f, 2.0);
  for (int m = 0; m < 32; ++m) {
    const double x = g.x(m);
    CHECK(d1[m] == doctest::Approx(3.0 * std::cos(3.0 * x) - 0.5 * std::sin(x)).epsilon(1e-12));
    CHECK(d2[m] == doctest::Approx(-9.0 * std::sin(3.0 * x) - 0.5 * std::cos(x)).epsilon(1e-12));
    CHECK(d3[m] == doctest::Approx(-27.0 * std::cos(3.0 * x) + 0.5 * std::sin(x)).epsilon(1e-12));
    CHECK(frac2[m] == doctest::Approx(-d2[m]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(fractional_derivative(f, -0.5), std::invalid_argument);
  const Field same = bessel_potential(f, 0.0);
  for (int m = 0; m < 32; ++m) CHECK(same[m] == doctest::Approx(f[m]));
  CHECK(sobolev_norm(f, 1.0, SobolevKind::homogeneous) ==
        doctest::Approx(sobolev_norm(d1, 0.0)).epsilon(1e-13));
}

TEST_CASE("fractional derivative composes additively") {
  const Grid g(64, 9.0);
  const Field f = random_field(g, 2, 25);
  const Field a = fractional_derivative(fractional_derivative(f, 0.3), 0.7);
  const Field b = fractional_derivative(f, 1.0);
  for (int m = 0; m < 64; ++m) CHECK(a[m] == doctest::Approx(b[m]).epsilon(1e-10).scale(1.0));
}

TEST_CASE("translation is a phase shift") {
  const Grid g(32, 2.0 * pi);
  const Field f = Field::sample(g, [](double x) { return std::sin(2.0 * x); });
  const Field t = translate(f, 0.3);
  for (int m = 0; m < 32; ++m) CHECK(t[m] == doctest::Approx(std::sin(2.0 * (g.x(m) - 0.3))).scale(1.0));
}

TEST_CASE("padded sizes") {
  CHECK(padded_size(8, 1) == 8);
  CHECK(padded_size(8, 2) == 12);
  CHECK(padded_size(10, 2) == 16);
  CHECK(padded_size(512, 7) == 2048);
  CHECK_THROWS(padded_size(8, 0));
}

TEST_CASE("dealiased product equals the truncated convolution") {
  const Grid g(24, 3.0);
  const Field f = random_field(g, 3, 11);
  const Field h = random_field(g, 4, 11);
  const Field k = random_field(g, 5, 11);
  const int n = g.n();
  const auto cf = f.coefficients(), ch = h.coefficients(), ck = k.coefficients();
  // Fourier series coefficients a_j = c_j / n, |j| < n/2.
  std::vector<cplx> expected(static_cast<std::size_t>(n), 0.0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int ja = signed_index(a, n), jb = signed_index(b, n), jc = signed_index(c, n);
        if (ja == -n / 2 || jb == -n / 2 || jc == -n / 2) continue;
        const int l = ja + jb + jc;
        if (l <= -n / 2 || l >= n / 2) continue;
        expected[static_cast<std::size_t>((l + n) % n)] +=
            cf[static_cast<std::size_t>(a)] * ch[static_cast<std::size_t>(b)] * ck[static_cast<std::size_t>(c)] /
            (double(n) * n * n);
      }
    }
  }
  const std::vector<Field> factors = {f, h, k};
  const auto got = dealias_product(factors).coefficients();
  for (int j = 0; j < n; ++j) {
    CHECK(std::abs(got[static_cast<std::size_t>(j)] / double(n) - expected[static_cast<std::size_t>(j)]) < 1e-13);
  }
  const auto cube = dealias_power(f, 3).coefficients();
  const std::vector<Field> same = {f, f, f};
  const auto prod = dealias_product(same).coefficients();
  for (int j = 0; j < n; ++j) CHECK(std::abs(cube[static_cast<std::size_t>(j)] - prod[static_cast<std::size_t>(j)]) < 1e-12);

  CHECK_THROWS_AS(dealias_product(std::span<const Field>{}), std::invalid_argument);
  const std::vector<Field> mixed = {f, Field::zero(Grid(32, 3.0))};
  CHECK_THROWS_AS(dealias_product(mixed), std::invalid_argument);
}

TEST_CASE("integral of powers is exact for trigonometric polynomials") {
  const Grid g(16, 2.0 * pi);
  const Field c = Field::sample(g, [](double x) { return std::cos(x); });
  CHECK(integral_of_power(c, 2) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(integral_of_power(c, 4) == doctest::Approx(3.0 * pi / 4.0).epsilon(1e-14));
  CHECK(std::abs(integral_of_power(c, 3)) < 1e-14);
  // cos^8 has modes up to 8 = n/2: aliasing on the bare grid, exact when padded.
  CHECK(integral_of_power(c, 8) == doctest::Approx(35.0 * pi / 64.0).epsilon(1e-14));
  CHECK(abs_power_integral(c, 4) == doctest::Approx(integral_of_power(c, 4)).epsilon(1e-14));
}

TEST_CASE("spectral tail fraction") {
  const Grid g(64, 2.0 * pi);
  CHECK(spectral_tail_fraction(Field::zero(g), 0) == 0.0);
  const Field low = Field::sample(g, [](double x) { return std::sin(3.0 * x); });
  CHECK(spectral_tail_fraction(low, 0) < 1e-28);
  const Field high = Field::sample(g, [](double x) { return std::sin(31.0 * x); });
  CHECK(spectral_tail_fraction(high, 0) == doctest::Approx(1.0));
  const Field both = low + high;
  CHECK(spectral_tail_fraction(both, 0) == doctest::Approx(0.5));
  CHECK(spectral_tail_fraction(both, 1) > 0.5);
}

TEST_CASE("interpolation reproduces the trigonometric interpolant") {
  const Grid g(32, 2.0 * pi);
  const Field f = Field::sample(g, [](double x) { return std::sin(2.0 * x) + std::cos(5.0 * x); });
  std::vector<double> pts = {g.x(3), 0.123, -2.5, 7.0, 100.0};
  const auto v = interpolate(f, pts);
  CHECK(v[0] == doctest::Approx(f[3]));
  for (std::size_t i = 1; i < pts.size(); ++i) {
    CHECK(v[i] == doctest::Approx(std::sin(2.0 * pts[i]) + std::cos(5.0 * pts[i])).epsilon(1e-12));
  }
  CHECK(edge_magnitude(f, 0.0) == 0.0);
  CHECK(edge_magnitude(f, pi) == doctest::Approx(f.max_abs()));
}

TEST_CASE("field arithmetic and multipliers") {
  const Grid g(16, 4.0);
  const Field f = random_field(g, 9, 5);
  const Field twice = f + f;
  const Field zero = f - f;
  for (int m = 0; m < 16; ++m) {
    CHECK(twice[m] == doctest::Approx(f.scaled(2.0)[m]));
    CHECK(zero[m] == 0.0);
  }
  const Field same = apply_multiplier(f, [](double) { return 1.0; });
  for (int m = 0; m < 16; ++m) CHECK(same[m] == doctest::Approx(f[m]).epsilon(1e-13));
  CHECK(f.finite());
  CHECK_THROWS_AS(Field(g, std::vector<double>(15)), std::invalid_argument);
  CHECK_THROWS_AS(f + Field::zero(Grid(16, 5.0)), std::invalid_argument);
}
