#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gkdv/evolution.hpp"
#include "gkdv/imethod.hpp"
#include "gkdv/initial_data.hpp"

using namespace gkdv;
using std::numbers::pi;

TEST_CASE("multiplier values") {
  const IMethodParams p{8.0, 0.6};
  CHECK(multiplier_m(0.0, p) == 1.0);
  CHECK(multiplier_m(8.0, p) == 1.0);
  CHECK(multiplier_m(-5.0, p) == 1.0);
  CHECK(multiplier_m(32.0, p) == doctest::Approx(std::pow(0.25, 0.4)).epsilon(1e-15));
  CHECK(multiplier_m(-32.0, p) == multiplier_m(32.0, p));
  CHECK(multiplier_m(16.0, p) == doctest::Approx(std::pow(0.5, 0.4)).epsilon(1e-15));
  CHECK_THROWS_AS(IMethodParams({0.5, 0.5}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IMethodParams({4.0, 1.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IMethodParams({4.0, 0.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(IMethodParams({20.0, 0.5}).validate_for(Grid(64, 2.0 * pi)), std::invalid_argument);
}

TEST_CASE("multiplier is C1, monotone and in (0, 1]") {
  for (double s : {0.1, 0.5, 0.9}) {
    const IMethodParams p{4.0, s};
    double prev = 1.0;
    for (double xi = 0.0; xi <= 40.0; xi += 1e-3) {
      const double m = multiplier_m(xi, p);
      CHECK(m > 0.0);
      CHECK(m <= 1.0);
      CHECK(m <= prev + 1e-15);
      prev = m;
    }
    for (double edge : {4.0, 8.0}) {
      // one-sided analytic slopes coincide
      const double left = multiplier_m_slope(edge * (1.0 - 1e-12), p);
      const double right = multiplier_m_slope(edge * (1.0 + 1e-12), p);
      CHECK(std::abs(left - right) <= 1e-8);
      // one-sided difference quotients agree to O(h)
      const double h = 1e-6;
      const double dl = (multiplier_m(edge, p) - multiplier_m(edge - h, p)) / h;
      const double dr = (multiplier_m(edge + h, p) - multiplier_m(edge, p)) / h;
      CHECK(std::abs(dl - dr) <= 1e-5);
      CHECK(std::abs(multiplier_m(edge - 1e-12, p) - multiplier_m(edge + 1e-12, p)) <= 1e-10);
    }
    // analytic slope matches central differences inside the band
    for (double xi : {4.5, 5.5, 6.7, 7.9, 12.0}) {
      const double h = 1e-6;
      const double fd = (multiplier_m(xi + h, p) - multiplier_m(xi - h, p)) / (2 * h);
      CHECK(multiplier_m_slope(xi, p) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("multiplier sandwich on the lattice") {
  const Grid g(1024, 8.0 * pi);
  for (double N : {1.0, 4.0, 16.0}) {
    for (double s : {0.3, 0.9}) {
      const IMethodParams p{N, s};
      const double c = std::pow((1.0 + 2.0 * N) / N, 1.0 - s);
      for (double xi : g.frequencies()) {
        const double br = 1.0 + std::abs(xi);
        const double m = multiplier_m(xi, p);
        CHECK(std::pow(br, s) <= m * br * (1.0 + 1e-14));
        CHECK(m * br <= c * std::pow(N, 1.0 - s) * std::pow(br, s) * (1.0 + 1e-14));
      }
    }
  }
}

TEST_CASE("I is the identity on resolved modes when N >= xi_max") {
  const Grid g(128, 10.0);
  const Field f = random_band_limited(g, 1, 60, 0.5, 1.0);
  const IMethodParams p{g.xi_max(), 0.5};
  const Field iu = apply_I(f, p);
  for (int m = 0; m < g.n(); ++m) CHECK(iu[m] == doctest::Approx(f[m]).epsilon(1e-13).scale(1.0));
  const Field near = apply_I(f, {1.0, 1.0 - 1e-13});
  for (int m = 0; m < g.n(); ++m) CHECK(near[m] == doctest::Approx(f[m]).epsilon(1e-10).scale(1.0));
}

TEST_CASE("modified energy: physical and spectral forms agree") {
  const Grid g(256, 20.0);
  const ModelParams mp{6, -1};
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Field f = random_band_limited(g, seed, 32, 0.7, 1.0 + 0.01 * seed);
    const auto e = modified_energy(f, {2.0 + seed % 5, 0.3 + 0.005 * seed}, mp);
    worst = std::max(worst, std::abs(e.physical - e.spectral) / std::max(std::abs(e.spectral), 1e-300));
  }
  CHECK(worst <= 1e-10);
  const Field f = random_band_limited(g, 7, 32, 0.7, 1.0);
  const auto e = modified_energy(f, {g.xi_max(), 0.5}, mp);
  CHECK(e.physical == doctest::Approx(energy(f, mp)).epsilon(1e-12));
  CHECK(e.spectral == doctest::Approx(energy(f, mp)).epsilon(1e-12));
  const auto z = modified_energy(Field::zero(g), {4.0, 0.5}, mp);
  CHECK(z.physical == 0.0);
  CHECK(z.spectral == 0.0);
}

TEST_CASE("increment with the identity multiplier is the energy drift") {
  const Grid g(256, 8.0 * pi);
  const ModelParams mp{6, -1};
  const Field u = sample(SechProfile{1.0, 0.5, 0.0}, g);
  SweepOptions o;
  o.record_every = 5;
  const auto inc = measure_increment(u, mp, {g.xi_max(), 0.9}, 0.2, o);
  SimulateOptions so;
  so.t_final = 0.2;
  so.record_every = 5;
  const auto run = simulate(u, mp, so);
  double drift = 0.0;
  for (double e : run.series.energy) drift = std::max(drift, std::abs(e - run.series.energy.front()));
  CHECK(std::abs(inc.sup_increment - drift) <= 1e-6 * std::abs(run.series.energy.front()));
  CHECK(inc.resolved);
}

TEST_CASE("small almost-conservation sweep") {
  const Grid g(256, 8.0 * pi);  // xi = j/4, xi_max = 32
  const ModelParams mp{6, -1};
  const Field u = sample(SechProfile{1.0, 0.3, 0.0}, g);
  const std::vector<double> ns = {4.0, 6.0, 8.0};
  SweepOptions o;
  o.record_every = 5;
  o.dt_override = 1e-4;
  const auto serial = almost_conservation_sweep(u, mp, {2.0, 0.9}, ns, 0.02, o);
  REQUIRE(serial.points.size() == 3);
  CHECK(serial.slope < 0.0);
  CHECK(serial.monotone);
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(serial.points[i].N == ns[i]);

  o.workers = 3;
  const auto parallel = almost_conservation_sweep(u, mp, {2.0, 0.9}, ns, 0.02, o);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(parallel.points[i].sup_increment == serial.points[i].sup_increment);
    CHECK(parallel.points[i].final_e1 == serial.points[i].final_e1);
  }

  CHECK_THROWS_AS(almost_conservation_sweep(u, {6, 1}, {2.0, 0.9}, ns, 0.02, o), std::invalid_argument);
  CHECK_THROWS_AS(almost_conservation_sweep(u, {5, -1}, {2.0, 0.9}, ns, 0.02, o), std::invalid_argument);
  const std::vector<double> too_high = {16.0};
  CHECK_THROWS_AS(almost_conservation_sweep(u, mp, {2.0, 0.9}, too_high, 0.02, o), std::invalid_argument);
}

TEST_CASE("resonance witness") {
  const IMethodParams p{16.0, 0.9};
  const auto w = resonance_search(6, p, 50'000'000);
  REQUIRE(w);
  CHECK(w->xi.size() == 8);
  long double sum = 0.0L, cubes = 0.0L, weighted = 0.0L, weighted_abs = 0.0L;
  for (double x : w->xi) {
    const long double m = multiplier_m(x, p);
    sum += x;
    cubes += static_cast<long double>(x) * x * x;
    weighted += m * m * x * x * x;
    weighted_abs += m * m * std::fabs(static_cast<long double>(x) * x * x);
  }
  CHECK(std::fabs(sum) <= 1e-10L);
  CHECK(std::fabs(cubes) <= 1e-10L);
  CHECK(static_cast<double>(std::fabs(weighted) / weighted_abs) > kResonanceThreshold);
  CHECK(w->normalized == doctest::Approx(static_cast<double>(std::fabs(weighted) / weighted_abs)));

  // m = 1 on every candidate: no witness can exist.
  CHECK_FALSE(resonance_search(6, {1000.0, 0.9}, 2'000'000));
  CHECK_FALSE(resonance_search(6, p, 0));
  CHECK(resonance_search(5, {4.0, 0.5}, 10'000'000));
}

TEST_CASE("iteration schedule") {
  const auto r = iteration_schedule(6, 0.8, 100.0);
  CHECK(r.lambda_exponent == doctest::Approx(6.0 / 19.0).epsilon(1e-14));
  CHECK(r.n_exponent == doctest::Approx(2.0 - 0.01 - 18.0 / 19.0).epsilon(1e-14));
  CHECK(std::pow(r.N, r.n_exponent) > 100.0);
  CHECK(std::pow(r.N / 2.0, r.n_exponent) <= 100.0);
  CHECK(r.lambda == doctest::Approx(std::pow(r.N, 6.0 / 19.0)));
  CHECK(r.M == std::ceil(std::pow(r.N, 1.99)));
  CHECK(r.chunk_time == 1.0);
  CHECK_FALSE(r.impractical);

  const auto near_one = iteration_schedule(6, 1.0 - 1e-9, 100.0);
  CHECK(near_one.lambda_exponent == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(near_one.n_exponent == doctest::Approx(1.99).epsilon(1e-8));

  const auto edge = iteration_schedule(6, 0.67, 10.0);
  CHECK(edge.n_exponent > 0.0);
  CHECK(edge.n_exponent < 0.05);
  CHECK(edge.impractical);

  CHECK_THROWS_AS(iteration_schedule(6, 2.0 / 3.0, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(iteration_schedule(7, 0.9, 10.0), std::invalid_argument);
  CHECK_THROWS_AS(iteration_schedule(6, 0.9, 0.0), std::invalid_argument);
  // just above the threshold the N exponent turns negative
  CHECK_THROWS_AS(iteration_schedule(6, 0.6667, 10.0), std::invalid_argument);
}

TEST_CASE("least-squares slope and growth check") {
  const std::vector<double> x = {0.0, 1.0, 2.0, 3.0};
  const std::vector<double> y = {1.0, 3.5, 6.0, 8.5};
  CHECK(least_squares_slope(x, y) == doctest::Approx(2.5));
  CHECK_THROWS_AS(least_squares_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(least_squares_slope(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}), std::invalid_argument);

  InvariantSeries flat;
  flat.s_track = 0.8;
  InvariantSeries power = flat;
  for (int i = 0; i < 20; ++i) {
    const double t = 2.5 * i;
    flat.times.push_back(t);
    flat.hs_norm.push_back(1.3);
    power.times.push_back(t);
    power.hs_norm.push_back(std::sqrt(2.0 * std::pow(1.0 + t, 0.3)));
  }
  const auto a = growth_bound_check(flat, 6, 0.8);
  CHECK(a.theoretical_exponent == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(a.empirical_slope) < 1e-12);
  CHECK(a.fitted_constant == doctest::Approx(1.69));
  const auto b = growth_bound_check(power, 6, 0.8);
  CHECK(b.empirical_slope == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(b.fitted_constant == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(growth_bound_check(flat, 6, 0.9), std::invalid_argument);
}
