#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "gkdv/evolution.hpp"
#include "gkdv/ground_state.hpp"
#include "gkdv/initial_data.hpp"

using namespace gkdv;
using std::numbers::pi;

namespace {

double l2_distance(const Field& a, const Field& b) { return sobolev_norm(a - b, 0.0); }

Field run_fixed(const Field& u0, const ModelParams& p, double dt, int steps) {
  Stepper s(u0.grid(), p, dt);
  auto v = u0.spectrum();
  v.back() = 0.0;
  for (int i = 0; i < steps; ++i) s.advance(v);
  return Field::from_spectrum(u0.grid(), v);
}

}  // namespace

TEST_CASE("zero is a fixed point") {
  const Grid g(64, 10.0);
  SimState st{0.0, Field::zero(g), {5, 1}, 0.01, 0};
  const auto next = step(st);
  CHECK(next.field.max_abs() == 0.0);
  CHECK(next.t == doctest::Approx(0.01));
  CHECK(next.step_count == 1);
}

TEST_CASE("linear flow translates sin(x)") {
  const Grid g(32, 2.0 * pi);
  const Field u0 = Field::sample(g, [](double x) { return std::sin(x); });
  Stepper s(g, {5, 1}, 0.05, false);
  SimState st{0.0, u0, {5, 1}, 0.05, 0};
  for (int i = 0; i < 40; ++i) st = s.step(st);
  for (int m = 0; m < g.n(); ++m) CHECK(st.field[m] == doctest::Approx(std::sin(g.x(m) + st.t)).scale(1.0).epsilon(1e-12));
}

TEST_CASE("global error is fourth order in the step") {
  const int k = 5;
  const Grid g(1024, 60.0);
  const ModelParams p{k, 1};
  const Field u0 = soliton(k, 1.0, 0.0, g, 0.0);
  const double T = 0.5;
  const Field ref = run_fixed(u0, p, T / 4096, 4096);
  const double e1 = l2_distance(run_fixed(u0, p, T / 256, 256), ref);
  const double e2 = l2_distance(run_fixed(u0, p, T / 512, 512), ref);
  const double e3 = l2_distance(run_fixed(u0, p, T / 1024, 1024), ref);
  MESSAGE("errors " << e1 << " " << e2 << " " << e3);
  CHECK(std::log2(e1 / e2) >= 3.5);
  CHECK(std::log2(e2 / e3) >= 3.5);
}

TEST_CASE("soliton closed form") {
  const int k = 5;
  const Grid g(1024, 100.0);
  const Field q = soliton(k, 1.0, 0.0, g, 0.0);
  for (int m = 0; m < g.n(); m += 17) CHECK(q[m] == doctest::Approx(ground_state_value(k, g.x(m))).epsilon(1e-15));

  // phi'' - c phi + phi^(k+1) = 0 for the speed-c wave.
  const double c = 2.0;
  const Field phi = soliton(k, c, 3.0, Grid(4096, 100.0), 0.0);
  const Field pxx = derivative(phi, 2);
  double res = 0.0;
  for (int m = 0; m < phi.size(); ++m) res = std::max(res, std::abs(pxx[m] - c * phi[m] + std::pow(phi[m], k + 1)));
  CHECK(res / phi.max_abs() <= 1e-10);

  // Wrapping keeps the profile periodic: after t = 50 the crest sits on x = -50.
  const Field moved = soliton(k, 1.0, 0.0, g, 50.0);
  CHECK(moved[0] == doctest::Approx(ground_state_amplitude(k)).epsilon(1e-14));
  CHECK_THROWS_AS(soliton(k, 1.0, 0.0, Grid(256, 20.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(soliton(k, -1.0, 0.0, g, 0.0), std::invalid_argument);
}

TEST_CASE("short soliton run") {
  const int k = 5;
  const Grid g(1024, 60.0);
  SimulateOptions o;
  o.t_final = 0.5;
  o.record_every = 50;
  const auto r = simulate(soliton(k, 1.0, 0.0, g, 0.0), {k, 1}, o);
  CHECK(r.status == RunStatus::completed);
  CHECK(r.final_state.t == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(l2_distance(r.final_state.field, soliton(k, 1.0, 0.0, g, 0.5)) < 1e-8);
  const double g0 = r.series.grad_l2.front();
  CHECK_FALSE(detect_blowup(r.series, 10.0 * g0 * g0));
}

TEST_CASE("defocusing run conserves mass and energy") {
  const Grid g(256, 8.0 * pi);
  const ModelParams p{6, -1};
  SimulateOptions o;
  o.t_final = 1.0;
  o.record_every = 20;
  const auto r = simulate(sample(GaussianProfile{1.0, 1.5, 0.0}, g), p, o);
  const auto& s = r.series;
  REQUIRE(s.size() >= 2);
  CHECK(r.status == RunStatus::completed);
  CHECK_FALSE(r.under_resolved);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(std::abs(s.mass[i] - s.mass[0]) <= 1e-6 * s.mass[0]);
    CHECK(std::abs(s.energy[i] - s.energy[0]) <= 1e-6 * std::abs(s.energy[0]));
    CHECK(s.grad_l2[i] * s.grad_l2[i] <= 2.0 * s.energy[0] + 1e-9);
    if (i > 0) CHECK(s.times[i] > s.times[i - 1]);
  }
  CHECK(s.times.back() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.mass.size() == s.size());
  CHECK(s.hs_norm.size() == s.size());
  CHECK(s.tail_h1.size() == s.size());
}

TEST_CASE("simulate validates its options") {
  const Grid g(64, 10.0);
  const Field u = sample(GaussianProfile{}, g);
  SimulateOptions o;
  o.t_final = 0.0;
  CHECK_THROWS_AS(simulate(u, {5, 1}, o), std::invalid_argument);
  o.t_final = 1.0;
  o.record_every = 0;
  CHECK_THROWS_AS(simulate(u, {5, 1}, o), std::invalid_argument);
  o.record_every = 1;
  o.dt_override = -1.0;
  CHECK_THROWS_AS(simulate(u, {5, 1}, o), std::invalid_argument);
}

TEST_CASE("automatic step rule") {
  const Grid g(256, 20.0);
  const Field small = sample(GaussianProfile{1e-3, 1.0, 0.0}, g);
  CHECK(automatic_dt(small, {5, 1}, 1.0, 1.0, 0.05) == 0.05);
  const Field big = sample(GaussianProfile{2.0, 1.0, 0.0}, g);
  const double dt = automatic_dt(big, {5, 1}, 1.0, 1.0, 0.05);
  CHECK(dt <= 0.5 / (std::pow(big.max_abs(), 5) * g.xi_max()));
  CHECK(dt <= local_time_heuristic(big, 1.0, 5) / 1000.0);
}

TEST_CASE("blow-up cap stops the run with a partial series") {
  const Grid g(128, 20.0);
  const Field u = sample(GaussianProfile{1.0, 1.0, 0.0}, g);
  SimulateOptions o;
  o.t_final = 1.0;
  o.record_every = 5;
  o.dt_override = 0.001;
  o.blowup_cap = 1e-3;
  const auto r = simulate(u, {5, 1}, o);
  CHECK(r.status == RunStatus::blowup);
  REQUIRE(r.blowup_time);
  CHECK(*r.blowup_time < 1.0);
  CHECK(r.series.times.back() == doctest::Approx(*r.blowup_time));
}

TEST_CASE("non-finite steps are reported with the last valid state") {
  const Grid g(64, 10.0);
  const ModelParams p{8, 1};
  const Field u = sample(GaussianProfile{40.0, 1.0, 0.0}, g);
  SimState st{0.0, u, p, 0.5, 0};
  Stepper s(g, p, 0.5);
  bool thrown = false;
  try {
    for (int i = 0; i < 10; ++i) st = s.step(st);
  } catch (const IntegrationFailure& e) {
    thrown = true;
    CHECK(e.last_valid().field.finite());
  }
  CHECK(thrown);

  SimulateOptions o;
  o.t_final = 5.0;
  o.dt_override = 0.5;
  o.record_every = 1;
  o.blowup_cap = 1e300;
  const auto r = simulate(u, p, o);
  CHECK(r.status == RunStatus::integration_failure);
  CHECK(r.final_state.field.finite());
  CHECK(r.final_state.t < 5.0);
}

TEST_CASE("detect_blowup on a synthetic series") {
  InvariantSeries s;
  for (int i = 0; i < 8; ++i) {
    s.times.push_back(i);
    s.grad_l2.push_back(std::sqrt(std::pow(2.0, i)));
    s.tail_h1.push_back(0.0);
  }
  const auto t = detect_blowup(s, 20.0);
  REQUIRE(t);
  CHECK(*t == 5.0);
  CHECK_FALSE(detect_blowup(s, 1e6));
  s.tail_h1[2] = 0.5;
  CHECK(*detect_blowup(s, 1e6) == 2.0);
  CHECK_THROWS_AS(detect_blowup(s, 0.0), std::invalid_argument);
}

TEST_CASE("checkpoint round trip") {
  const Grid g(64, 12.5);
  const Field u = random_band_limited(g, 3, 20, 1.0, 1.0);
  const SimState st{1.25, u, {6, -1}, 0.001, 1250};
  const auto path = std::filesystem::temp_directory_path() / "gkdv_checkpoint_test.chk";
  write_checkpoint(path.string(), st);
  const auto back = read_checkpoint(path.string());
  CHECK(back.t == st.t);
  CHECK(back.dt == st.dt);
  CHECK(back.step_count == 1250);
  CHECK(back.params.k == 6);
  CHECK(back.params.mu == -1);
  CHECK(back.field.grid() == g);
  for (int m = 0; m < g.n(); ++m) CHECK(back.field[m] == doctest::Approx(u[m]).epsilon(1e-15));
  std::filesystem::remove(path);
  CHECK_THROWS(read_checkpoint(path.string()));
}
