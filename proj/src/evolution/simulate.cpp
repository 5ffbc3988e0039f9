#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkdv/evolution.hpp"

namespace gkdv {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::completed:
      return "completed";
    case RunStatus::blowup:
      return "blowup";
    case RunStatus::integration_failure:
      return "integration-failure";
  }
  return "unknown";
}

double automatic_dt(const Field& u, const ModelParams& params, double s_track, double safety, double dt_max) {
  const double inf = std::numeric_limits<double>::infinity();
  const double hs = sobolev_norm(u, s_track);
  const double local = hs > 0.0 ? local_time_heuristic(hs, s_track, params.k) : inf;
  const double peak = u.max_abs();
  const double cfl = peak > 0.0 ? 0.5 / (std::pow(peak, params.k) * u.grid().xi_max()) : inf;
  return std::min({safety * local / 1000.0, cfl, dt_max});
}

namespace {

void record(InvariantSeries& series, double t, const Field& u, const ModelParams& params) {
  series.times.push_back(t);
  series.mass.push_back(mass(u));
  series.energy.push_back(energy(u, params));
  series.hs_norm.push_back(sobolev_norm(u, series.s_track));
  series.grad_l2.push_back(sobolev_norm(u, 1.0, SobolevKind::homogeneous));
  series.tail_h1.push_back(spectral_tail_fraction(u, 1));
  series.tail_l2.push_back(spectral_tail_fraction(u, 0));
  for (auto& track : series.modified_energy) track.values.push_back(modified_energy(u, track.params, params).physical);
}

}  // namespace

SimulationResult simulate(const Field& initial, const ModelParams& params, const SimulateOptions& options) {
  params.validate();
  if (!(options.t_final > 0.0)) throw std::invalid_argument("simulate: t_final must be positive");
  if (options.record_every < 1) throw std::invalid_argument("simulate: record_every must be >= 1");
  if (options.dt_override && !(*options.dt_override > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
  for (const auto& p : options.imethod) p.validate();

  const Grid& grid = initial.grid();
  SimulationResult result{InvariantSeries{}, SimState{0.0, initial, params, 0.0, 0}, RunStatus::completed, std::nullopt, false, 0.0, 0, {}};
  InvariantSeries& series = result.series;
  series.s_track = options.s_track;
  for (const auto& p : options.imethod) series.modified_energy.push_back({p, {}});

  // Products start from a band-limited state with no Nyquist content.
  auto v = initial.spectrum();
  v.back() = 0.0;
  Field u = Field::from_spectrum(grid, v);
  record(series, 0.0, u, params);
  const double g0 = series.grad_l2.front();
  const double cap = options.blowup_cap.value_or(g0 > 0.0 ? 1e6 * g0 * g0 : std::numeric_limits<double>::infinity());

  double t = 0.0;
  long steps = 0;
  bool last_recorded = true;
  std::optional<Stepper> stepper;
  const auto finish = [&](RunStatus status, std::string message) {
    result.status = status;
    result.message = std::move(message);
    result.steps = steps;
    result.max_tail_l2 = *std::max_element(series.tail_l2.begin(), series.tail_l2.end());
    result.under_resolved = result.max_tail_l2 > kUnderResolvedTail;
    result.final_state = SimState{t, u, params, stepper ? stepper->dt() : 0.0, steps};
    return result;
  };

  const double remaining_tolerance = 1e-12 * options.t_final;
  while (options.t_final - t > remaining_tolerance) {
    double chunk = options.t_final - t;
    double dt = 0.0;
    if (options.dt_override) {
      const double count = std::max(1.0, std::round(chunk / *options.dt_override));
      dt = chunk / count;
    } else {
      const double hs = sobolev_norm(u, options.s_track);
      if (hs > 0.0) chunk = std::min(chunk, local_time_heuristic(hs, options.s_track, params.k));
      const double rule = automatic_dt(u, params, options.s_track, options.safety, options.dt_max);
      dt = chunk / std::max(1.0, std::ceil(chunk / rule));
    }
    if (!stepper || std::abs(stepper->dt() - dt) > 1e-14 * dt) stepper.emplace(grid, params, dt, options.nonlinear);

    const double chunk_start = t;
    const auto chunk_steps = static_cast<long>(std::llround(chunk / dt));
    for (long i = 1; i <= chunk_steps; ++i) {
      const auto previous = v;
      stepper->advance(v);
      const bool ok = std::all_of(v.begin(), v.end(), [](const cplx& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
      if (!ok) {
        u = Field::from_spectrum(grid, previous);
        if (!last_recorded) record(series, t, u, params);
        return finish(RunStatus::integration_failure, "non-finite field after t = " + std::to_string(t));
      }
      ++steps;
      t = i == chunk_steps ? chunk_start + chunk : chunk_start + static_cast<double>(i) * dt;
      last_recorded = false;
      if (steps % options.record_every == 0 || options.t_final - t <= remaining_tolerance) {
        u = Field::from_spectrum(grid, v);
        record(series, t, u, params);
        last_recorded = true;
        const double grad_sq = series.grad_l2.back() * series.grad_l2.back();
        if (grad_sq > cap || series.tail_h1.back() > kBlowupTailFraction) {
          result.blowup_time = t;
          return finish(RunStatus::blowup, "blow-up criterion met at t = " + std::to_string(t));
        }
      }
    }
  }
  u = Field::from_spectrum(grid, v);
  if (!last_recorded) record(series, t, u, params);
  return finish(RunStatus::completed, "");
}

std::optional<double> detect_blowup(const InvariantSeries& series, double cap) {
  if (!(cap > 0.0)) throw std::invalid_argument("detect_blowup: cap must be positive");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double grad_sq = series.grad_l2[i] * series.grad_l2[i];
    const bool tail = i < series.tail_h1.size() && series.tail_h1[i] > kBlowupTailFraction;
    if (grad_sq > cap || tail) return series.times[i];
  }
  return std::nullopt;
}

}  // namespace gkdv
