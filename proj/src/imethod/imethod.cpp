#include "gkdv/imethod.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "gkdv/evolution.hpp"

namespace gkdv {

void IMethodParams::validate() const {
  if (!(N >= 1.0) || !std::isfinite(N)) throw std::invalid_argument("I-method cutoff N must be >= 1 (got " + std::to_string(N) + ")");
  if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("I-method regularity s must lie in (0, 1) (got " + std::to_string(s) + ")");
}

void IMethodParams::validate_for(const Grid& grid) const {
  validate();
  if (2.0 * N > grid.xi_max()) {
    throw std::invalid_argument("I-method band [N, 2N] leaves the grid: 2N = " + std::to_string(2.0 * N) +
                                " > xi_max = " + std::to_string(grid.xi_max()));
  }
}

double multiplier_m(double xi, const IMethodParams& p) {
  const double a = std::abs(xi);
  if (a <= p.N) return 1.0;
  const double r = a / p.N;
  if (a >= 2.0 * p.N) return std::pow(r, -(1.0 - p.s));
  const double t = std::log2(r);
  const double h = t * t * (3.0 - 2.0 * t);
  return std::exp(-(1.0 - p.s) * h * std::log(r));
}

double multiplier_m_slope(double xi, const IMethodParams& p) {
  const double a = std::abs(xi);
  if (a <= p.N) return 0.0;
  const double m = multiplier_m(a, p);
  if (a >= 2.0 * p.N) return -(1.0 - p.s) * m / a;
  // d log m / da = -(1-s) (h'(t) t + h(t)) / a = -(1-s) t^2 (9 - 8t) / a
  const double t = std::log2(a / p.N);
  return -(1.0 - p.s) * t * t * (9.0 - 8.0 * t) * m / a;
}

Field apply_I(const Field& f, const IMethodParams& p) {
  p.validate();
  return apply_multiplier(f, [&p](double xi) { return multiplier_m(xi, p); });
}

ModifiedEnergy modified_energy(const Field& f, const IMethodParams& p, const ModelParams& mp) {
  mp.validate();
  const Field iu = apply_I(f, p);
  const double potential = mp.mu * integral_of_power(iu, mp.k + 2) / (mp.k + 2);

  const Field dx = derivative(iu);
  double grad = 0.0;
  for (double v : dx.values()) grad += v * v;
  grad *= f.grid().dx();

  // The derivative drops the Nyquist mode; so does the spectral form.
  const double xi_max = f.grid().xi_max();
  const double spectral_grad = spectral_quadratic_form(f, [&](double xi) {
    if (std::abs(xi) >= xi_max) return 0.0;
    const double m = multiplier_m(xi, p);
    return xi * xi * m * m;
  });
  return {0.5 * grad - potential, 0.5 * spectral_grad - potential};
}

IncrementMeasurement measure_increment(const Field& initial, const ModelParams& mp, const IMethodParams& p,
                                       double t_final, const SweepOptions& options) {
  p.validate();
  SimulateOptions so;
  so.t_final = t_final;
  so.record_every = options.record_every;
  so.dt_override = options.dt_override;
  so.imethod = {p};
  const auto run = simulate(initial, mp, so);
  const auto& e1 = run.series.modified_energy.front().values;
  double sup = 0.0;
  for (double v : e1) sup = std::max(sup, std::abs(v - e1.front()));
  return {p.N, sup, e1.front(), e1.back(), run.status == RunStatus::completed && !run.under_resolved};
}

SweepResult almost_conservation_sweep(const Field& initial, const ModelParams& mp, const IMethodParams& base,
                                      std::span<const double> n_list, double t_final, const SweepOptions& options) {
  mp.validate();
  if (mp.mu != -1) throw std::invalid_argument("almost-conservation sweep needs the defocusing equation (mu = -1)");
  if (mp.k % 2 != 0) throw std::invalid_argument("almost-conservation sweep needs even k");
  if (n_list.empty()) throw std::invalid_argument("almost-conservation sweep needs at least one N");
  if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");
  const double limit = initial.grid().xi_max() / 4.0;
  for (double n : n_list) {
    if (n > limit) {
      throw std::invalid_argument("sweep cutoff N = " + std::to_string(n) + " exceeds xi_max/4 = " + std::to_string(limit));
    }
    IMethodParams{n, base.s}.validate();
  }

  std::vector<IncrementMeasurement> points(n_list.size());
  std::vector<std::exception_ptr> errors(n_list.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n_list.size(); i = next++) {
      try {
        points[i] = measure_increment(initial, mp, IMethodParams{n_list[i], base.s}, t_final, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(options.workers), n_list.size());
    for (std::size_t w = 1; w < count; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepResult r{points, 0.0, true, true};
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < points.size(); ++i) {
    lx.push_back(std::log(points[i].N));
    ly.push_back(std::log(std::max(points[i].sup_increment, std::numeric_limits<double>::min())));
    if (i > 0 && points[i].sup_increment > 1.1 * points[i - 1].sup_increment) r.monotone = false;
    if (!points[i].resolved) r.all_resolved = false;
  }
  r.slope = points.size() >= 2 ? least_squares_slope(lx, ly) : 0.0;
  return r;
}

IterationSchedule iteration_schedule(int k, double s, double T) {
  if (k < 5 || k % 2 != 0) throw std::invalid_argument("iteration schedule needs even k >= 6 (got " + std::to_string(k) + ")");
  if (!(T > 0.0)) throw std::invalid_argument("iteration schedule needs T > 0");
  const double threshold = 4.0 * (k - 1) / (5.0 * k);
  if (!(s > threshold) || !(s < 1.0)) {
    throw std::invalid_argument("global bound needs 4(k-1)/(5k) = " + std::to_string(threshold) +
                                " < s < 1 (got s = " + std::to_string(s) + ")");
  }
  IterationSchedule r{};
  r.lambda_exponent = (1.0 - s) / (s - 0.5 + 2.0 / k);
  r.n_exponent = 2.0 - kScheduleEpsilon - 3.0 * r.lambda_exponent;
  if (!(r.n_exponent > 0.0)) {
    throw std::invalid_argument("s = " + std::to_string(s) + " is too close to 4(k-1)/(5k): the N exponent " +
                                std::to_string(r.n_exponent) + " is not positive");
  }
  // smallest j >= 0 with j n_exponent > log2 T
  const double bound = std::log2(T) / r.n_exponent;
  r.log2_N = bound < 0.0 ? 0.0 : std::floor(bound) + 1.0;
  r.N = std::exp2(r.log2_N);
  r.lambda = std::exp2(r.log2_N * r.lambda_exponent);
  r.M = std::ceil(std::exp2(r.log2_N * (2.0 - kScheduleEpsilon)));
  r.chunk_time = 1.0;
  r.impractical = r.log2_N > kImpracticalLog2N;
  return r;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("least_squares_slope: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("least_squares_slope: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares_slope: x values are all equal");
  return sxy / sxx;
}

GrowthReport growth_bound_check(const InvariantSeries& series, int k, double s) {
  if (std::abs(series.s_track - s) > 1e-12) {
    throw std::invalid_argument("growth_bound_check: series tracks H^" + std::to_string(series.s_track) + ", not H^" +
                                std::to_string(s));
  }
  if (series.size() < 2) throw std::invalid_argument("growth_bound_check: need at least two records");
  GrowthReport r{growth_exponent(k, s), 0.0, 0.0};
  std::vector<double> lt, ln;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double t = series.times[i];
    const double norm_sq = series.hs_norm[i] * series.hs_norm[i];
    r.fitted_constant = std::max(r.fitted_constant, norm_sq / std::pow(1.0 + t, r.theoretical_exponent + 0.01));
    lt.push_back(std::log1p(t));
    ln.push_back(std::log(norm_sq));
  }
  r.empirical_slope = least_squares_slope(lt, ln);
  return r;
}

}  // namespace gkdv
