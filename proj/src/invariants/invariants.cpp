#include "gkdv/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gkdv/golden_values.hpp"
#include "gkdv/ground_state.hpp"

namespace gkdv {

namespace {

void require_supercritical(int k, const char* what) {
  if (k < 5) {
    throw std::invalid_argument(std::string(what) + " requires k >= 5 (got k = " + std::to_string(k) + ")");
  }
}

// x^p with 0^p = 0; negative bases keep their sign.
double signed_pow(double x, double p) {
  if (x == 0.0) return 0.0;
  return x > 0.0 ? std::pow(x, p) : -std::pow(-x, p);
}

bool strictly_below(double lhs, double rhs) { return lhs < rhs * (1.0 - kThresholdMargin); }

const golden::GroundStateNorms& golden_norms(int k) {
  if (k < 1 || k > golden::kMaxPower) {
    throw std::invalid_argument("no stored ground-state norms for k = " + std::to_string(k));
  }
  return golden::kGroundState[static_cast<std::size_t>(k - 1)];
}

}  // namespace

void ModelParams::validate() const {
  if (k < 1) throw std::invalid_argument("k must be >= 1 (got " + std::to_string(k) + ")");
  if (mu != 1 && mu != -1) throw std::invalid_argument("mu must be +1 or -1 (got " + std::to_string(mu) + ")");
}

std::string to_string(ThresholdReport::Classification c) {
  return c == ThresholdReport::Classification::theorem_applies ? "theorem-applies" : "not-covered";
}

double mass(const Field& f) { return integral_of_power(f, 2); }

double energy(const Field& f, const ModelParams& p) {
  p.validate();
  const double grad = sobolev_norm(f, 1.0, SobolevKind::homogeneous);
  return 0.5 * grad * grad - p.mu * integral_of_power(f, p.k + 2) / (p.k + 2);
}

double critical_index(int k) { return (k - 4.0) / (2.0 * k); }

double gradient_product(double grad_l2, double l2, int k) {
  const double sk = critical_index(k);
  return signed_pow(grad_l2, sk) * signed_pow(l2, 1.0 - sk);
}

ThresholdReport threshold_report(const Field& f, int k) {
  require_supercritical(k, "threshold_report");
  const auto& q = golden_norms(k);
  ThresholdReport r{};
  r.k = k;
  r.s_k = critical_index(k);
  r.mass = mass(f);
  r.energy = energy(f, {k, 1});
  r.lhs1 = signed_pow(r.energy, r.s_k) * signed_pow(r.mass, 1.0 - r.s_k);
  r.rhs1 = std::pow(q.energy, r.s_k) * std::pow(q.mass, 1.0 - r.s_k);
  r.lhs2 = gradient_product(sobolev_norm(f, 1.0, SobolevKind::homogeneous), std::sqrt(r.mass), k);
  r.rhs2 = gradient_product(std::sqrt(q.grad_sq), std::sqrt(q.mass), k);
  r.gr1_holds = strictly_below(r.lhs1, r.rhs1);
  r.gr2_holds = strictly_below(r.lhs2, r.rhs2);
  r.energy_nonneg = r.energy >= 0.0;
  r.classification = (r.gr1_holds && r.gr2_holds && r.energy_nonneg) ? ThresholdReport::Classification::theorem_applies
                                                                     : ThresholdReport::Classification::not_covered;
  return r;
}

double BarrierData::f(double x) const { return x - b * std::pow(x, 0.25 * k); }

BarrierData barrier(const Field& f, int k) {
  require_supercritical(k, "barrier");
  const double m = mass(f);
  if (m == 0.0) throw std::invalid_argument("barrier: zero field");
  BarrierData d{};
  d.k = k;
  d.a = 2.0 * energy(f, {k, 1});
  d.b = 2.0 / (k + 2) * sharp_gn_constant(k, GnMethod::via_Q) * std::pow(m, (k + 4) / 4.0);
  d.x0 = std::pow(4.0 / (k * d.b), 4.0 / (k - 4));
  d.fx0 = (k - 4.0) / k * d.x0;
  const double grad = sobolev_norm(f, 1.0, SobolevKind::homogeneous);
  d.gradient_sq = grad * grad;
  d.energy_below = strictly_below(d.a, d.fx0);
  d.gradient_below = strictly_below(d.gradient_sq, d.x0);
  return d;
}

double growth_exponent(int k, double s) {
  require_supercritical(k, "growth_exponent");
  const double threshold = 4.0 * (k - 1) / (5.0 * k);
  if (!(s > threshold)) {
    throw std::invalid_argument("growth exponent needs s > 4(k-1)/(5k) = " + std::to_string(threshold) +
                                " (got s = " + std::to_string(s) + ")");
  }
  return (1.0 + 4.0 / k) * (1.0 - s) / (5.0 * s - 4.0 * (k - 1) / k);
}

ExponentTable critical_exponents(int k, std::optional<double> s) {
  require_supercritical(k, "critical_exponents");
  ExponentTable t{};
  t.k = k;
  t.s_k = critical_index(k);
  t.alpha_k = 0.1 - 2.0 / (5.0 * k);
  t.beta_k = 0.3 - 6.0 / (5.0 * k);
  t.p_k = 1.0 / (2.0 / (5.0 * k) + 0.1);
  t.q_k = 1.0 / (0.3 - 4.0 / (5.0 * k));
  t.gwp_threshold = 4.0 * (k - 1) / (5.0 * k);
  if (s) {
    if (!(*s > t.s_k)) {
      throw std::invalid_argument("s must exceed s_k = (k-4)/(2k) = " + std::to_string(t.s_k) +
                                  " (got s = " + std::to_string(*s) + ")");
    }
    t.s = s;
    t.gamma_k = (*s - t.s_k) / 3.0;
    if (*s > t.gwp_threshold) t.growth_exponent = growth_exponent(k, *s);
  }
  return t;
}

double local_time_heuristic(double hs_norm, double s, int k) {
  const double sk = critical_index(k);
  if (!(s > sk)) {
    throw std::invalid_argument("local time heuristic needs s > s_k = " + std::to_string(sk) +
                                " (got s = " + std::to_string(s) + ")");
  }
  return std::pow(hs_norm, -3.0 / (s - sk));
}

double local_time_heuristic(const Field& f, double s, int k) { return local_time_heuristic(sobolev_norm(f, s), s, k); }

RescaledField rescale(const Field& f, double lambda, int k) {
  if (!(lambda > 0.0)) throw std::invalid_argument("rescale: lambda must be positive");
  if (lambda == 1.0) return {f, 0.0};
  const Grid& g = f.grid();
  auto points = g.points();
  const double half = 0.5 * g.length();
  std::vector<bool> escaped(points.size(), false);
  for (std::size_t m = 0; m < points.size(); ++m) {
    points[m] *= lambda;
    escaped[m] = points[m] < -half || points[m] >= half;
  }
  auto values = interpolate(f, points);
  // Points past the edge read the periodic extension; whatever they pick up
  // would be absent for data on the line.
  double wrapped = 0.0;
  for (std::size_t m = 0; m < values.size(); ++m) {
    if (escaped[m]) wrapped = std::max(wrapped, std::abs(values[m]));
  }
  const double scale = f.max_abs();
  const double gain = std::pow(lambda, 2.0 / k);
  for (double& v : values) v *= gain;
  const double estimate = std::sqrt(spectral_tail_fraction(f, 0)) + (scale > 0.0 ? wrapped / scale : 0.0);
  return {Field(g, std::move(values)), estimate};
}

Field rescale_period(const Field& f, double lambda, int k) {
  if (!(lambda > 0.0)) throw std::invalid_argument("rescale_period: lambda must be positive");
  const Grid g(f.grid().n(), f.grid().length() / lambda);
  std::vector<double> values(f.values().begin(), f.values().end());
  const double gain = std::pow(lambda, 2.0 / k);
  for (double& v : values) v *= gain;
  return Field(g, std::move(values));
}

}  // namespace gkdv
