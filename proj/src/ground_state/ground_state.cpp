#include "gkdv/ground_state.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkdv/golden_values.hpp"

namespace gkdv {

namespace {

void require_power(int k) {
  if (k < 1) throw std::invalid_argument("nonlinearity power k must be >= 1 (got " + std::to_string(k) + ")");
}

double ipow(double x, int p) {
  double v = 1.0;
  for (int i = 0; i < p; ++i) v *= x;
  return v;
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

}  // namespace

double ground_state_amplitude(int k) {
  require_power(k);
  return std::pow((k + 2) / 2.0, 1.0 / k);
}

double ground_state_value(int k, double x) {
  const double sech = 1.0 / std::cosh(0.5 * k * x);
  return ground_state_amplitude(k) * std::pow(sech, 2.0 / k);
}

PsiRelation psi_relation(int k) {
  require_power(k);
  return {std::pow(4.0 / (k + 4), 1.0 / k), std::sqrt(static_cast<double>(k) / (k + 4))};
}

GroundStateProfile ground_state_profile(int k, const Grid& grid) {
  require_power(k);
  const double tail = ground_state_value(k, 0.5 * grid.length());
  if (tail >= 1e-12) {
    throw std::invalid_argument("grid too short for the ground state: Q(L/2) = " + std::to_string(tail));
  }
  Field q = Field::sample(grid, [k](double x) { return ground_state_value(k, x); });
  const double mass = integral_of_power(q, 2);
  const double grad_sq = sobolev_norm(q, 1.0, SobolevKind::homogeneous);
  const double lkp2 = integral_of_power(q, k + 2);
  const double energy = 0.5 * grad_sq * grad_sq - lkp2 / (k + 2);
  return {k, std::move(q), mass, grad_sq * grad_sq, lkp2, energy, psi_relation(k)};
}

Field psi_profile(int k, const Grid& grid) {
  const auto [lambda, omega] = psi_relation(k);
  const double tail = ground_state_value(k, 0.5 * grid.length() / omega) / lambda;
  if (tail >= 1e-12) throw std::invalid_argument("grid too short for psi: psi(L/2) = " + std::to_string(tail));
  return Field::sample(grid, [=](double y) { return ground_state_value(k, y / omega) / lambda; });
}

double ground_state_residual(const Field& q, int k) {
  const Field qxx = derivative(q, 2);
  std::vector<double> r(q.values().size());
  for (int m = 0; m < q.size(); ++m) r[static_cast<std::size_t>(m)] = qxx[m] - q[m] + ipow(q[m], k + 1);
  return sup_norm(r) / sup_norm(q.values());
}

double psi_residual(const Field& psi, int k) {
  const Field pxx = derivative(psi, 2);
  std::vector<double> r(psi.values().size());
  for (int m = 0; m < psi.size(); ++m) {
    r[static_cast<std::size_t>(m)] = 0.25 * k * pxx[m] - (1.0 + 0.25 * k) * psi[m] + ipow(psi[m], k + 1);
  }
  return sup_norm(r) / sup_norm(psi.values());
}

PohozhaevReport pohozhaev_report(const GroundStateProfile& p) {
  const double k = p.k;
  return {relative_gap((k + 4) / (2 * (k + 2)) * p.lkp2, p.mass),
          relative_gap(p.mass, (k + 4) / k * p.grad_sq),
          relative_gap(p.energy, (k - 4) / (2 * (k + 4)) * p.mass)};
}

Grid reference_grid(int k) {
  require_power(k);
  // Q decays like exp(-|x|); its transform like exp(-pi |xi| / k).
  const double length = 80.0;
  const int n = k <= 12 ? 4096 : 8192;
  return Grid(n, length);
}

double sharp_gn_constant(int k, GnMethod method) {
  require_power(k);
  if (method == GnMethod::via_psi) {
    const Field psi = psi_profile(k, reference_grid(k));
    const double psi_mass = integral_of_power(psi, 2);
    return (k + 2) / (2.0 * std::pow(psi_mass, 0.5 * k));
  }
  double mass = 0.0;
  if (k <= golden::kMaxPower) {
    mass = golden::kGroundState[static_cast<std::size_t>(k - 1)].mass;
  } else {
    mass = ground_state_profile(k, reference_grid(k)).mass;
  }
  return 2.0 * (k + 2) * std::pow(k + 4.0, (k - 4) / 4.0) / (std::pow(static_cast<double>(k), k / 4.0) * std::pow(mass, 0.5 * k));
}

double gn_quotient(const Field& f, int k) {
  require_power(k);
  const double l2 = sobolev_norm(f, 0.0);
  if (l2 == 0.0) throw std::invalid_argument("gn_quotient of the zero field");
  const double grad = sobolev_norm(f, 1.0, SobolevKind::homogeneous);
  if (grad == 0.0) throw std::invalid_argument("gn_quotient: field has zero derivative");
  const double lkp2 = abs_power_integral(f, k + 2);
  return lkp2 / (std::pow(grad, 0.5 * k) * std::pow(l2, 2.0 + 0.5 * k));
}

// ---------------------------------------------------------------------------

namespace {

struct OdeState {
  double q;
  double dq;
};

OdeState rhs(const OdeState& s, int k) { return {s.dq, s.q - ipow(s.q, k + 1)}; }

OdeState rk4_step(const OdeState& s, double h, int k) {
  const auto add = [](const OdeState& a, const OdeState& b, double c) { return OdeState{a.q + c * b.q, a.dq + c * b.dq}; };
  const OdeState k1 = rhs(s, k);
  const OdeState k2 = rhs(add(s, k1, 0.5 * h), k);
  const OdeState k3 = rhs(add(s, k2, 0.5 * h), k);
  const OdeState k4 = rhs(add(s, k3, h), k);
  return {s.q + h / 6.0 * (k1.q + 2 * k2.q + 2 * k3.q + k4.q), s.dq + h / 6.0 * (k1.dq + 2 * k2.dq + 2 * k3.dq + k4.dq)};
}

constexpr double kShootStep = 1.0 / 1024.0;

// +1: trajectory crosses zero (peak too high); -1: turns back up (too low);
// 0: neither before x_end.
int classify(double peak, int k, double x_end) {
  OdeState s{peak, 0.0};
  const int steps = static_cast<int>(x_end / kShootStep);
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(s, kShootStep, k);
    if (s.q < 0.0) return +1;
    if (s.dq > 0.0) return -1;
  }
  return 0;
}

}  // namespace

ShootingResult solve_ground_state_ode(int k, const Grid& grid) {
  require_power(k);
  const double x_end = 60.0;
  double lo = 1e-2;
  double hi = 10.0;
  if (classify(lo, k, x_end) != -1 || classify(hi, k, x_end) != +1) {
    throw std::runtime_error("shooting: bisection bracket failure for k = " + std::to_string(k));
  }
  int iterations = 0;
  while (iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int c = classify(mid, k, x_end);
    if (c == 0) {
      lo = hi = mid;
      break;
    }
    (c > 0 ? hi : lo) = mid;
    ++iterations;
  }
  const double peak = 0.5 * (lo + hi);

  // Dense trajectory up to the matching point, where Q^(k+1) is negligible
  // and the decaying branch of Q'' = Q takes over.
  constexpr double kMatch = 1e-7;
  std::vector<OdeState> path{{peak, 0.0}};
  while (path.back().q > kMatch && path.back().dq <= 0.0) path.push_back(rk4_step(path.back(), kShootStep, k));
  const double x_match = kShootStep * static_cast<double>(path.size() - 1);
  const double q_match = path.back().q;

  const auto evaluate = [&](double x) {
    x = std::abs(x);
    if (x >= x_match) return q_match * std::exp(-(x - x_match));
    const auto i = static_cast<std::size_t>(x / kShootStep);
    const double t = x / kShootStep - static_cast<double>(i);
    const OdeState& a = path[i];
    const OdeState& b = path[i + 1];
    // cubic Hermite on [x_i, x_{i+1}]
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * a.q + h10 * kShootStep * a.dq + h01 * b.q + h11 * kShootStep * b.dq;
  };
  return {Field::sample(grid, evaluate), peak, iterations};
}

}  // namespace gkdv
