#include <cmath>
#include <numbers>
#include <stdexcept>

#include "../spectral/fft.hpp"
#include "gkdv/evolution.hpp"
#include "gkdv/ground_state.hpp"
#include "gkdv/kernels.hpp"

namespace gkdv {

namespace {

constexpr int kContourPoints = 32;

struct PhiCoefficients {
  cplx q, f1, f2, f3;
};

// Contour means over r = z + exp(i theta) of the ETDRK4 phi combinations;
// exact for these entire functions and free of the cancellation at z -> 0.
PhiCoefficients phi_coefficients(cplx z, double h) {
  PhiCoefficients acc{};
  for (int j = 0; j < kContourPoints; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / kContourPoints;
    const cplx r = z + std::polar(1.0, theta);
    const cplx er = std::exp(r);
    const cplx r2 = r * r;
    const cplx r3 = r2 * r;
    acc.q += (std::exp(0.5 * r) - 1.0) / r;
    acc.f1 += (-4.0 - r + er * (4.0 - 3.0 * r + r2)) / r3;
    acc.f2 += (2.0 + r + er * (r - 2.0)) / r3;
    acc.f3 += (-4.0 - 3.0 * r - r2 + er * (4.0 - r)) / r3;
  }
  const double scale = h / kContourPoints;
  return {acc.q * scale, acc.f1 * scale, acc.f2 * scale, acc.f3 * scale};
}

bool all_finite(const std::vector<cplx>& v) {
  for (const auto& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace

Stepper::Stepper(const Grid& grid, const ModelParams& params, double dt, bool nonlinear)
    : grid_(grid), params_(params), dt_(dt), nonlinear_(nonlinear), padded_(padded_size(grid.n(), params.k + 1)) {
  params_.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  const auto size = static_cast<std::size_t>(grid.half_size());
  for (auto* v : {&e_, &e2_, &q_, &f1_, &f2_, &f3_, &ik_, &nv_, &na_, &nb_, &nc_, &a_, &b_, &c_, &tmp_}) v->assign(size, 0.0);
  wide_.assign(static_cast<std::size_t>(padded_ / 2 + 1), 0.0);
  wide_values_.assign(static_cast<std::size_t>(padded_), 0.0);

  for (int j = 0; j < grid.half_size(); ++j) {
    const auto i = static_cast<std::size_t>(j);
    const double xi = grid.wavenumber(j);
    const cplx z(0.0, dt * xi * xi * xi);  // h L with L = i xi^3
    e_[i] = std::exp(z);
    e2_[i] = std::exp(0.5 * z);
    const auto phi = phi_coefficients(z, dt);
    q_[i] = phi.q;
    f1_[i] = phi.f1;
    f2_[i] = phi.f2;
    f3_[i] = phi.f3;
    // -mu i xi, and the projection back to n modes; Nyquist stays zero.
    ik_[i] = j == grid.n() / 2 ? cplx(0.0) : cplx(0.0, -params_.mu * xi);
  }
}

void Stepper::nonlinear_term(const std::vector<cplx>& v, std::vector<cplx>& out) {
  if (!nonlinear_) {
    std::fill(out.begin(), out.end(), cplx(0.0));
    return;
  }
  const int n = grid_.n();
  const double up = static_cast<double>(padded_) / n;
  std::fill(wide_.begin(), wide_.end(), cplx(0.0));
  for (int j = 0; j < n / 2; ++j) wide_[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] * up;
  auto& plan = detail::FftPlan::for_size(padded_);
  plan.inverse(wide_, wide_values_);
  kernels::power(wide_values_, params_.k + 1, wide_values_);
  plan.forward(wide_values_, wide_);
  const double down = static_cast<double>(n) / padded_;
  for (int j = 0; j <= n / 2; ++j) out[static_cast<std::size_t>(j)] = wide_[static_cast<std::size_t>(j)] * down;
  // out = (-mu i xi) w_hat
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= ik_[j];
}

void Stepper::advance(std::vector<cplx>& v) {
  // a = E2 v + Q N(v)
  nonlinear_term(v, nv_);
  kernels::complex_axpby(e2_, v, q_, nv_, a_);
  // b = E2 v + Q N(a)
  nonlinear_term(a_, na_);
  kernels::complex_axpby(e2_, v, q_, na_, b_);
  // c = E2 a + Q (2 N(b) - N(v))
  nonlinear_term(b_, nb_);
  for (std::size_t j = 0; j < tmp_.size(); ++j) tmp_[j] = 2.0 * nb_[j] - nv_[j];
  kernels::complex_axpby(e2_, a_, q_, tmp_, c_);
  nonlinear_term(c_, nc_);
  // v = E v + f1 N(v) + 2 f2 (N(a) + N(b)) + f3 N(c)
  kernels::complex_axpby(e_, v, f1_, nv_, a_);
  for (std::size_t j = 0; j < tmp_.size(); ++j) tmp_[j] = 2.0 * (na_[j] + nb_[j]);
  kernels::complex_axpby(f2_, tmp_, f3_, nc_, b_);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a_[j] + b_[j];
  v.back() = 0.0;
}

SimState Stepper::step(const SimState& st) {
  if (!(st.field.grid() == grid_)) throw std::invalid_argument("Stepper::step: state lives on a different grid");
  auto v = st.field.spectrum();
  v.back() = 0.0;
  advance(v);
  if (!all_finite(v)) {
    throw IntegrationFailure("non-finite field at t = " + std::to_string(st.t + dt_), st);
  }
  return SimState{st.t + dt_, Field::from_spectrum(grid_, v), st.params, dt_, st.step_count + 1};
}

SimState step(const SimState& st, bool nonlinear) {
  Stepper stepper(st.field.grid(), st.params, st.dt, nonlinear);
  return stepper.step(st);
}

Field soliton(int k, double c, double x0, const Grid& grid, double t) {
  if (!(c > 0.0)) throw std::invalid_argument("soliton speed must be positive");
  const double amplitude = std::pow(c, 1.0 / k);
  const double root = std::sqrt(c);
  const double edge = amplitude * ground_state_value(k, root * 0.5 * grid.length());
  if (edge >= 1e-12) {
    throw std::invalid_argument("domain too short for the soliton: edge value " + std::to_string(edge));
  }
  const double length = grid.length();
  return Field::sample(grid, [=](double x) {
    double y = x - c * t - x0;
    y -= length * std::floor((y + 0.5 * length) / length);
    return amplitude * ground_state_value(k, root * y);
  });
}

}  // namespace gkdv
