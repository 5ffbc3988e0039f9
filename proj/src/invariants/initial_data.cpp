#include "gkdv/initial_data.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "gkdv/ground_state.hpp"

namespace gkdv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double evaluate(const ClosedForm& profile, double x) {
  return std::visit(
      overloaded{
          [x](const GaussianProfile& g) {
            const double z = (x - g.center) / g.width;
            return g.amplitude * std::exp(-z * z);
          },
          [x](const GroundStateFamily& q) { return q.amplitude * ground_state_value(q.k, q.dilation * (x - q.center)); },
          [x](const SechProfile& s) { return s.amplitude / std::cosh((x - s.center) / s.width); },
      },
      profile);
}

Field sample(const ClosedForm& profile, const Grid& grid) {
  return Field::sample(grid, [&profile](double x) { return evaluate(profile, x); });
}

ClosedForm rescale(const ClosedForm& profile, double lambda, int k) {
  if (!(lambda > 0.0)) throw std::invalid_argument("rescale: lambda must be positive");
  const double gain = std::pow(lambda, 2.0 / k);
  return std::visit(
      overloaded{
          [=](const GaussianProfile& g) -> ClosedForm {
            return GaussianProfile{gain * g.amplitude, g.width / lambda, g.center / lambda};
          },
          [=](const GroundStateFamily& q) -> ClosedForm {
            return GroundStateFamily{q.k, gain * q.amplitude, q.dilation * lambda, q.center / lambda};
          },
          [=](const SechProfile& s) -> ClosedForm {
            return SechProfile{gain * s.amplitude, s.width / lambda, s.center / lambda};
          },
      },
      profile);
}

Field random_band_limited(const Grid& grid, std::uint64_t seed, int max_mode, double decay, double amplitude) {
  if (max_mode < 1 || max_mode >= grid.n() / 2) throw std::invalid_argument("random_band_limited: bad max_mode");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> half(static_cast<std::size_t>(grid.half_size()));
  for (int j = 1; j <= max_mode; ++j) {
    const double sd = std::pow(1.0 + j, -decay);
    const double re = normal(rng);
    const double im = normal(rng);
    half[static_cast<std::size_t>(j)] = cplx(re, im) * sd;
  }
  Field f = Field::from_spectrum(grid, half);
  const double peak = f.max_abs();
  return peak > 0.0 ? f.scaled(amplitude / peak) : f;
}

}  // namespace gkdv
