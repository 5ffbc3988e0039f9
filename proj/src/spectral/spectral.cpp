#include "gkdv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fft.hpp"
#include "gkdv/kernels.hpp"

namespace gkdv {

using detail::FftPlan;

Grid::Grid(int n, double length) : n_(n), length_(length) {
  if (n % 2 != 0) throw std::invalid_argument("n must be even (got " + std::to_string(n) + ")");
  if (n < 8) throw std::invalid_argument("n must be at least 8 (got " + std::to_string(n) + ")");
  if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("length must be positive");
}

Grid make_grid(int n, double length) { return Grid(n, length); }

std::vector<double> Grid::points() const {
  std::vector<double> xs(static_cast<std::size_t>(n_));
  for (int m = 0; m < n_; ++m) xs[static_cast<std::size_t>(m)] = x(m);
  return xs;
}

double Grid::wavenumber(int j) const { return 2.0 * std::numbers::pi * j / length_; }

std::vector<double> Grid::frequencies() const {
  std::vector<double> xi;
  xi.reserve(static_cast<std::size_t>(n_));
  for (int j = -n_ / 2; j < n_ / 2; ++j) xi.push_back(wavenumber(j));
  return xi;
}

double Grid::xi_max() const { return std::numbers::pi * n_ / length_; }

// ---------------------------------------------------------------------------

Field::Field(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.n()) {
    throw std::invalid_argument("field has " + std::to_string(values_.size()) + " samples, grid has " +
                                std::to_string(grid_.n()));
  }
}

Field Field::zero(const Grid& grid) { return Field(grid, std::vector<double>(static_cast<std::size_t>(grid.n()))); }

Field Field::sample(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> v(static_cast<std::size_t>(grid.n()));
  for (int m = 0; m < grid.n(); ++m) v[static_cast<std::size_t>(m)] = f(grid.x(m));
  return Field(grid, std::move(v));
}

Field Field::from_spectrum(const Grid& grid, std::span<const cplx> half) {
  if (static_cast<int>(half.size()) != grid.half_size()) {
    throw std::invalid_argument("half spectrum has wrong length");
  }
  std::vector<double> v(static_cast<std::size_t>(grid.n()));
  FftPlan::for_size(grid.n()).inverse(half, v);
  return Field(grid, std::move(v));
}

std::vector<cplx> Field::spectrum() const {
  std::vector<cplx> half(static_cast<std::size_t>(grid_.half_size()));
  FftPlan::for_size(grid_.n()).forward(values_, half);
  return half;
}

std::vector<cplx> Field::coefficients() const {
  const auto half = spectrum();
  const int n = grid_.n();
  std::vector<cplx> full(static_cast<std::size_t>(n));
  for (int j = 0; j <= n / 2; ++j) full[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(j)];
  for (int j = n / 2 + 1; j < n; ++j) full[static_cast<std::size_t>(j)] = std::conj(half[static_cast<std::size_t>(n - j)]);
  return full;
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

bool Field::finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

Field Field::scaled(double a) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= a;
  return Field(grid_, std::move(v));
}

Field operator+(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("fields live on different grids");
  std::vector<double> v(a.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  return Field(a.grid(), std::move(v));
}

Field operator-(const Field& a, const Field& b) { return a + b.scaled(-1.0); }

// ---------------------------------------------------------------------------

namespace {

// Multiplies the half spectrum by a real symbol of |xi|.
Field real_symbol(const Field& f, const std::function<double(double)>& symbol, bool zero_nyquist) {
  const Grid& g = f.grid();
  auto half = f.spectrum();
  std::vector<double> m(half.size());
  for (int j = 0; j < g.half_size(); ++j) m[static_cast<std::size_t>(j)] = symbol(g.wavenumber(j));
  kernels::scale_complex(half, m);
  if (zero_nyquist) half.back() = 0.0;
  return Field::from_spectrum(g, half);
}

double l2_weight(const Grid& g) { return g.length() / (static_cast<double>(g.n()) * g.n()); }

// Half-spectrum weights that turn sum over j in [0, n/2] into the full sum.
std::vector<double> doubled_weights(const Grid& g, const std::function<double(double)>& w) {
  std::vector<double> out(static_cast<std::size_t>(g.half_size()));
  for (int j = 0; j < g.half_size(); ++j) {
    const double mult = (j == 0 || j == g.n() / 2) ? 1.0 : 2.0;
    out[static_cast<std::size_t>(j)] = mult * w(g.wavenumber(j));
  }
  return out;
}

}  // namespace

Field fractional_derivative(const Field& f, double s) {
  if (s < 0.0) throw std::invalid_argument("fractional derivative order must be non-negative");
  if (s == 0.0) return f;
  return real_symbol(f, [s](double xi) { return std::pow(std::abs(xi), s); }, true);
}

Field bessel_potential(const Field& f, double s) {
  if (s == 0.0) return f;
  return real_symbol(f, [s](double xi) { return std::pow(1.0 + std::abs(xi), s); }, false);
}

Field derivative(const Field& f, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (order == 0) return f;
  const Grid& g = f.grid();
  auto half = f.spectrum();
  static constexpr cplx kPowersOfI[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (int j = 0; j < g.half_size(); ++j) {
    const double magnitude = std::pow(g.wavenumber(j), order);
    half[static_cast<std::size_t>(j)] *= magnitude * kPowersOfI[order % 4];
  }
  half.back() = 0.0;
  return Field::from_spectrum(g, half);
}

Field apply_multiplier(const Field& f, const std::function<double(double)>& symbol) {
  return real_symbol(f, symbol, false);
}

Field translate(const Field& f, double shift) {
  const Grid& g = f.grid();
  auto half = f.spectrum();
  for (int j = 0; j < g.half_size(); ++j) {
    half[static_cast<std::size_t>(j)] *= std::polar(1.0, -g.wavenumber(j) * shift);
  }
  half.back() = 0.0;
  return Field::from_spectrum(g, half);
}

double spectral_quadratic_form(const Field& f, const std::function<double(double)>& weight) {
  const auto half = f.spectrum();
  const auto w = doubled_weights(f.grid(), weight);
  return l2_weight(f.grid()) * kernels::weighted_norm_sq(half, w);
}

double sobolev_norm(const Field& f, double s, SobolevKind kind) {
  const auto weight = [s, kind](double xi) {
    const double base = kind == SobolevKind::inhomogeneous ? 1.0 + std::abs(xi) : std::abs(xi);
    if (s == 0.0) return 1.0;
    return std::pow(base, 2.0 * s);
  };
  return std::sqrt(spectral_quadratic_form(f, weight));
}

int padded_size(int n, int degree) {
  if (degree < 1) throw std::invalid_argument("product degree must be positive");
  const long long twice = static_cast<long long>(degree + 1) * n;  // (d+1) n / 2, doubled
  long long m = (twice + 1) / 2;
  if (m % 2 != 0) ++m;
  return static_cast<int>(std::max<long long>(m, n));
}

namespace {

// Zero-pads a band-limited half spectrum onto m modes, evaluated in physical space.
std::vector<double> padded_values(const Field& f, int m) {
  const int n = f.grid().n();
  const auto half = f.spectrum();
  std::vector<cplx> wide(static_cast<std::size_t>(m / 2 + 1));
  const double scale = static_cast<double>(m) / n;
  for (int j = 0; j < n / 2; ++j) wide[static_cast<std::size_t>(j)] = half[static_cast<std::size_t>(j)] * scale;
  std::vector<double> v(static_cast<std::size_t>(m));
  FftPlan::for_size(m).inverse(wide, v);
  return v;
}

Field truncate(const Grid& g, std::span<const double> wide_values) {
  const int m = static_cast<int>(wide_values.size());
  const int n = g.n();
  std::vector<cplx> wide(static_cast<std::size_t>(m / 2 + 1));
  FftPlan::for_size(m).forward(wide_values, wide);
  std::vector<cplx> half(static_cast<std::size_t>(g.half_size()));
  const double scale = static_cast<double>(n) / m;
  for (int j = 0; j < n / 2; ++j) half[static_cast<std::size_t>(j)] = wide[static_cast<std::size_t>(j)] * scale;
  return Field::from_spectrum(g, half);
}

}  // namespace

Field dealias_product(std::span<const Field> factors) {
  if (factors.empty()) throw std::invalid_argument("dealias_product needs at least one factor");
  const Grid& g = factors.front().grid();
  for (const auto& f : factors) {
    if (!(f.grid() == g)) throw std::invalid_argument("dealias_product: fields live on different grids");
  }
  if (factors.size() == 1) return factors.front();
  const int m = padded_size(g.n(), static_cast<int>(factors.size()));
  auto acc = padded_values(factors.front(), m);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const auto next = padded_values(factors[i], m);
    kernels::multiply_inplace(acc, next);
  }
  return truncate(g, acc);
}

Field dealias_power(const Field& f, int degree) {
  if (degree < 1) throw std::invalid_argument("dealias_power: degree must be positive");
  if (degree == 1) return f;
  const int m = padded_size(f.grid().n(), degree);
  auto v = padded_values(f, m);
  kernels::power(v, degree, v);
  return truncate(f.grid(), v);
}

double integral_of_power(const Field& f, int p) {
  if (p < 0) throw std::invalid_argument("integral_of_power: negative exponent");
  const Grid& g = f.grid();
  if (p == 0) return g.length();
  const int m = padded_size(g.n(), p);
  // The padded samples carry the Nyquist mode as zero, like every product.
  const auto v = padded_values(f, m);
  return kernels::sum_power(v, p) * g.length() / m;
}

double abs_power_integral(const Field& f, int p) {
  if (p % 2 == 0) return integral_of_power(f, p);
  const Grid& g = f.grid();
  const int m = padded_size(g.n(), p);
  auto v = padded_values(f, m);
  for (double& x : v) x = std::abs(x);
  return kernels::sum_power(v, p) * g.length() / m;
}

double spectral_tail_fraction(const Field& f, int sobolev_order) {
  const Grid& g = f.grid();
  const double cutoff = 0.9 * g.xi_max();
  const auto weight = [sobolev_order](double xi) { return std::pow(1.0 + std::abs(xi), 2 * sobolev_order); };
  const double total = spectral_quadratic_form(f, weight);
  if (total == 0.0) return 0.0;
  const double tail = spectral_quadratic_form(f, [&](double xi) { return std::abs(xi) > cutoff ? weight(xi) : 0.0; });
  return tail / total;
}

double edge_magnitude(const Field& f, double width) {
  const Grid& g = f.grid();
  double m = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    if (x < -0.5 * g.length() + width || x > 0.5 * g.length() - width) m = std::max(m, std::abs(f[j]));
  }
  return m;
}

std::vector<double> interpolate(const Field& f, std::span<const double> points) {
  const Grid& g = f.grid();
  const auto half = f.spectrum();
  const double origin = g.x(0);
  const int n = g.n();
  std::vector<double> out;
  out.reserve(points.size());
  for (double x : points) {
    double acc = half[0].real();
    for (int j = 1; j < n / 2; ++j) {
      acc += 2.0 * (half[static_cast<std::size_t>(j)] * std::polar(1.0, g.wavenumber(j) * (x - origin))).real();
    }
    acc += half[static_cast<std::size_t>(n / 2)].real() * std::cos(g.wavenumber(n / 2) * (x - origin));
    out.push_back(acc / n);
  }
  return out;
}

}  // namespace gkdv
