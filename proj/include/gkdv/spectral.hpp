#pragma once

// Periodic grid, sampled real fields and Fourier multipliers.
//
// Transform convention (used everywhere, visible only here and in
// src/spectral): forward DFT unnormalized, inverse divided by n, so
//
//     c_j = sum_m u_m exp(-i xi_j (x_m - x_0)),   xi_j = 2 pi j / L,
//     sum_m |u_m|^2 dx = (L / n^2) sum_j |c_j|^2.
//
// Samples sit at x_m = -L/2 + m dx, so closed-form profiles centred at 0 sit
// mid-domain. Spectra are stored as the n/2 + 1 non-negative modes of the
// real-to-complex transform; the negative half follows by Hermitian symmetry.

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace gkdv {

using cplx = std::complex<double>;

class Grid {
 public:
  // Throws std::invalid_argument unless n is even, n >= 8 and length > 0.
  Grid(int n, double length);

  int n() const { return n_; }
  double length() const { return length_; }
  double dx() const { return length_ / n_; }
  // n/2 + 1, the size of a half spectrum
  int half_size() const { return n_ / 2 + 1; }

  double x(int m) const { return -0.5 * length_ + m * dx(); }
  std::vector<double> points() const;

  // Wavenumber of half-spectrum index j in [0, n/2].
  double wavenumber(int j) const;
  // Full lattice xi_j for j = -n/2, ..., n/2 - 1, in that order.
  std::vector<double> frequencies() const;
  // |xi| of the Nyquist mode, pi n / L.
  double xi_max() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int n_;
  double length_;
};

Grid make_grid(int n, double length);

class Field {
 public:
  // Throws std::invalid_argument if values.size() != grid.n().
  Field(Grid grid, std::vector<double> values);

  static Field zero(const Grid& grid);
  static Field sample(const Grid& grid, const std::function<double(double)>& f);
  // Inverse transform of a half spectrum (n/2 + 1 entries). The imaginary
  // parts of the mean and Nyquist modes are ignored.
  static Field from_spectrum(const Grid& grid, std::span<const cplx> half);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](int m) const { return values_[static_cast<std::size_t>(m)]; }
  int size() const { return grid_.n(); }

  // Half spectrum, unnormalized forward transform.
  std::vector<cplx> spectrum() const;
  // All n coefficients in transform order (j = 0, ..., n-1; j >= n/2 holds the
  // negative frequencies j - n).
  std::vector<cplx> coefficients() const;

  double max_abs() const;
  bool finite() const;

  Field scaled(double a) const;
  friend Field operator+(const Field& a, const Field& b);
  friend Field operator-(const Field& a, const Field& b);

 private:
  Grid grid_;
  std::vector<double> values_;
};

enum class SobolevKind { inhomogeneous, homogeneous };

// Coefficients multiplied by |xi|^s; the Nyquist mode is zeroed for s > 0.
// Throws std::invalid_argument for s < 0.
Field fractional_derivative(const Field& f, double s);

// Coefficients multiplied by (1 + |xi|)^s. This is the <xi> = 1 + |xi| weight,
// not (1 + xi^2)^(1/2); the two give equivalent norms.
Field bessel_potential(const Field& f, double s);

// (i xi)^order applied spectrally, Nyquist zeroed.
Field derivative(const Field& f, int order = 1);

// Multiplication by a real, even symbol m(xi). The Nyquist mode is kept.
Field apply_multiplier(const Field& f, const std::function<double(double)>& symbol);

// Spatial translation f(x - shift) as a phase shift; Nyquist zeroed.
Field translate(const Field& f, double shift);

// sqrt(sum w(xi) |f_hat|^2) with w = (1+|xi|)^(2s) or |xi|^(2s), normalised so
// that s = 0 gives the L2 norm over one period.
double sobolev_norm(const Field& f, double s, SobolevKind kind = SobolevKind::inhomogeneous);

// Sum over modes of w(xi) |f_hat(xi)|^2 in L2 units, for an arbitrary even weight.
double spectral_quadratic_form(const Field& f, const std::function<double(double)>& weight);

// Smallest even mode count >= (degree + 1) n / 2, the alias-free size for a
// degree-d product of fields band-limited to n modes.
int padded_size(int n, int degree);

// Pointwise product of all fields, computed on the padded grid and truncated
// back to |j| < n/2 (Nyquist of inputs and result treated as zero). A single
// field is returned unchanged. Throws std::invalid_argument on grid mismatch
// or an empty list.
Field dealias_product(std::span<const Field> factors);
// f^degree with the same alias-free evaluation.
Field dealias_power(const Field& f, int degree);

// Exact integral over one period of f^p for band-limited f.
double integral_of_power(const Field& f, int p);
// Integral of |f|^p on the padded grid. Equals integral_of_power for even p;
// for odd p it is a spectrally accurate quadrature of the band-limited
// interpolant, not exact.
double abs_power_integral(const Field& f, int p);

// Fraction of sum w |f_hat|^2 carried by the top 10% of |xi|. Weight 0 is L2,
// 1 is the H1 weight (1 + |xi|)^2. Returns 0 for the zero field.
double spectral_tail_fraction(const Field& f, int sobolev_order);

// Largest |f| over samples within `width` of either domain edge.
double edge_magnitude(const Field& f, double width);

// Trigonometric interpolant of f evaluated at arbitrary points (periodic).
std::vector<double> interpolate(const Field& f, std::span<const double> points);

}  // namespace gkdv
