#include <cmath>
#include <stdexcept>
#include <string>

#include "gkdv/imethod.hpp"

namespace gkdv {

namespace {

struct Residuals {
  long double sum = 0.0L;
  long double cube_sum = 0.0L;
  long double weighted = 0.0L;
  long double weighted_abs = 0.0L;
};

Residuals residuals(const std::vector<double>& xi, const IMethodParams& p) {
  Residuals r;
  for (double v : xi) {
    const long double x = v;
    const long double m = multiplier_m(v, p);
    r.sum += x;
    r.cube_sum += x * x * x;
    r.weighted += m * m * x * x * x;
    r.weighted_abs += m * m * std::fabs(x * x * x);
  }
  return r;
}

}  // namespace

std::optional<ResonanceWitness> resonance_search(int k, const IMethodParams& p, long budget, double max_magnitude,
                                                 double step) {
  if (k < 1) throw std::invalid_argument("resonance_search: k must be positive");
  if (budget < 0) throw std::invalid_argument("resonance_search: budget must be non-negative");
  if (!(step > 0.0) || !(max_magnitude >= step)) throw std::invalid_argument("resonance_search: need 0 < step <= max_magnitude");
  p.validate();

  long patterns = 1;
  for (int i = 0; i < k; ++i) patterns *= 5;
  const long double bound = 4.0L * max_magnitude;
  const auto lattice = static_cast<int>(std::floor(max_magnitude / step + 1e-9));

  long examined = 0;
  std::vector<double> xi(static_cast<std::size_t>(k + 2));
  for (int ia = 2; ia <= lattice; ++ia) {
    for (int ib = 1; ib < ia; ++ib) {
      const double a = ia * step;
      const double b = ib * step;
      const double choices[5] = {a, -a, b, -b, 0.0};
      for (long pattern = 0; pattern < patterns; ++pattern) {
        if (examined >= budget) return std::nullopt;
        ++examined;
        long code = pattern;
        long double p1 = 0.0L, p3 = 0.0L;
        for (int i = 0; i < k; ++i) {
          const double v = choices[code % 5];
          code /= 5;
          xi[static_cast<std::size_t>(i)] = v;
          p1 += v;
          p3 += static_cast<long double>(v) * v * v;
        }
        // x + y = s1 and x^3 + y^3 = s3 close both constraints.
        const long double s1 = -p1;
        const long double s3 = -p3;
        if (std::fabs(s1) < 1e-12L) continue;
        const long double product = (s1 * s1 * s1 - s3) / (3.0L * s1);
        const long double disc = s1 * s1 - 4.0L * product;
        if (disc < 0.0L) continue;
        const long double x = 0.5L * (s1 + std::copysign(std::sqrt(disc), s1));
        const long double y = product / x;
        if (std::fabs(x) > bound || std::fabs(y) > bound) continue;
        xi[static_cast<std::size_t>(k)] = static_cast<double>(x);
        xi[static_cast<std::size_t>(k + 1)] = static_cast<double>(y);

        const Residuals r = residuals(xi, p);
        if (std::fabs(r.sum) > 1e-10L || std::fabs(r.cube_sum) > 1e-10L) continue;
        if (r.weighted_abs == 0.0L) continue;
        const long double normalized = std::fabs(r.weighted) / r.weighted_abs;
        if (normalized > kResonanceThreshold) {
          return ResonanceWitness{xi,
                                  static_cast<double>(r.sum),
                                  static_cast<double>(r.cube_sum),
                                  static_cast<double>(r.weighted),
                                  static_cast<double>(normalized),
                                  examined};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gkdv
