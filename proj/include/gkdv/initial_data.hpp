#pragma once

// Closed-form initial data families. The scaling map acts on their parameters
// exactly, which is what the scale-invariance checks rely on.

#include <cstdint>
#include <string>
#include <variant>

#include "gkdv/spectral.hpp"

namespace gkdv {

// amplitude * exp(-((x - center)/width)^2)
struct GaussianProfile {
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
};

// amplitude * Q_k(dilation * (x - center))
struct GroundStateFamily {
  int k = 5;
  double amplitude = 1.0;
  double dilation = 1.0;
  double center = 0.0;
};

// amplitude * sech((x - center)/width)
struct SechProfile {
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
};

using ClosedForm = std::variant<GaussianProfile, GroundStateFamily, SechProfile>;

double evaluate(const ClosedForm& profile, double x);
Field sample(const ClosedForm& profile, const Grid& grid);

// Parameters of lambda^(2/k) u(lambda x). Throws for lambda <= 0.
ClosedForm rescale(const ClosedForm& profile, double lambda, int k);

// Seeded random field with Gaussian coefficients on modes 1..max_mode
// (mean zero), coefficient standard deviation ~ (1 + j)^(-decay), scaled to
// the requested sup norm. Identical (seed, grid, arguments) give identical
// samples.
Field random_band_limited(const Grid& grid, std::uint64_t seed, int max_mode, double decay, double amplitude);

}  // namespace gkdv
