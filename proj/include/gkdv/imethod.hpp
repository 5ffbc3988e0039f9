#pragma once

// The I-operator, the first modified energy E(Iu), and the numerical
// experiments around it: almost-conservation sweeps over the cutoff N, the
// resonance witness search, and the rescaling/iteration schedule of the
// global argument.

#include <optional>
#include <span>
#include <vector>

#include "gkdv/invariants.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

struct InvariantSeries;

struct IMethodParams {
  double N = 8.0;  // frequency cutoff
  double s = 0.9;  // target regularity, 0 < s < 1

  // Throws std::invalid_argument unless N >= 1 and 0 < s < 1.
  void validate() const;
  // Additionally requires 2N <= xi_max so the transition band is on-grid.
  void validate_for(const Grid& grid) const;
};

// m(xi) = 1 for |xi| <= N, (N/|xi|)^(1-s) for |xi| >= 2N, and in between
// log m = -(1-s) h(t) log(|xi|/N) with t = log2(|xi|/N), h(t) = t^2 (3 - 2t).
// Even, C1, nonincreasing in |xi|.
double multiplier_m(double xi, const IMethodParams& p);
// d m / d|xi|
double multiplier_m_slope(double xi, const IMethodParams& p);

Field apply_I(const Field& f, const IMethodParams& p);

// E(Iu) evaluated twice: from the physical samples of Iu and its derivative,
// and from the spectral form 1/2 sum |xi|^2 m^2 |u_hat|^2 - mu/(k+2) int (Iu)^(k+2).
struct ModifiedEnergy {
  double physical;
  double spectral;
};
ModifiedEnergy modified_energy(const Field& f, const IMethodParams& p, const ModelParams& mp);

struct IncrementMeasurement {
  double N;
  double sup_increment;  // sup_t |E1(t) - E1(0)|
  double initial_e1;
  double final_e1;
  bool resolved;
};

struct SweepOptions {
  int record_every = 5;
  std::optional<double> dt_override;
  int workers = 1;
};

// One simulation tracking E1 for a single parameter set; no restriction on N.
IncrementMeasurement measure_increment(const Field& initial, const ModelParams& mp, const IMethodParams& p,
                                       double t_final, const SweepOptions& options);

struct SweepResult {
  std::vector<IncrementMeasurement> points;  // in N_list order
  double slope;        // least-squares slope of log(increment) against log(N)
  bool monotone;       // increment[i+1] <= 1.1 increment[i]
  bool all_resolved;
};

// Requires mu = -1, even k and every N <= xi_max/4; each N is an independent
// simulation, run on `workers` threads.
SweepResult almost_conservation_sweep(const Field& initial, const ModelParams& mp, const IMethodParams& base,
                                      std::span<const double> n_list, double t_final, const SweepOptions& options);

struct ResonanceWitness {
  std::vector<double> xi;
  double sum;                // sum xi_j
  double cube_sum;           // sum xi_j^3
  double weighted_cube_sum;  // sum m_j^2 xi_j^3
  double normalized;         // |weighted_cube_sum| / sum m_j^2 |xi_j|^3
  long candidates;           // tuples examined up to and including this one
};

inline constexpr double kResonanceThreshold = 1e-6;

// Tuples of k+2 reals with vanishing sum and cube sum but a weighted cube sum
// above kResonanceThreshold (normalised). k of the entries are drawn from
// {+a, -a, +b, -b, 0} for magnitudes b < a on a lattice of spacing `step` up
// to `max_magnitude`; the last two solve both constraints exactly. Returns
// nullopt when nothing qualifies within `budget` candidate tuples.
std::optional<ResonanceWitness> resonance_search(int k, const IMethodParams& p, long budget,
                                                 double max_magnitude = 64.0, double step = 0.5);

// Rescaling and iteration counts of the global argument for target time T.
struct IterationSchedule {
  double lambda_exponent;  // (1-s)/(s - 1/2 + 2/k)
  double n_exponent;       // 2 - eps - 3 lambda_exponent
  double log2_N;
  double N;                // smallest power of two with N^n_exponent > T
  double lambda;           // N^lambda_exponent
  double M;                // ceil(N^(2 - eps)) local steps
  double chunk_time;       // per-step time in rescaled units
  bool impractical;        // N beyond anything a grid could resolve
};

inline constexpr double kScheduleEpsilon = 0.01;
inline constexpr double kImpracticalLog2N = 20.0;

// Throws std::invalid_argument for k odd, k < 5, T <= 0, or s at or below
// 4(k-1)/(5k) (and for s so close to it that the N exponent is not positive).
IterationSchedule iteration_schedule(int k, double s, double T);

struct GrowthReport {
  double theoretical_exponent;  // (1+4/k)(1-s)/(5s - 4(k-1)/k)
  double fitted_constant;       // smallest C with |u|_{H^s}^2 <= C (1+t)^(exponent + 0.01)
  double empirical_slope;       // least-squares slope of log |u|_{H^s}^2 against log(1+t)
};

// The series must track the H^s norm at this s.
GrowthReport growth_bound_check(const InvariantSeries& series, int k, double s);

// Least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace gkdv
