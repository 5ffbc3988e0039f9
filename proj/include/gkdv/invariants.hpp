#pragma once

// Conserved functionals, the scale-invariant threshold quantities for global
// H1 existence in the focusing problem, the barrier function behind them, the
// scaling group and the table of critical exponents.

#include <optional>
#include <string>

#include "gkdv/spectral.hpp"

namespace gkdv {

// u_t + u_xxx + mu (u^(k+1))_x = 0
struct ModelParams {
  int k = 5;
  int mu = 1;

  // Throws std::invalid_argument unless k >= 1 and mu = +-1.
  void validate() const;
  bool focusing() const { return mu == 1; }
};

// Relative margin inside which two threshold quantities count as equal, so a
// strict inequality needs lhs < rhs (1 - kThresholdMargin).
inline constexpr double kThresholdMargin = 1e-9;

struct ThresholdReport {
  enum class Classification { theorem_applies, not_covered };

  int k;
  double s_k;
  double mass;
  double energy;
  double lhs1;  // E(u0)^s_k M(u0)^(1-s_k)
  double rhs1;  // E(Q)^s_k M(Q)^(1-s_k)
  double lhs2;  // |u0'|^s_k |u0|^(1-s_k)
  double rhs2;  // |Q'|^s_k |Q|^(1-s_k)
  bool gr1_holds;
  bool gr2_holds;
  bool energy_nonneg;
  Classification classification;
};

std::string to_string(ThresholdReport::Classification c);

// f(x) = x - B x^(k/4), maximal at x0
struct BarrierData {
  int k;
  double a;    // 2 E(u0)
  double b;    // 2/(k+2) K_opt^(k+2) |u0|_2^((k+4)/2)
  double x0;   // (4/(k B))^(4/(k-4))
  double fx0;  // (k-4)/k x0
  double gradient_sq;  // X(0) = |u0'|_2^2
  bool energy_below;    // 2 E(u0) < f(x0)
  bool gradient_below;  // X(0) < x0

  double f(double x) const;
};

struct ExponentTable {
  int k;
  double s_k;
  double alpha_k;
  double beta_k;
  double p_k;
  double q_k;
  double gwp_threshold;  // 4(k-1)/(5k)
  std::optional<double> s;
  std::optional<double> gamma_k;          // (s - s_k)/3, present when s is given
  std::optional<double> growth_exponent;  // present when s > gwp_threshold
};

double mass(const Field& f);
// 1/2 |f'|_2^2 - mu/(k+2) int f^(k+2)
double energy(const Field& f, const ModelParams& p);

double critical_index(int k);  // s_k = (k-4)/(2k)

// Focusing (mu = +1) only; throws std::invalid_argument for k < 5.
// Q-side quantities come from the stored ground-state norms.
ThresholdReport threshold_report(const Field& f, int k);

// The product |u'|^s_k |u|^(1-s_k) that the threshold theorem keeps below rhs2.
double gradient_product(double grad_l2, double l2, int k);

// Throws std::invalid_argument for k < 5 or the zero field.
BarrierData barrier(const Field& f, int k);

// Throws std::invalid_argument for k < 5, or for s <= s_k when s is given.
ExponentTable critical_exponents(int k, std::optional<double> s = std::nullopt);
// (1+4/k)(1-s)/(5s - 4(k-1)/k); throws unless s > 4(k-1)/(5k).
double growth_exponent(int k, double s);

// |f|_{H^s}^(-3/(s - s_k)); throws for s <= s_k.
double local_time_heuristic(const Field& f, double s, int k);
double local_time_heuristic(double hs_norm, double s, int k);

// lambda^(2/k) f(lambda x) for a sampled field by evaluating the
// trigonometric interpolant at lambda x (wrapped periodically).
struct RescaledField {
  Field field;
  // Estimate of the sup error relative to the sup of the result: the
  // spectral tail of the input plus the largest value read from past the
  // domain edge.
  double accuracy_estimate;
};
RescaledField rescale(const Field& f, double lambda, int k);

// The same map acting on the periodic problem: the samples are kept, scaled
// by lambda^(2/k), and the period shrinks to L/lambda. Exact on the lattice,
// so every scale-invariant quantity is preserved to round-off.
Field rescale_period(const Field& f, double lambda, int k);

}  // namespace gkdv
