#pragma once

// Time integration of u_t + u_xxx + mu (u^(k+1))_x = 0 on the periodic grid.
//
// In Fourier space v_t = i xi^3 v - mu i xi P(u^(k+1))^, with P the alias-free
// truncation. The linear part is integrated exactly and the nonlinear part by
// the fourth-order exponential Runge-Kutta scheme of Cox and Matthews, with
// the phi-function coefficients evaluated by contour averaging.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkdv/imethod.hpp"
#include "gkdv/invariants.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

struct SimState {
  double t = 0.0;
  Field field;
  ModelParams params;
  double dt = 0.0;
  long step_count = 0;
};

// Raised when a step produces a non-finite field.
class IntegrationFailure : public std::runtime_error {
 public:
  IntegrationFailure(const std::string& what, SimState last_valid)
      : std::runtime_error(what), last_valid_(std::move(last_valid)) {}
  const SimState& last_valid() const { return last_valid_; }

 private:
  SimState last_valid_;
};

class Stepper {
 public:
  // nonlinear = false drops the u^(k+1) term (pure Airy flow).
  Stepper(const Grid& grid, const ModelParams& params, double dt, bool nonlinear = true);

  double dt() const { return dt_; }
  const Grid& grid() const { return grid_; }

  // Advances a half spectrum by one step in place.
  void advance(std::vector<cplx>& v);
  // Throws IntegrationFailure carrying `st` if the result is not finite.
  SimState step(const SimState& st);

 private:
  void nonlinear_term(const std::vector<cplx>& v, std::vector<cplx>& out);

  Grid grid_;
  ModelParams params_;
  double dt_;
  bool nonlinear_;
  int padded_;
  std::vector<cplx> e_, e2_, q_, f1_, f2_, f3_, ik_;
  std::vector<cplx> nv_, na_, nb_, nc_, a_, b_, c_, tmp_, wide_;
  std::vector<double> wide_values_;
};

// Convenience single step; builds a Stepper each call.
SimState step(const SimState& st, bool nonlinear = true);

// Exact traveling wave c^(1/k) Q(sqrt(c) (x - c t - x0)) of the focusing
// equation, wrapped onto the periodic domain. Throws if the wave has not
// decayed below 1e-12 at the domain edge.
Field soliton(int k, double c, double x0, const Grid& grid, double t);

struct ModifiedEnergyTrack {
  IMethodParams params;
  std::vector<double> values;
};

struct InvariantSeries {
  double s_track = 1.0;
  std::vector<double> times;
  std::vector<double> mass;
  std::vector<double> energy;
  std::vector<double> hs_norm;    // |u|_{H^s_track}
  std::vector<double> grad_l2;    // |u_x|_{L2}
  std::vector<double> tail_h1;    // H1 fraction in the top 10% of modes
  std::vector<double> tail_l2;    // L2 fraction in the top 10% of modes
  std::vector<ModifiedEnergyTrack> modified_energy;

  std::size_t size() const { return times.size(); }
};

struct SimulateOptions {
  double t_final = 1.0;
  int record_every = 10;
  double s_track = 1.0;
  std::vector<IMethodParams> imethod;
  std::optional<double> dt_override;
  double safety = 1.0;
  // Upper bound on the automatic step, for data so small that neither the
  // local-time heuristic nor the nonlinear CFL limit constrains it.
  double dt_max = 0.05;
  bool nonlinear = true;
  // Absolute cap on |u_x|^2; default 1e6 times the initial value.
  std::optional<double> blowup_cap;
};

enum class RunStatus { completed, blowup, integration_failure };
std::string to_string(RunStatus s);

inline constexpr double kUnderResolvedTail = 1e-8;
inline constexpr double kBlowupTailFraction = 0.01;

struct SimulationResult {
  InvariantSeries series;
  SimState final_state;
  RunStatus status = RunStatus::completed;
  std::optional<double> blowup_time;
  bool under_resolved = false;
  double max_tail_l2 = 0.0;
  long steps = 0;
  std::string message;
};

SimulationResult simulate(const Field& initial, const ModelParams& params, const SimulateOptions& options);

// Automatic step: min(safety T_loc / 1000, 0.5 / (max|u|^k xi_max), dt_max).
double automatic_dt(const Field& u, const ModelParams& params, double s_track, double safety, double dt_max);

// First recorded time with |u_x|^2 > cap or an H1 spectral tail above 1%.
std::optional<double> detect_blowup(const InvariantSeries& series, double cap);

// Plain-text spectral checkpoint: '#'-prefixed metadata lines (n, length, t,
// k, mu) followed by one "re,im" line per coefficient in transform order.
void write_checkpoint(const std::string& path, const SimState& st);
SimState read_checkpoint(const std::string& path);

}  // namespace gkdv
