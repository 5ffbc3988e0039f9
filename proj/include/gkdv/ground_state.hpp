#pragma once

// Ground state Q of Q'' - Q + Q^(k+1) = 0, the rescaled profile psi of
// (k/4) psi'' - (1 + k/4) psi + psi^(k+1) = 0, and the sharp
// Gagliardo-Nirenberg constant built from either of them.
//
// Q is sampled from the closed form
//     Q(x) = ((k+2)/2)^(1/k) sech^(2/k)(k x / 2),
// which the tests check against the ODE residual and a shooting solver.

#include "gkdv/spectral.hpp"

namespace gkdv {

// Q(x) = lambda psi(omega x)
struct PsiRelation {
  double lambda;
  double omega;
};

struct GroundStateProfile {
  int k;
  Field samples;
  double mass;     // |Q|_2^2
  double grad_sq;  // |Q'|_2^2
  double lkp2;     // |Q|_{k+2}^{k+2}
  double energy;   // focusing energy E(Q)
  PsiRelation relation;
};

// Relative residuals of the two identities obtained from the ODE:
//   (k+4)/(2(k+2)) |Q|_{k+2}^{k+2} = |Q|_2^2   and   |Q|_2^2 = (k+4)/k |Q'|_2^2,
// plus the energy identity E(Q) = (k-4)/(2(k+4)) |Q|_2^2 it implies.
struct PohozhaevReport {
  double lkp2_identity;
  double gradient_identity;
  double energy_identity;
};

enum class GnMethod { via_psi, via_Q };

double ground_state_amplitude(int k);
double ground_state_value(int k, double x);
PsiRelation psi_relation(int k);

// Throws std::invalid_argument for k < 1 or when Q(L/2) >= 1e-12.
GroundStateProfile ground_state_profile(int k, const Grid& grid);
Field psi_profile(int k, const Grid& grid);

// sup |Q'' - Q + Q^(k+1)| / sup |Q| with spectral second derivative.
double ground_state_residual(const Field& q, int k);
// Same for the psi equation.
double psi_residual(const Field& psi, int k);

PohozhaevReport pohozhaev_report(const GroundStateProfile& p);

// A grid on which Q and psi for power k are resolved to round-off.
Grid reference_grid(int k);

// K_opt^(k+2). via_psi integrates |psi|_2^2 on reference_grid(k);
// via_Q uses the stored high-precision |Q|_2^2 (quadrature fallback beyond
// the stored range).
double sharp_gn_constant(int k, GnMethod method);

// |f|_{k+2}^{k+2} / (|f'|_2^{k/2} |f|_2^{2+k/2}). Throws for the zero field and
// for fields with vanishing derivative.
double gn_quotient(const Field& f, int k);

// Q'' - Q + Q^(k+1) = 0 by shooting from (a, 0) at x = 0 with bisection on a.
// Returns samples on the grid (mirrored about 0, exponential tail past the
// matching point). Throws std::runtime_error if the bracket fails.
struct ShootingResult {
  Field samples;
  double peak;
  int iterations;
};
ShootingResult solve_ground_state_ode(int k, const Grid& grid);

}  // namespace gkdv
