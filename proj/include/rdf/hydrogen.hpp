#pragma once

#include <vector>

#include "rdf/conserved.hpp"
#include "rdf/fields.hpp"
#include "rdf/free_field.hpp"
#include "rdf/interaction.hpp"

// Dirac-Coulomb ground state in the external potential A^0 = Z|e|/r: analytic
// radial functions, an independent shooting integrator, the assembled real
// 8-component field of the bound state, and its charge/energy functionals.

namespace rdf {

// Analytic ground state: gamma = sqrt(1 - (Z alpha)^2), k0 = kappa gamma,
//   g(r) = norm * r^(gamma-1) exp(-Z alpha kappa r),
//   f(r) = -g(r) (1 - gamma)/(Z alpha),
// normalized so integral (g^2 + f^2) d3x = 1.
struct RadialGroundState {
  double Z = 1.0;
  double alpha_fs = 1.0 / 137.035999;
  double kappa = 1.0;
  double gamma_exp = 0.0;  // sqrt(1 - (Z alpha)^2)
  double k0 = 0.0;         // kappa * gamma_exp
  double decay = 0.0;      // Z alpha kappa
  double f_over_g = 0.0;   // -(1 - gamma)/(Z alpha)
  double norm = 0.0;

  double bohr_radius() const { return 1.0 / decay; }
  double g(double r) const;
  double f(double r) const;
  // d/dr log g = (gamma - 1)/r - decay (same for f).
  double log_deriv(double r) const;
};

// Throws std::invalid_argument when Z * alpha_fs >= 1 (supercritical).
RadialGroundState hydrogen_ground_state(double Z, double alpha_fs,
                                        double kappa);

// Independent shooting solution of the radial system on a logarithmic grid,
// matched at the classical turning point. Profiles are normalized like the
// analytic state.
struct ShootingSolution {
  double k0 = 0.0;
  std::vector<double> r;
  std::vector<double> g;
  std::vector<double> f;
  int bisection_steps = 0;
};

struct ShootingOptions {
  int n_points = 6000;       // >= 4000 per the radial-grid choice
  double r_lo_bohr = 1e-6;   // grid start, units of the Bohr radius
  double r_hi_bohr = 40.0;
};

ShootingSolution hydrogen_shoot(double Z, double alpha_fs, double kappa,
                                const ShootingOptions& opt = {});

// Coulomb potential A^alpha = (Z |e| / r, 0) with exact gradient.
FourPotentialFn coulomb_potential(double Z, double e_abs);

// The real 8-component bound-state field, with exact first derivatives.
FieldSampler hydrogen_phi(const RadialGroundState& st);

// The 4-spinor phi_a of the same state (g, f times the s/p spinor harmonics,
// stationary phase e^{-i k0 x0}).
SpinorSampler hydrogen_phi_a(const RadialGroundState& st);

struct HydrogenObservables {
  double norm_integral = 0.0;   // integral (g^2 + f^2) d3x by quadrature
  double Q = 0.0;               // via the interacting charge functional
  double Q_radial = 0.0;        // via const_Q kappa^2/pi * norm_integral
  double P0 = 0.0;              // via the energy functional
  double P0_radial = 0.0;       // via const_P kappa K k0 / pi * norm_integral
  double singular_radius = 0.0; // shell where (e/K)^2 A_b A^b = 1
  double q_below_singular_shell = 0.0;  // charge fraction inside that shell
  NormalizationLedger ledger;
};

// Evaluates the bound-state functionals with the bound-state normalization
// selection. n_r controls the radial quadrature resolution.
HydrogenObservables hydrogen_observables(const RadialGroundState& st,
                                         const CouplingParams& cp,
                                         int n_r = 4000);

// Composite Simpson rule for integral fn(r) dr on a log-spaced grid.
double radial_log_integral(const std::function<double(double)>& fn,
                           double r_lo, double r_hi, int n);

}  // namespace rdf
