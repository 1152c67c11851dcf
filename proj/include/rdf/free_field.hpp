#pragma once

#include <functional>

#include "rdf/algebra.hpp"
#include "rdf/fields.hpp"

// Exact free-field solutions, the first-order operator D = d_alpha eta^alpha,
// Lagrangian / canonical-equation residuals, and the Maxwell correspondence
// obtained by packing electromagnetic potentials into the 8-component field.

namespace rdf {

// Plane wave propagating along z: k0 = sqrt(kappa^2 + k^2).
struct PlaneWaveParams {
  double kappa = 1.0;
  double k = 1.0;
  double box_L = 2.0 * 3.14159265358979323846;

  double k0() const;
  // k * box_L / (2 pi), integer when the wave fits the periodic box.
  double box_modes() const;
  bool commensurate(double tol = 1e-9) const;
  void validate() const;  // throws std::invalid_argument
};

// Default finite-difference step for fields varying on the 1/kappa scale.
inline double default_step(double kappa) { return 1e-3 / kappa; }

// D Phi = sum_alpha eta^alpha d_alpha Phi. Uses the sampler's exact
// derivatives when present, else 4th-order central differences with step h.
ComplexField8 dirac_op(const FieldSampler& f, const FourVector& x, double h);

// The sampler of the exact real plane-wave solution, with exact first and
// second derivatives. Satisfies (D - kappa N) Phi = 0 identically and
// Phi^+ Phi = 2 everywhere.
FieldSampler plane_wave_phi(const PlaneWaveParams& p);

// The matching 4-spinor plane wave
//   phi_a = sqrt((k0+kappa)/2k0) (1, 0, k/(k0+kappa), 0) e^{-i(k0 x0 - k z)},
// equal to to_dirac(plane_wave_phi).phi_a with no extra phase.
SpinorSampler plane_wave_dirac(const PlaneWaveParams& p);

// Dirac spinor residual (i gamma^alpha d_alpha - kappa) phi_a.
Vec4c dirac_spinor_residual(const SpinorSampler& f, const FourVector& x,
                            double kappa, double h);

// Electromagnetic potentials: the four-vectors A^alpha = (phi, A_vec) and
// C^alpha = (f, C_vec), each with an optional exact gradient
// grad(x, mu)[alpha] = d_mu X^alpha.
struct FourPotentialFn {
  std::function<std::array<double, 4>(const FourVector&)> value;
  std::function<std::array<double, 4>(const FourVector&, int)> grad;

  bool has_grad() const { return static_cast<bool>(grad); }
  std::array<double, 4> d(const FourVector& x, int mu, double h) const;
};

struct EMPotentials {
  FourPotentialFn A;  // A^alpha, A^0 is the scalar potential
  FourPotentialFn C;  // C^alpha, C^0 is the scalar f

  static EMPotentials zero();
};

// Packs the potentials into the field column
//   Phi = (-A_x, -A_y, -A_z, f, C_x, C_y, C_z, -phi).
FieldSampler em_phi_column(const EMPotentials& em);

// Field-strength data per the generalized Maxwell construction.
struct MaxwellFields {
  Mat<double, 4> F;       // F^{alpha beta}
  Mat<double, 4> F_dual;  // dual tensor including the C contribution
  double F_scalar = 0.0;  // d_alpha C^alpha
  double G_scalar = 0.0;  // d_alpha A^alpha
};

MaxwellFields maxwell_fields(const EMPotentials& em, const FourVector& x,
                             double h);

// Assembles the Psi column (E, F, B, G) from the field strengths; equals
// dirac_op applied to em_phi_column (the identity Psi = D Phi).
RealField8 maxwell_assemble(const EMPotentials& em, const FourVector& x,
                            double h);

// Residual 4-vectors of the generalized free Maxwell equations
//   d_alpha (F^{alpha beta} + g^{alpha beta} G) = 0
//   d_alpha (Fdual^{alpha beta} + g^{alpha beta} F) = 0.
struct MaxwellResidual {
  std::array<double, 4> field_eq{};
  std::array<double, 4> dual_eq{};
  double max_abs() const;
};

MaxwellResidual maxwell_residual(const EMPotentials& em, const FourVector& x,
                                 double h);

// L = K (Psibar Psi - kappa^2 Phibar Phi) with Psi = D Phi, Xbar = X^+ eta^0.
double lagrangian_density(const FieldSampler& phi, double kappa, double K,
                          const FourVector& x, double h);

// Xbar Y = X^+ eta^0 Y.
cplx bar_product(const ComplexField8& x, const ComplexField8& y);

struct CanonicalReport {
  double evolution_residual = 0.0;        // d0 Phi = eta0 Psi - eta0 eta^j d_j Phi
  double evolution_residual_adj = 0.0;    // adjoint equation
  double field_eq_residual = 0.0;         // D Psi + kappa^2 Phi = 0
  double field_eq_residual_adj = 0.0;     // barred form
  double klein_gordon_residual = 0.0;     // (d^2 + kappa^2) Phi = 0
  ComplexField8 momentum_phi;             // row c Pi_Phi = K Psi^+, stored as K conj(Psi)
  ComplexField8 momentum_phi_dag;         // c Pi_{Phi^+} = K Psi
  double max_residual() const;
};

// Residuals of the canonical equations and the Klein-Gordon equation for the
// massive free field, evaluated at x. All vanish on exact solutions.
CanonicalReport canonical_check(const FieldSampler& phi, double kappa,
                                double K, const FourVector& x, double h);

// Klein-Gordon residual alone: (d_alpha d^alpha + kappa^2) Phi.
ComplexField8 klein_gordon_residual(const FieldSampler& phi, double kappa,
                                    const FourVector& x, double h);

// Builds the Psi = D Phi sampler; derivatives come from phi.d2 when exact.
FieldSampler derived_psi_sampler(const FieldSampler& phi, double h);

}  // namespace rdf
