#pragma once

#include "rdf/fields.hpp"
#include "rdf/free_field.hpp"

// Electromagnetic coupling: the matrix potential a = (e/K) A_beta eta^beta,
// the F1/F2 interaction factors, the interacting Lagrangian and field
// equations, and the source current feeding back into the wave equation for
// A^alpha.

namespace rdf {

struct CouplingParams {
  double e = -1.0;   // charge coupling (electron: e < 0)
  double K = 1.0;    // Lagrangian constant
  double kappa = 1.0;
};

struct singular_potential_error : std::runtime_error {
  double a_squared;  // scalar (e/K)^2 A_beta A^beta at the offending point
  explicit singular_potential_error(double s);
};

// a = (e/K) A_beta eta^beta built from the contravariant components A^alpha.
Mat8r a_op(const std::array<double, 4>& A_upper, double e, double K);

// The scalar s with a^2 = s * identity: s = (e/K)^2 A_beta A^beta.
double a_squared_scalar(const std::array<double, 4>& A_upper, double e,
                        double K);

// (F1, F2) with F2 = 1 + a and F1 = (1 - a)/(1 - s) = (1 + a)^{-1}.
// Throws singular_potential_error when |1 - s| <= 1e-12.
std::pair<Mat8r, Mat8r> f1_f2(const std::array<double, 4>& A_upper, double e,
                              double K);

// L_DI = K [ Psibar (1-a) Psi / (1-s) - kappa^2 Phibar (1+a) Phi ],
// Psi = D Phi. Reduces to the free Lagrangian at A = 0.
double lagrangian_density_int(const FieldSampler& phi, const FourPotentialFn& A,
                              const CouplingParams& cp, const FourVector& x,
                              double h);

// Linearized interaction current (1/c) j^alpha = e (Psibar eta^alpha Psi +
// kappa^2 Phibar eta^alpha Phi), evaluated from field values.
std::array<double, 4> linearized_current(const ComplexField8& phi,
                                         const ComplexField8& psi,
                                         const CouplingParams& cp);

struct InteractingResidual {
  ComplexField8 real_form;    // [D - kappa (1+a) N] Phi
  ComplexField8 psi1_form;    // [iD - kappa (1+a)] Psi_I, Psi_I = kappa(1+iN)Phi
  Vec4c spinor_form;          // [i gamma d - kappa (1+atilde)] phi_a
  double max_abs() const;
};

// The three equivalent residual forms of the interacting field equation; they
// vanish together on solutions.
InteractingResidual interacting_residual(const FieldSampler& phi,
                                         const FourPotentialFn& A,
                                         const CouplingParams& cp,
                                         const FourVector& x, double h);

// Full right-hand side of the wave equation for A^alpha,
//   4 pi e [ kappa^2 Phibar eta Phi + Psibar eta Psi/(1-s)
//            - 2 (e/K) A^alpha Psibar (1-a) Psi / (1-s)^2 ],
// evaluated from the field values; psi must be the canonical partner
// (for family solutions Psi = (1+a) kappa N Phi).
std::array<double, 4> em_source(const ComplexField8& phi,
                                const ComplexField8& psi,
                                const std::array<double, 4>& A_upper,
                                const CouplingParams& cp);

// Family-solution form of the source: 4 pi e 2 kappa^2 Phibar eta^alpha Phi.
std::array<double, 4> em_source_family(const ComplexField8& phi,
                                       const CouplingParams& cp);

// Family partner in the interacting case, Psi = (1+a) kappa N Phi.
ComplexField8 interacting_family_psi(const ComplexField8& phi,
                                     const std::array<double, 4>& A_upper,
                                     const CouplingParams& cp);

struct InteractingCanonicalReport {
  double momentum_identity = 0.0;     // D Phi - (1+a) c/K Pi_{Phi+}
  double momentum_identity_adj = 0.0;
  double field_eq_residual = 0.0;     // D(c/K Pi_{Phi+}) + kappa^2 (1+a) Phi
  double field_eq_residual_adj = 0.0;
  ComplexField8 momentum_phi_dag;     // c Pi_{Phi+} = (1-a) Psi / (1-s)
  double max_residual() const;
};

// Residuals of the interacting canonical equations at x.
InteractingCanonicalReport canonical_check_int(const FieldSampler& phi,
                                               const FourPotentialFn& A,
                                               const CouplingParams& cp,
                                               const FourVector& x, double h);

}  // namespace rdf
