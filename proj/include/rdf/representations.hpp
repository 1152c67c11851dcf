#pragma once

#include <utility>

#include "rdf/algebra.hpp"
#include "rdf/fields.hpp"

// Conversions between the real 8-component field Phi, its partner Psi, the
// complex combinations Psi_I / Psi_II = kappa Phi +/- i Psi, and the pair of
// 4-component Dirac spinors obtained through the S transform.

namespace rdf {

// Thrown when a field that must be real carries imaginary parts beyond
// tolerance; carries the offending residue.
struct reality_error : std::runtime_error {
  double max_imag;
  explicit reality_error(double imag);
};

inline constexpr double kRealityTol = 1e-10;

// Psi_I = kappa Phi + i Psi, Psi_II = kappa Phi - i Psi. For real inputs
// Psi_II is the complex conjugate of Psi_I.
std::pair<ComplexField8, ComplexField8> compose_psi12(const RealField8& phi,
                                                      const RealField8& psi,
                                                      double kappa);

// Inverse of compose_psi12. Requires psi2 = conj(psi1) within kRealityTol;
// throws reality_error otherwise. Imaginary residue is discarded after the
// check.
std::pair<RealField8, RealField8> decompose_psi12(const ComplexField8& psi1,
                                                  const ComplexField8& psi2,
                                                  double kappa);

// S Phi split into (phi_a, phi_b); for real Phi, phi_b = N_b conj(phi_a).
DiracPair to_dirac(const RealField8& phi);
DiracPair to_dirac(const ComplexField8& phi);

// S^+ [phi_a; N_b conj(phi_a)], which is real for any phi_a.
RealField8 from_dirac(const Vec4c& phi_a);

// The family partner Psi = kappa N Phi.
RealField8 family_psi(const RealField8& phi, double kappa);

}  // namespace rdf
